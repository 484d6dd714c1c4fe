// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "gfconj/error.hpp"
#include "gfconj/quadring.hpp"
#include "gfconj/text.hpp"

using namespace gfconj;

namespace {

Poly P(const Field& f, const char* s) { return parse_poly(f, s); }

Poly random_poly(const Field& f, std::mt19937_64& rng, int max_deg) {
  std::vector<std::uint16_t> c(std::size_t(rng() % std::uint64_t(max_deg + 2)));
  for (auto& x : c) x = std::uint16_t(rng() % f.q());
  return Poly::from_codes(f, c);
}

}  // namespace

TEST_CASE("classification") {
  const Field& f2 = Field::get(2);
  CHECK(standard_context(P(f2, "x"), P(f2, "1"))->kind() == QuadCase::Real);
  auto im = standard_context(P(f2, "x"), P(f2, "x^3"));
  CHECK(im->kind() == QuadCase::Imaginary);
  CHECK(im->imaginary_kind() == ImaginaryKind::OddDegree);
  auto lead = standard_context(P(f2, "x"), P(f2, "x^2"));
  CHECK(lead->kind() == QuadCase::Imaginary);
  CHECK(lead->imaginary_kind() == ImaginaryKind::LeadingObstruction);
  auto insep = standard_context(Poly(f2), P(f2, "x"));
  CHECK(insep->imaginary_kind() == ImaginaryKind::Inseparable);
  auto rat = standard_context(P(f2, "x+1"), P(f2, "x"));  // roots 1 and x
  CHECK(rat->kind() == QuadCase::Rational);
  const Field& f3 = Field::get(3);
  CHECK(standard_context(Poly(f3), P(f3, "x^2+1"))->kind() == QuadCase::Real);
  CHECK(standard_context(Poly(f3), P(f3, "2*x^2+1"))->imaginary_kind() == ImaginaryKind::NonsquareLead);
  CHECK(standard_context(Poly(f3), P(f3, "x^3+1"))->imaginary_kind() == ImaginaryKind::OddDegree);
  CHECK(standard_context(Poly(f3), P(f3, "x^2+2*x+1"))->kind() == QuadCase::Rational);
  CHECK_THROWS_AS(standard_context(P(f3, "x"), P(f3, "1")), InvalidInput);
}

TEST_CASE("norm, conjugate and product examples") {
  const Field& f2 = Field::get(2);
  auto ctx = standard_context(P(f2, "x"), P(f2, "1"));
  QuadInt e(ctx, P(f2, "x"), P(f2, "1"));
  CHECK(e.norm() == P(f2, "1"));
  CHECK(e.conj() == QuadInt(ctx, Poly(f2), P(f2, "1")));
  QuadInt sq = e * e;
  CHECK(sq == QuadInt(ctx, P(f2, "x^2+1"), P(f2, "x")));
  CHECK(sq.norm() == P(f2, "1"));
  const Field& f3 = Field::get(3);
  auto c3 = standard_context(Poly(f3), P(f3, "x^2+1"));
  CHECK(QuadInt(c3, P(f3, "x^2+2"), P(f3, "x")).norm() == P(f3, "1"));
}

TEST_CASE("imaginary degree") {
  const Field& f2 = Field::get(2);
  auto ctx = standard_context(P(f2, "x"), P(f2, "x^3"));
  CHECK(QuadInt(ctx, Poly(f2), P(f2, "1")).deg_imaginary() == HalfDegree{3, false});
  CHECK(QuadInt(ctx, P(f2, "x^2"), P(f2, "x")).deg_imaginary() == HalfDegree{5, false});
  CHECK(QuadInt(ctx, Poly(f2), Poly(f2)).deg_imaginary().neg_inf);
  CHECK(HalfDegree{3, false}.to_string() == "3/2");
}

TEST_CASE("ring properties over random contexts") {
  std::mt19937_64 rng(21);
  for (const Field* f : {&Field::get(2), &Field::get(2, 2), &Field::get(3), &Field::get(5), &Field::get(3, 2)}) {
    for (int i = 0; i < 60; ++i) {
      Poly beta = random_poly(*f, rng, 3), gamma = random_poly(*f, rng, 4);
      if (gamma.is_zero()) continue;
      auto ctx = classify(beta, gamma);
      for (int j = 0; j < 10; ++j) {
        QuadInt a(ctx, random_poly(*f, rng, 4), random_poly(*f, rng, 4));
        QuadInt b(ctx, random_poly(*f, rng, 4), random_poly(*f, rng, 4));
        CHECK((a * b).norm() == a.norm() * b.norm());
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        QuadInt n = a * a.conj();
        CHECK(n.v().is_zero());
        CHECK(n.u() == a.norm());
        // Form coordinates round trip.
        auto [u, v] = ctx->from_form(a.u(), a.v());
        auto back = ctx->to_form(u, v);
        REQUIRE(back.has_value());
        CHECK(back->first == a.u());
        CHECK(back->second == a.v());
        CHECK(ctx->norm(u, v) == a.u() * a.u() + beta * a.u() * a.v() + gamma * a.v() * a.v());
      }
    }
  }
}

TEST_CASE("real series degree matches valuation of the norm") {
  const Field& f3 = Field::get(3);
  auto ctx = standard_context(Poly(f3), P(f3, "x^2+1"));
  CHECK(ctx->delta_degree() == 1);
  CHECK(ctx->delta_floor() == P(f3, "x"));
  // u + Delta v and its conjugate have degrees summing to deg N.
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    QuadInt a(ctx, random_poly(f3, rng, 4), random_poly(f3, rng, 4));
    if (a.u().is_zero() && a.v().is_zero()) continue;
    CHECK(a.degree() + a.conj().degree() == a.norm().degree());
  }
}
