// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "gfconj/error.hpp"
#include "gfconj/text.hpp"
#include "gfconj/units.hpp"

using namespace gfconj;

namespace {

Poly P(const Field& f, const char* s) { return parse_poly(f, s); }

// Smallest positive degree of a norm-1 element with deg u, deg v <= d.
int brute_min_unit_degree(const ContextPtr& ctx, int d) {
  const Field& f = ctx->field();
  int best = -1;
  for_each_poly(f, d, [&](const Poly& u) {
    for_each_poly(f, d, [&](const Poly& v) {
      Poly n = ctx->norm(u, v);
      if (!n.is_one()) return true;
      int deg = QuadInt(ctx, u, v).degree().value_or(0);
      if (deg > 0 && (best < 0 || deg < best)) best = deg;
      return true;
    });
    return true;
  });
  return best;
}

}  // namespace

TEST_CASE("unit examples") {
  const Field& f2 = Field::get(2);
  auto ctx = standard_context(P(f2, "x"), P(f2, "1"));
  auto e = nontrivial_unit(ctx);
  CHECK(e.norm() == P(f2, "1"));
  auto fu = fundamental_unit(ctx);
  CHECK(fu.generator == QuadInt(ctx, P(f2, "x"), P(f2, "1")));
  CHECK(fu.degree_k == 1);

  const Field& f3 = Field::get(3);
  auto c3 = standard_context(Poly(f3), P(f3, "x^2+1"));
  CHECK(nontrivial_unit(c3).norm() == P(f3, "1"));
  auto fu3 = fundamental_unit(c3);
  CHECK(fu3.generator == QuadInt(c3, P(f3, "x^2+2"), P(f3, "x")));
  CHECK(fu3.degree_k == 2);
  CHECK(brute_min_unit_degree(c3, 2) == 2);
}

TEST_CASE("pell") {
  const Field& f3 = Field::get(3);
  auto [u, v] = pell_fundamental(P(f3, "x^2+1"));
  CHECK(u * u - P(f3, "x^2+1") * v * v == P(f3, "1"));
  CHECK(((u == P(f3, "x^2+2") || u == -P(f3, "x^2+2")) && (v == P(f3, "x") || v == -P(f3, "x"))));
  CHECK(u.deg() <= 9);
  const Field& f5 = Field::get(5);
  auto [u5, v5] = pell_fundamental(P(f5, "x^2+2"));
  CHECK(u5 * u5 - P(f5, "x^2+2") * v5 * v5 == P(f5, "1"));
  CHECK(!v5.is_zero());
  auto c5 = standard_context(Poly(f5), P(f5, "x^2+2"));
  const int k = QuadInt(c5, u5, v5).degree().value();
  const int brute = brute_min_unit_degree(c5, 2);
  CHECK(brute > 0);
  CHECK(k == brute);
  CHECK_THROWS_AS(pell_fundamental(P(Field::get(2), "x^2+1")), Unsupported);
  CHECK_THROWS_AS(pell_fundamental(P(f3, "x^3+1")), InvalidInput);
  CHECK_THROWS_AS(pell_fundamental(P(f3, "x^2+2*x+1")), InvalidInput);
}

TEST_CASE("fundamental unit is minimal against brute force") {
  std::mt19937_64 rng(31);
  int seen = 0;
  for (const Field* f : {&Field::get(2), &Field::get(3)}) {
    for (int i = 0; i < 60 && seen < 20; ++i) {
      std::vector<std::uint16_t> bc(std::size_t(1 + rng() % 2)), cc(std::size_t(1 + rng() % 3));
      for (auto& x : bc) x = std::uint16_t(rng() % f->q());
      for (auto& x : cc) x = std::uint16_t(rng() % f->q());
      Poly b = Poly::from_codes(*f, bc), c = Poly::from_codes(*f, cc);
      if (c.is_zero()) continue;
      ContextPtr ctx;
      try {
        ctx = f->char2() ? standard_context(b, c) : standard_context(Poly(*f), c);
      } catch (const InvalidInput&) {
        continue;
      }
      if (ctx->kind() != QuadCase::Real) continue;
      auto fu = fundamental_unit(ctx);
      if (fu.degree_k > 3) continue;
      ++seen;
      CHECK(fu.generator.norm().is_one());
      CHECK(fu.generator.degree() == Degree(fu.degree_k));
      const int brute = brute_min_unit_degree(ctx, fu.degree_k);
      CHECK(brute == fu.degree_k);
    }
  }
  CHECK(seen > 3);
}

namespace {

// Reference: every unit of positive degree has v dividing v(eps), so scan
// the divisors of v(eps) times scalars.
int divisor_scan_degree(const ContextPtr& ctx, const QuadInt& eps) {
  const Field& f = ctx->field();
  const Poly one(f, f.one());
  int best = -1;
  for (const Poly& g : divisors(eps.v()))
    for (FieldElement gam : f.elements()) {
      if (gam.is_zero()) continue;
      const Poly y = g.scaled(gam);
      for (const Poly& x : solve_monic_quadratic(ctx->trace() * y, one - ctx->nrm() * y * y)) {
        const int d = QuadInt(ctx, x, y).degree().value_or(0);
        if (d > 0 && (best < 0 || d < best)) best = d;
      }
    }
  return best;
}

}  // namespace

TEST_CASE("fundamental unit against a divisor scan, larger fields") {
  std::mt19937_64 rng(77);
  int seen = 0;
  for (auto [p, k] : {std::pair{2, 2}, {5, 1}, {7, 1}, {3, 2}, {2, 3}}) {
    const Field& f = Field::get(p, k);
    for (int i = 0; i < 80; ++i) {
      std::vector<std::uint16_t> bc(std::size_t(1 + rng() % 3)), cc(std::size_t(1 + rng() % 5));
      for (auto& x : bc) x = std::uint16_t(rng() % f.q());
      for (auto& x : cc) x = std::uint16_t(rng() % f.q());
      ContextPtr ctx;
      try {
        ctx = classify(Poly::from_codes(f, bc), Poly::from_codes(f, cc));
      } catch (const InvalidInput&) {
        continue;
      }
      if (ctx->kind() != QuadCase::Real) continue;
      const QuadInt eps = nontrivial_unit(ctx);
      if (divisors(eps.v()).size() > 3000) continue;
      const auto fu = fundamental_unit(ctx);
      ++seen;
      CHECK(fu.generator.norm().is_one());
      CHECK(divisor_scan_degree(ctx, eps) == fu.degree_k);
      // eps is +-eta^m.
      const int deg_eps = eps.degree().value();
      REQUIRE(deg_eps % fu.degree_k == 0);
      QuadInt pw = fu.generator;
      for (int j = 1; j < deg_eps / fu.degree_k; ++j) pw = pw * fu.generator;
      CHECK((pw == eps || pw == eps.scaled(f.neg(f.one()))));
    }
  }
  CHECK(seen > 40);
}
