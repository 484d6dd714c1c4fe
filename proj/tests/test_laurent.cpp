// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gfconj/error.hpp"
#include "gfconj/laurent.hpp"
#include "gfconj/text.hpp"

using namespace gfconj;

namespace {

Poly P(const Field& f, const char* s) { return parse_poly(f, s); }

// r^2 + b r + c vanishes at every exponent in [lo, top of r^2].
bool vanishes_to(const LaurentSeries& r, const Poly& b, const Poly& c, int lo) {
  const Field& f = r.field();
  const int prec = r.prec() + 8;
  const LaurentSeries r2 = r * r;
  const LaurentSeries br =
      b.is_zero() ? LaurentSeries::zero(f) : LaurentSeries::from_poly(b, prec) * r;
  const int hi = std::max({r2.top(), br.is_zero() ? r2.top() : br.top(), c.deg()});
  if (r2.low() > lo || (!br.is_zero() && br.low() > lo)) return false;
  for (int e = hi; e >= lo; --e) {
    FieldElement s = f.add(r2.coeff(e), br.coeff(e));
    if (e >= 0) s = f.add(s, c.coeff(std::size_t(e)));
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("inverse") {
  const Field& f2 = Field::get(2);
  auto s = LaurentSeries::from_poly(P(f2, "x+1"), 20).inverse();
  CHECK(s.top() == -1);
  for (int e = -1; e >= s.low(); --e) CHECK(s.coeff(e) == f2.one());
  auto prod = s * LaurentSeries::from_poly(P(f2, "x+1"), 20);
  CHECK(prod.top() == 0);
  CHECK(prod.coeff(0) == f2.one());
  for (int e = -1; e >= prod.low(); --e) CHECK(prod.coeff(e).is_zero());
  CHECK_THROWS_AS(LaurentSeries::zero(f2).inverse(), DivisionByZero);
  CHECK_THROWS_AS(s.coeff(s.low() - 1), PrecisionExhausted);
}

TEST_CASE("random inverse property") {
  std::mt19937_64 rng(4);
  for (const Field* f : {&Field::get(2), &Field::get(3), &Field::get(2, 2), &Field::get(5)}) {
    for (int i = 0; i < 100; ++i) {
      std::vector<std::uint16_t> c(std::size_t(1 + rng() % 6));
      for (auto& x : c) x = std::uint16_t(rng() % f->q());
      if (c.back() == 0) c.back() = 1;
      Poly p = Poly::from_codes(*f, c);
      auto s = LaurentSeries::from_poly(p, 16);
      auto prod = s * s.inverse();
      CHECK(prod.top() == 0);
      CHECK(prod.coeff(0) == f->one());
      for (int e = -1; e >= prod.low(); --e) CHECK(prod.coeff(e).is_zero());
    }
  }
}

TEST_CASE("char 2 series root") {
  const Field& f2 = Field::get(2);
  auto r = quadratic_series_root(P(f2, "x"), P(f2, "1"), 20);
  REQUIRE(r.has_value());
  CHECK(r->prec() >= 20);
  // Frozen from the Artin-Schreier recursion: exponents -(2^j - 1).
  CHECK(r->top() == -1);
  for (int e = -1; e >= -20; --e) {
    const bool one = (e == -1 || e == -3 || e == -7 || e == -15);
    CHECK(r->coeff(e) == (one ? f2.one() : f2.zero()));
  }
  CHECK(vanishes_to(*r, P(f2, "x"), P(f2, "1"), -18));
  CHECK_FALSE(quadratic_series_root(P(f2, "x"), P(f2, "x^3"), 10).has_value());
  CHECK_THROWS_AS(quadratic_series_root(P(f2, "x+1"), P(f2, "x"), 10), RationalCase);
}

TEST_CASE("odd char series root") {
  const Field& f3 = Field::get(3);
  // t^2 = x^2 + 1
  auto r = quadratic_series_root(Poly(f3), P(f3, "2*x^2+2"), 12);
  REQUIRE(r.has_value());
  CHECK(r->top() == 1);
  CHECK(r->coeff(1) == f3.one());
  CHECK(r->coeff(0).is_zero());
  CHECK(r->coeff(-1) == f3.from_int(2));
  CHECK(polynomial_part(*r) == P(f3, "x"));
  CHECK(vanishes_to(*r, Poly(f3), P(f3, "2*x^2+2"), -9));
  CHECK_FALSE(quadratic_series_root(Poly(f3), P(f3, "x^3+1"), 10).has_value());
  // Leading coefficient 2 is not a square in F_3.
  CHECK_FALSE(quadratic_series_root(Poly(f3), P(f3, "x^2+1"), 10).has_value());
  CHECK_THROWS_AS(quadratic_series_root(Poly(f3), P(f3, "2*x^2"), 10), RationalCase);
}

TEST_CASE("random roots satisfy their equation") {
  std::mt19937_64 rng(8);
  for (const Field* f : {&Field::get(2), &Field::get(2, 2), &Field::get(3), &Field::get(3, 2)}) {
    int found = 0;
    for (int i = 0; i < 200; ++i) {
      std::vector<std::uint16_t> bc(std::size_t(rng() % 4)), cc(std::size_t(rng() % 6));
      for (auto& x : bc) x = std::uint16_t(rng() % f->q());
      for (auto& x : cc) x = std::uint16_t(rng() % f->q());
      Poly b = Poly::from_codes(*f, bc), c = Poly::from_codes(*f, cc);
      if (f->char2() && b.is_zero()) continue;
      try {
        auto r = quadratic_series_root(b, c, 16);
        if (!r) continue;
        ++found;
        CHECK(r->prec() >= 16);
        CHECK(vanishes_to(*r, b, c, r->low() + std::max(r->top(), b.deg())));
      } catch (const RationalCase&) {
      }
    }
    CHECK(found > 0);
  }
}
