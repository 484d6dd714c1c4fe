// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "gfconj/error.hpp"
#include "gfconj/normsolver.hpp"
#include "gfconj/oracle.hpp"
#include "gfconj/text.hpp"

using namespace gfconj;
using PP = std::pair<Poly, Poly>;

namespace {

Poly P(const Field& f, const char* s) { return parse_poly(f, s); }

Poly random_poly(const Field& f, std::mt19937_64& rng, int max_deg) {
  std::vector<std::uint16_t> c(std::size_t(rng() % std::uint64_t(max_deg + 2)));
  for (auto& x : c) x = std::uint16_t(rng() % f.q());
  return Poly::from_codes(f, c);
}

// Paper convention as a form: char 2 u^2 + buv + cv^2, odd u^2 - cv^2.
std::vector<PP> solver_paper(const Poly& b, const Poly& c, const Poly& d, int max_deg) {
  const Field& f = c.field();
  const Poly one(f, f.one());
  return f.char2() ? form_solutions_up_to(b, c, one, d, max_deg)
                   : form_solutions_up_to(Poly(f), -c, one, d, max_deg);
}

std::vector<PP> as_pairs(const std::vector<QuadInt>& ws) {
  std::vector<PP> out;
  for (const auto& w : ws) out.emplace_back(w.u(), w.v());
  return out;
}

}  // namespace

TEST_CASE("rational contexts") {
  const Field& f2 = Field::get(2);
  // b = 0, c = x^2+x: the split equations force v~ = 0, u~ = 1.
  auto c0 = standard_context(Poly(f2), P(f2, "x^2+x"));
  auto s0 = solve_rational(c0, P(f2, "1"));
  CHECK_FALSE(s0.infinite);
  CHECK(as_pairs(s0.solutions) == std::vector<PP>{{P(f2, "1"), Poly(f2)}});
  // Roots x and 1: t^2 + (x+1) t + x.
  auto c1 = standard_context(P(f2, "x+1"), P(f2, "x"));
  REQUIRE(c1->kind() == QuadCase::Rational);
  auto s1 = solve_rational(c1, P(f2, "x"));
  CHECK(as_pairs(s1.solutions) == std::vector<PP>{{Poly(f2), P(f2, "1")}, {P(f2, "x+1"), P(f2, "1")}});
  CHECK(solver_paper(P(f2, "x+1"), P(f2, "x"), P(f2, "x"), 3) ==
        oracle::brute_norm_solutions(P(f2, "x+1"), P(f2, "x"), P(f2, "x"), {3}));
  // d = 0 is an infinite family containing (0, 0).
  auto z = solve_rational(c1, Poly(f2));
  CHECK(z.infinite);
  CHECK(as_pairs(z.solutions).front() == PP{Poly(f2), Poly(f2)});
  // Repeated root in odd characteristic: u^2 = d.
  const Field& f3 = Field::get(3);
  auto c3 = standard_context(Poly(f3), Poly(f3));
  auto s3 = solve_rational(c3, P(f3, "x^2+2*x+1"), 1);
  CHECK(s3.infinite);
  CHECK(s3.family_u0.size() == 2);
  CHECK(s3.solutions.size() == 2 * 9);
  CHECK_THROWS_AS(solve_rational(standard_context(P(f2, "x"), P(f2, "1")), P(f2, "1")), InvalidInput);
}

TEST_CASE("imaginary contexts") {
  const Field& f2 = Field::get(2);
  auto ctx = standard_context(P(f2, "x"), P(f2, "x^3"));
  CHECK(as_pairs(solve_imaginary(ctx, P(f2, "1"))) == std::vector<PP>{{P(f2, "1"), Poly(f2)}});
  auto sc = as_pairs(solve_imaginary(ctx, P(f2, "x^3")));
  CHECK(std::find(sc.begin(), sc.end(), PP{Poly(f2), P(f2, "1")}) != sc.end());
  CHECK(solve_imaginary(ctx, P(f2, "x")).empty());
  CHECK(oracle::brute_norm_solutions(P(f2, "x"), P(f2, "x^3"), P(f2, "x"), {4}).empty());
  CHECK(solver_paper(P(f2, "x"), P(f2, "x^3"), P(f2, "1"), 2) ==
        oracle::brute_norm_solutions(P(f2, "x"), P(f2, "x^3"), P(f2, "1"), {2}));
  CHECK_THROWS_AS(solve_imaginary(standard_context(P(f2, "x"), P(f2, "1")), P(f2, "1")), InvalidInput);
}

TEST_CASE("real contexts") {
  const Field& f3 = Field::get(3);
  auto c3 = standard_context(Poly(f3), P(f3, "x^2+1"));
  auto unit = fundamental_unit(c3);
  auto fam = solve_real_base(c3, P(f3, "2*x^2+2"), unit);
  bool has01 = false;
  for (const auto& w : fam.base_solutions) {
    CHECK(w.norm() == P(f3, "2*x^2+2"));
    CHECK(w.degree() >= Degree(0));
    CHECK(w.degree() < Degree(unit.degree_k));
    if (w.u().is_zero() && w.v() == P(f3, "1")) has01 = true;
  }
  CHECK(has01);
  // d = 1: the base solutions are the constants of norm 1.
  auto one = solve_real_base(c3, P(f3, "1"), unit);
  CHECK(as_pairs(one.base_solutions) == std::vector<PP>{{P(f3, "1"), Poly(f3)}, {P(f3, "2"), Poly(f3)}});

  const Field& f2 = Field::get(2);
  CHECK(solver_paper(P(f2, "x"), P(f2, "1"), P(f2, "x^2+x+1"), 3) ==
        oracle::brute_norm_solutions(P(f2, "x"), P(f2, "1"), P(f2, "x^2+x+1"), {3}));
  // Norm 1 up to degree 1: besides 1 and x + Delta also Delta = (x + Delta)^-1
  // and 1 + x Delta = (x + Delta)^-2.
  auto units = oracle::brute_norm_solutions(P(f2, "x"), P(f2, "1"), P(f2, "1"), {1});
  CHECK(units == std::vector<PP>{{Poly(f2), P(f2, "1")}, {P(f2, "1"), Poly(f2)}, {P(f2, "1"), P(f2, "x")}, {P(f2, "x"), P(f2, "1")}});
  CHECK(solver_paper(P(f2, "x"), P(f2, "1"), P(f2, "1"), 1) == units);
}

TEST_CASE("roots modulo a polynomial") {
  std::mt19937_64 rng(41);
  for (const Field* f : {&Field::get(2), &Field::get(3), &Field::get(2, 2)}) {
    for (int i = 0; i < 60; ++i) {
      Poly t = random_poly(*f, rng, 2), n = random_poly(*f, rng, 3), e = random_poly(*f, rng, 4);
      if (e.is_zero()) continue;
      e = e.monic();
      auto roots = quadratic_roots_mod(t, n, e);
      std::vector<Poly> brute;
      for_each_poly(*f, e.deg() - 1, [&](const Poly& r) {
        if ((r * r + t * r + n).divisible_by(e)) brute.push_back(r);
        return true;
      });
      std::sort(brute.begin(), brute.end());
      CHECK(roots == brute);
    }
  }
}

TEST_CASE("ideal and enumeration base solutions agree") {
  std::mt19937_64 rng(43);
  int seen = 0;
  for (const Field* f : {&Field::get(2), &Field::get(3), &Field::get(2, 2), &Field::get(5)}) {
    for (int i = 0; i < 120 && seen < 120; ++i) {
      Poly b = random_poly(*f, rng, 2), c = random_poly(*f, rng, 4), d = random_poly(*f, rng, 5);
      if (c.is_zero() || d.is_zero()) continue;
      ContextPtr ctx;
      try {
        ctx = f->char2() ? standard_context(b, c) : standard_context(Poly(*f), c);
      } catch (const InvalidInput&) {
        continue;
      }
      if (ctx->kind() != QuadCase::Real) continue;
      auto unit = fundamental_unit(ctx);
      if (unit.degree_k > 6) continue;
      ++seen;
      auto a = solve_real_base(ctx, d, unit, BaseMethod::Enumerate);
      auto bb = solve_real_base(ctx, d, unit, BaseMethod::Ideals);
      CHECK(as_pairs(a.base_solutions) == as_pairs(bb.base_solutions));
      for (const auto& w : a.base_solutions) {
        // Closure under the unit in both directions.
        CHECK((w * unit.generator).norm() == d);
        CHECK((w * unit.generator.conj()).norm() == d);
      }
    }
  }
  CHECK(seen > 30);
}

TEST_CASE("residue periods") {
  const Field& f2 = Field::get(2);
  auto ctx = standard_context(P(f2, "x"), P(f2, "1"));
  QuadInt e(ctx, P(f2, "x"), P(f2, "1"));
  CHECK(residue_period(e, P(f2, "1")).period == 1);
  auto rp = residue_period(e, P(f2, "x"));
  CHECK(rp.period == 2);
  CHECK(rp.within_paper_bound());
  CHECK_THROWS_AS(residue_period(e, Poly(f2)), InvalidInput);
  // r_{l+T} = r_l on random moduli.
  std::mt19937_64 rng(47);
  for (int i = 0; i < 30; ++i) {
    Poly m = random_poly(f2, rng, 4);
    if (m.is_zero()) continue;
    const auto T = residue_period(e, m).period;
    for (long long l = 0; l <= 2 * T; ++l) {
      QuadInt a = e.pow(l), b = e.pow(l + T);
      CHECK((a.u() - b.u()).divisible_by(m));
      CHECK((a.v() - b.v()).divisible_by(m));
    }
  }
}

TEST_CASE("filter") {
  const Field& f2 = Field::get(2);
  auto ctx = standard_context(P(f2, "x"), P(f2, "1"));
  auto unit = fundamental_unit(ctx);
  auto fam = solve_real_base(ctx, P(f2, "x^2+x+1"), unit);
  auto all = filtered_solutions(fam, {});
  CHECK(all.survivors.size() == fam.base_solutions.size());
  auto ones = filtered_solutions(fam, {{P(f2, "1"), P(f2, "1"), P(f2, "1")}});
  CHECK(ones.survivors.size() == fam.base_solutions.size());
  // A real condition: x | u.
  auto xu = filtered_solutions(fam, {{P(f2, "1"), Poly(f2), P(f2, "x")}});
  for (const auto& s : xu.survivors) CHECK(s.omega.u().divisible_by(P(f2, "x")));
}

TEST_CASE("completeness against brute force") {
  std::mt19937_64 rng(53);
  for (const Field* f : {&Field::get(2), &Field::get(3)}) {
    for (int i = 0; i < 40; ++i) {
      Poly b = f->char2() ? random_poly(*f, rng, 2) : Poly(*f);
      Poly c = random_poly(*f, rng, 2), d = random_poly(*f, rng, 2);
      if (c.is_zero() && d.is_zero()) continue;
      auto mine = solver_paper(b, c, d, 3);
      auto ref = oracle::brute_norm_solutions(b, c, d, {3});
      CHECK_MESSAGE(mine == ref, "b=" << format_poly(b) << " c=" << format_poly(c) << " d=" << format_poly(d));
    }
  }
}
