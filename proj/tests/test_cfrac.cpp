// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "gfconj/cfrac.hpp"
#include "gfconj/error.hpp"
#include "gfconj/text.hpp"

using namespace gfconj;

namespace {

Poly P(const Field& f, const char* s) { return parse_poly(f, s); }

}  // namespace

TEST_CASE("reduced surds") {
  const Field& f2 = Field::get(2);
  auto ctx = standard_context(P(f2, "x"), P(f2, "1"));
  Surd s = standard_start(ctx);
  CHECK(is_reduced(s));
  CHECK(degree(s) == Degree(1));
  CHECK(conjugate_degree(s).value() < 0);
  const Field& f3 = Field::get(3);
  auto c3 = standard_context(Poly(f3), P(f3, "x^2+1"));
  CHECK_FALSE(is_reduced(make_surd(c3, Poly(f3), P(f3, "1"))));
  CHECK_FALSE(is_reduced(standard_start(c3)));
  CHECK(is_reduced(cf_step(standard_start(c3)).next));
  CHECK_THROWS_AS(make_surd(c3, Poly(f3), P(f3, "x")), InvalidInput);
}

TEST_CASE("first step and periods") {
  const Field& f2 = Field::get(2);
  auto ctx = standard_context(P(f2, "x"), P(f2, "1"));
  auto step = cf_step(standard_start(ctx));
  CHECK(step.A == P(f2, "x"));
  auto ex = expand_periodic(standard_start(ctx), period_bound(*ctx));
  CHECK(ex.preperiod.empty());
  REQUIRE(ex.period.size() == 1);
  CHECK(ex.period[0] == P(f2, "x"));
  CHECK(ex.within_stated_bound);
  CHECK(period_bound(*ctx) == 4);

  const Field& f3 = Field::get(3);
  auto c3 = standard_context(Poly(f3), P(f3, "x^2+1"));
  Surd root = make_surd(c3, Poly(f3), P(f3, "1"));
  auto st = cf_step(root);
  CHECK(st.A == P(f3, "x"));
  auto eq = equation(st.next);
  CHECK(eq.a.deg() <= 2);
  CHECK(eq.b.deg() <= 2);
  CHECK(eq.c.deg() <= 2);
  auto e3 = expand_periodic(root, period_bound(*c3));
  CHECK(e3.period_length() <= std::size_t(period_bound(*c3)));
  CHECK(e3.within_stated_bound);
}

TEST_CASE("convergent identity over random real contexts") {
  std::mt19937_64 rng(13);
  int seen = 0;
  for (const Field* f : {&Field::get(2), &Field::get(3), &Field::get(2, 2), &Field::get(5)}) {
    for (int i = 0; i < 80; ++i) {
      std::vector<std::uint16_t> bc(std::size_t(1 + rng() % 3)), cc(std::size_t(1 + rng() % 5));
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
      if (ctx->m() > 3) continue;
      ++seen;
      Surd s = standard_start(ctx);
      auto ex = expand_periodic(s, period_bound(*ctx));
      CHECK(ex.within_stated_bound);
      CHECK(ex.period_length() >= 1);
      // Every expanded state stays reduced and keeps Q | N.
      for (std::size_t n = f->char2() ? 0 : 1; n < ex.states.size(); ++n) {
        const Surd& st = ex.states[n];
        CHECK(is_reduced(st));
        CHECK(ctx->norm(st.P, P(*f, "1")).divisible_by(st.Q));
      }
      // Determinant identity of consecutive convergents.
      const auto& cv = ex.conv;
      for (std::size_t n = 1; n + 1 < cv.P.size(); ++n) {
        Poly det = cv.P[n + 1] * cv.Q[n] - cv.P[n] * cv.Q[n + 1];
        CHECK(det.deg() == 0);
      }
    }
  }
  CHECK(seen > 10);
}
