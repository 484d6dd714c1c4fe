// SPDX-License-Identifier: Apache-2.0
#include "gfconj/cfrac.hpp"

#include <limits>
#include <map>

#include "gfconj/error.hpp"

namespace gfconj {

std::int64_t saturating_pow(std::int64_t base, std::int64_t exp) {
  const std::int64_t cap = std::numeric_limits<std::int64_t>::max() / 4;
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap;
    r *= base;
  }
  return r;
}

Surd make_surd(ContextPtr ctx, const Poly& P, const Poly& Q) {
  if (ctx->kind() != QuadCase::Real) throw InvalidInput("surds need a real context");
  if (Q.is_zero()) throw DivisionByZero("surd with zero denominator");
  const Poly n = ctx->norm(P, Poly(ctx->field(), ctx->field().one()));
  if (!n.divisible_by(Q)) throw InvalidInput("surd denominator must divide the norm");
  return {std::move(ctx), P, Q};
}

SurdEquation equation(const Surd& s) {
  const Field& f = s.ctx->field();
  const Poly one(f, f.one());
  const Poly n = s.ctx->norm(s.P, one);
  return {s.Q, -(s.P + s.P + s.ctx->trace()), n / s.Q};
}

Degree degree(const Surd& s) {
  const Field& f = s.ctx->field();
  return s.ctx->series_degree(s.P, Poly(f, f.one())) - s.Q.deg();
}

Degree conjugate_degree(const Surd& s) {
  const Field& f = s.ctx->field();
  auto [u, v] = s.ctx->conj(s.P, Poly(f, f.one()));
  return s.ctx->series_degree(u, v) - s.Q.deg();
}

bool is_reduced(const Surd& s) {
  return degree(s) > Degree(0) && conjugate_degree(s) < Degree(0);
}

CfStep cf_step(const Surd& s) {
  const QuadContext& ctx = *s.ctx;
  const Field& f = ctx.field();
  const Poly one(f, f.one());
  const Poly A = (s.P + ctx.delta_floor()) / s.Q;
  const Poly Pp = s.P - A * s.Q;
  // 1/(rho - A) = Q (P' + Delta') / N(P' + Delta) with Delta' = trace - Delta.
  const Poly n = ctx.norm(Pp, one);
  auto qn = n.exact_div(s.Q);
  ensure(qn.has_value(), "surd denominator no longer divides the norm");
  ensure(!qn->is_zero(), "continued fraction reached a rational value");
  Surd next{s.ctx, -Pp - ctx.trace(), -*qn};
  return {A, std::move(next)};
}

void Convergents::push(const Poly& A) {
  const Field& f = A.field();
  if (P.empty()) {
    P = {Poly(f, f.one()), A};
    Q = {Poly(f), Poly(f, f.one())};
  } else {
    const std::size_t n = P.size() - 1;
    // A is A_n; produce index n + 1.
    P.push_back(P[n] * A + P[n - 1]);
    Q.push_back(Q[n] * A + Q[n - 1]);
  }
  partial_quotients.push_back(A);
}

std::int64_t period_bound(const QuadContext& ctx) {
  const std::int64_t q = ctx.field().q();
  const int m = ctx.m();
  return ctx.char2() ? saturating_pow(q, 2 * m) : saturating_pow(q, 3 * m);
}

Surd standard_start(ContextPtr ctx) {
  const Field& f = ctx->field();
  const Poly one(f, f.one());
  if (ctx->char2()) return make_surd(ctx, ctx->trace(), one);
  return make_surd(ctx, Poly(f), one);
}

namespace {

struct StateKey {
  Poly P, Q;
  bool operator<(const StateKey& o) const {
    if (P < o.P) return true;
    if (o.P < P) return false;
    return Q < o.Q;
  }
};

void check_membership(const Surd& s) {
  const QuadContext& ctx = *s.ctx;
  const SurdEquation e = equation(s);
  const int m = ctx.m();
  if (ctx.char2()) {
    ensure(e.b == ctx.trace(), "char-2 surd lost its middle coefficient");
    ensure(e.a.deg() < m && e.c.deg() < m, "char-2 surd left the bounded set");
  } else {
    ensure(e.a.deg() <= m && e.b.deg() <= m && e.c.deg() <= m,
           "odd-char surd coefficient degree exceeds m");
  }
}

}  // namespace

Expansion expand_periodic(const Surd& s, std::int64_t bound) {
  Expansion ex;
  ex.stated_bound = bound;
  std::map<StateKey, std::size_t> seen;
  ex.states.push_back(s);
  seen.emplace(StateKey{s.P, s.Q}, 0);
  bool reduced = is_reduced(s);
  if (reduced) check_membership(s);
  const std::int64_t cap = bound >= std::numeric_limits<std::int64_t>::max() / 8
                               ? std::numeric_limits<std::int64_t>::max()
                               : 4 * bound;
  for (std::int64_t n = 0;; ++n) {
    if (n >= cap)
      throw InternalInvariantViolation("continued fraction did not repeat within 4x the period bound");
    CfStep st = cf_step(ex.states.back());
    ex.conv.push(st.A);
    if (!reduced) reduced = is_reduced(st.next);
    // Char 2 states stay in the bounded set once reduced; odd-char states
    // are bounded from the first step on.
    if (reduced || !s.ctx->char2()) check_membership(st.next);
    auto it = seen.find(StateKey{st.next.P, st.next.Q});
    if (it != seen.end()) {
      const std::size_t start = it->second;
      const auto& A = ex.conv.partial_quotients;
      ex.preperiod.assign(A.begin(), A.begin() + std::ptrdiff_t(start));
      ex.period.assign(A.begin() + std::ptrdiff_t(start), A.end());
      ex.within_stated_bound = std::int64_t(ex.period.size()) <= bound;
      ex.states.push_back(st.next);
      return ex;
    }
    seen.emplace(StateKey{st.next.P, st.next.Q}, ex.states.size());
    ex.states.push_back(std::move(st.next));
  }
}

}  // namespace gfconj
