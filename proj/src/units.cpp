// SPDX-License-Identifier: Apache-2.0
#include "gfconj/units.hpp"

#include "gfconj/cfrac.hpp"
#include "gfconj/error.hpp"

namespace gfconj {

namespace {

QuadInt normalize_norm(const QuadInt& eta) {
  const QuadContext& ctx = *eta.context();
  const Field& f = ctx.field();
  const Poly n = eta.norm();
  ensure(n.deg() == 0, "continued-fraction unit has a non-constant norm");
  const FieldElement g = n.lead();
  if (f.char2()) return eta.scaled(f.inv(*f.sqrt(g)));
  if (auto beta = f.sqrt(g)) return eta.scaled(f.inv(*beta));
  return (eta * eta).scaled(f.inv(g));
}

// Canonical representative among F*-multiples: leading u coefficient 1 when
// available, otherwise the smallest leading code.
bool better(const QuadInt& a, const QuadInt& b) {
  const auto la = a.u().lead().code(), lb = b.u().lead().code();
  if ((la == 1) != (lb == 1)) return la == 1;
  if (la != lb) return la < lb;
  if (a.u() < b.u() || b.u() < a.u()) return a.u() < b.u();
  return a.v() < b.v();
}

QuadInt first_cf_unit(const ContextPtr& ctx, int* cf_index) {
  if (ctx->kind() != QuadCase::Real)
    throw InvalidInput("units are computed for real contexts only");
  const Surd start = standard_start(ctx);
  const std::int64_t bound = period_bound(*ctx);
  const std::int64_t cap =
      bound > std::int64_t(1) << 40 ? std::int64_t(1) << 42 : 4 * bound + 4;
  Convergents conv;
  Surd s = start;
  for (std::int64_t n = 1; n <= cap; ++n) {
    CfStep st = cf_step(s);
    conv.push(st.A);
    s = std::move(st.next);
    if (s.Q.deg() != 0) continue;
    const std::size_t i = std::size_t(n);
    const Poly u = start.P * conv.Q[i] - conv.P[i];
    QuadInt eta(ctx, u, conv.Q[i]);
    ensure(!eta.is_constant(), "continued-fraction unit is constant");
    if (eta.degree() < Degree(0)) eta = eta.conj();
    if (cf_index != nullptr) *cf_index = int(n);
    return eta;
  }
  throw InternalInvariantViolation("no constant denominator within the period bound");
}

}  // namespace

QuadInt constant_norm_unit(const ContextPtr& ctx) {
  return first_cf_unit(ctx, nullptr);
}

QuadInt nontrivial_unit(const ContextPtr& ctx, int* cf_index) {
  const Field& f = ctx->field();
  QuadInt eps = normalize_norm(first_cf_unit(ctx, cf_index));
  ensure(eps.norm() == Poly(f, f.one()), "unit normalization failed");
  return eps;
}

namespace {

// g with g^p = f, if any.
std::optional<Poly> checked_pth_root(const Poly& f) {
  const Field& F = f.field();
  if (f.is_zero()) return f;
  const std::size_t p = F.p();
  std::vector<std::uint16_t> r(std::size_t(f.deg()) / p + 1, 0);
  for (std::size_t i = 0; i <= std::size_t(f.deg()); ++i) {
    if (f.coeff(i).is_zero()) continue;
    if (i % p != 0) return std::nullopt;
    r[i / p] = F.pow(f.coeff(i), F.q() / p).code();
  }
  return Poly::from_codes(F, std::move(r));
}

// Polynomials s of degree deg T / m whose m-th power agrees with T in the top
// deg T / m + 1 coefficients; p does not divide m. One per choice of
// leading coefficient.
std::vector<Poly> root_heads(const Poly& T, int m) {
  const Field& f = T.field();
  const int d = T.deg() / m;
  const FieldElement mm = f.from_int(m);
  std::vector<Poly> out;
  for (FieldElement c : f.elements()) {
    if (c.is_zero() || !(f.pow(c, std::uint64_t(m)) == T.lead())) continue;
    const FieldElement den = f.mul(mm, f.pow(c, std::uint64_t(m - 1)));
    Poly s = Poly::monomial(f, c, d);
    for (int k = 1; k <= d; ++k) {
      const FieldElement r = (T - s.pow(std::uint64_t(m))).coeff(std::size_t(T.deg() - k));
      if (!r.is_zero()) s = s + Poly::monomial(f, f.div(r, den), d - k);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

UnitGroupDescription fundamental_unit(const ContextPtr& ctx) {
  int idx = 0;
  const QuadInt eps = nontrivial_unit(ctx, &idx);
  const Field& f = ctx->field();
  const Poly one(f, f.one());
  std::optional<QuadInt> best;
  Degree best_deg = NEG_INF;
  auto consider = [&](const Poly& y) {
    if (y.is_zero()) return;
    for (const Poly& x :
         solve_monic_quadratic(ctx->trace() * y, one - ctx->nrm() * y * y)) {
      QuadInt w(ctx, x, y);
      const Degree d = w.degree();
      if (d <= Degree(0)) continue;
      if (!best || d < best_deg || (d == best_deg && better(w, *best))) {
        best = w;
        best_deg = d;
      }
    }
  };
  // eps = +-eta^m. With s = eta + conj(eta) the polynomial trace, tr(eps) =
  // +-V_m(s), V the Lucas polynomials: V_{pk} = V_k^p, and for p not dividing
  // m, V_m(s) and s^m agree well past the top deg s + 1 coefficients (the
  // rest of V_m has degree at most deg s^m - 2 deg s). So s is the head of an
  // m-th root and y follows from s.
  const Poly T = eps.u() * Poly(f, f.from_int(2)) + ctx->trace() * eps.v();
  const Poly disc = ctx->trace() * ctx->trace() - ctx->nrm() * Poly(f, f.from_int(4));
  const int total = eps.degree().value();
  for (int m = total; m >= 1 && !best; --m) {
    if (total % m != 0) continue;
    int mp = m;
    std::optional<Poly> Tp = T;
    while (mp % int(f.p()) == 0 && Tp) {
      Tp = checked_pth_root(*Tp);
      mp /= int(f.p());
    }
    if (!Tp) continue;
    for (const Poly& sign : {one, -one}) {
      const Poly target = *Tp * sign;
      if (target.is_zero() || target.deg() % mp != 0) continue;
      for (const Poly& s : mp == 1 ? std::vector<Poly>{target} : root_heads(target, mp)) {
        if (f.char2()) {
          if (auto y = s.exact_div(ctx->trace())) consider(*y);
        } else if (auto y2 = (s * s - Poly(f, f.from_int(4))).exact_div(disc)) {
          if (auto y = sqrt(*y2)) {
            consider(*y);
            consider(-*y);
          }
        }
      }
    }
  }
  ensure(best.has_value(), "no root of the continued-fraction unit recovered itself");
  ensure(best->norm() == one, "fundamental unit has norm different from 1");
  return {*best, best_deg.value(), idx};
}

std::pair<Poly, Poly> pell_fundamental(const Poly& D) {
  const Field& f = D.field();
  if (f.char2()) throw Unsupported("Pell u^2 - D v^2 = 1 is inseparable in characteristic 2");
  if (D.deg() < 1 || D.deg() % 2 != 0 || !f.is_square(D.lead()) || sqrt(D))
    throw InvalidInput("D must be non-constant, of even degree, non-square, with square leading coefficient");
  ContextPtr ctx = standard_context(Poly(f), D);
  ensure(ctx->kind() == QuadCase::Real, "positive D gave a non-real context");
  const auto desc = fundamental_unit(ctx);
  return {desc.generator.u(), desc.generator.v()};
}

}  // namespace gfconj
