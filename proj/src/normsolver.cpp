// SPDX-License-Identifier: Apache-2.0
#include "gfconj/normsolver.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include "gfconj/cfrac.hpp"
#include "gfconj/error.hpp"

namespace gfconj {

namespace {

using Key = std::pair<std::vector<std::uint16_t>, std::vector<std::uint16_t>>;

Key key_of(const QuadInt& w) { return {w.u().codes(), w.v().codes()}; }

bool quad_less(const QuadInt& a, const QuadInt& b) {
  if (a.u() < b.u()) return true;
  if (b.u() < a.u()) return false;
  return a.v() < b.v();
}

// Collects verified solutions without duplicates.
class SolutionSet {
 public:
  SolutionSet(const ContextPtr& ctx, const Poly& d) : ctx_(ctx), d_(d) {}
  void add(const Poly& u, const Poly& v) {
    ensure(ctx_->norm(u, v) == d_, "norm solver produced a non-solution");
    QuadInt w(ctx_, u, v);
    if (seen_.insert(key_of(w)).second) out_.push_back(std::move(w));
  }
  void add(const QuadInt& w) { add(w.u(), w.v()); }
  std::vector<QuadInt> take() {
    std::sort(out_.begin(), out_.end(), quad_less);
    return std::move(out_);
  }

 private:
  ContextPtr ctx_;
  Poly d_;
  std::set<Key> seen_;
  std::vector<QuadInt> out_;
};

// u with u^2 = h(x) coefficient-wise, i.e. u(x)^2 = h(x^2). Char 2 only.
Poly frobenius_root(const Poly& h) {
  const Field& f = h.field();
  std::vector<std::uint16_t> c(h.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    c[i] = f.sqrt(h.coeff(i))->code();
  return Poly::from_codes(f, std::move(c));
}

// Per-v recovery: every u with N(u + Delta v) = d for this v.
void recover_u(const QuadContext& ctx, const Poly& d, const Poly& v,
               const std::function<void(const Poly&)>& emit) {
  for (const Poly& u :
       solve_monic_quadratic(ctx.trace() * v, d - ctx.nrm() * v * v))
    emit(u);
}

NormSolutions split_char2(const ContextPtr& ctx, const Poly& d) {
  // u^2 + n v^2 = d with n not a square: u~ + n0 v~ = d0 and n1 v~ = d1.
  NormSolutions out;
  SolutionSet set(ctx, d);
  const auto [n0, n1] = even_odd_split(ctx->nrm());
  const auto [d0, d1] = even_odd_split(d);
  ensure(!n1.is_zero(), "split solver needs a non-square norm coefficient");
  if (auto vt = d1.exact_div(n1)) {
    const Poly ut = d0 + n0 * *vt;
    set.add(frobenius_root(ut), frobenius_root(*vt));
  }
  out.solutions = set.take();
  out.description = "char 2, trace 0: u~ + n0 v~ = d0, n1 v~ = d1";
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

NormSolutions solve_rational(const ContextPtr& ctx, const Poly& d,
                             int instance_deg) {
  const Field& f = ctx->field();
  const bool insep = ctx->kind() == QuadCase::Imaginary &&
                     ctx->imaginary_kind() == ImaginaryKind::Inseparable;
  if (insep) return split_char2(ctx, d);
  if (ctx->kind() != QuadCase::Rational)
    throw InvalidInput("solve_rational needs a rational context");

  NormSolutions out;
  SolutionSet set(ctx, d);
  const Poly& r1 = ctx->root1();
  const Poly& r2 = ctx->root2();
  auto family = [&](std::vector<Poly> u0, const Poly& slope) {
    out.infinite = true;
    out.family_u0 = std::move(u0);
    out.family_slope = slope;
    for (const Poly& base : out.family_u0)
      for_each_poly(f, instance_deg, [&](const Poly& v) {
        set.add(base + slope * v, v);
        return true;
      });
  };

  if (r1 == r2) {
    // (u + r v)^2 = d.
    if (auto s = sqrt(d)) {
      std::vector<Poly> u0{*s};
      if (!f.char2() && !s->is_zero()) u0.push_back(-*s);
      family(std::move(u0), -r1);
      out.description = "repeated root: u = +-sqrt(d) - r v, v free";
    } else {
      out.description = "repeated root and d is not a square";
    }
  } else if (d.is_zero()) {
    out.infinite = true;
    out.family_u0 = {Poly(f)};
    out.family_slope = -r1;
    for_each_poly(f, instance_deg, [&](const Poly& v) {
      set.add(-r1 * v, v);
      set.add(-r2 * v, v);
      return true;
    });
    out.description = "d = 0: u = -r1 v or u = -r2 v, v free";
  } else {
    // (u + r1 v)(u + r2 v) = d: one linear system per factorization.
    const Poly diff = r1 - r2;
    for (const Poly& g : divisors(d)) {
      for (FieldElement lam : f.elements()) {
        if (lam.is_zero()) continue;
        const Poly d1 = g.scaled(lam);
        const Poly d2 = *d.exact_div(d1);
        auto v = (d1 - d2).exact_div(diff);
        if (!v) continue;
        set.add(d1 - r1 * *v, *v);
      }
    }
    out.description = "distinct roots: one linear system per factorization of d";
  }
  out.solutions = set.take();
  return out;
}

std::vector<QuadInt> solve_imaginary(const ContextPtr& ctx, const Poly& d) {
  if (ctx->kind() != QuadCase::Imaginary)
    throw InvalidInput("solve_imaginary needs an imaginary context");
  if (ctx->imaginary_kind() == ImaginaryKind::Inseparable)
    return split_char2(ctx, d).solutions;
  const Field& f = ctx->field();
  SolutionSet set(ctx, d);
  if (d.is_zero()) {
    set.add(Poly(f), Poly(f));
    return set.take();
  }
  // No cancellation between u^2 and nrm v^2 at the top, so
  // 2 deg v + deg nrm <= deg d.
  const int bv = (d.deg() - ctx->nrm().deg());
  if (bv < 0) {
    recover_u(*ctx, d, Poly(f), [&](const Poly& u) { set.add(u, Poly(f)); });
    return set.take();
  }
  for_each_poly(f, bv / 2, [&](const Poly& v) {
    recover_u(*ctx, d, v, [&](const Poly& u) { set.add(u, v); });
    return true;
  });
  return set.take();
}

// ---------------------------------------------------------------------------

std::vector<Poly> quadratic_roots_mod(const Poly& trace, const Poly& nrm,
                                      const Poly& e) {
  const Field& f = e.field();
  if (e.is_zero()) throw InvalidInput("zero modulus");
  if (e.deg() == 0) return {Poly(f)};
  // Roots modulo each prime power by enumeration, then CRT.
  std::vector<Poly> roots{Poly(f)};
  Poly M(f, f.one());
  for (const Factor& fac : factor(e)) {
    const Poly pk = fac.p.pow(std::uint64_t(fac.multiplicity));
    const Poly tk = trace % pk, nk = nrm % pk;
    std::vector<Poly> local;
    for_each_poly(f, pk.deg() - 1, [&](const Poly& r) {
      if ((r * r + tk * r + nk) % pk == Poly(f)) local.push_back(r);
      return true;
    });
    if (local.empty()) return {};
    // x = a + M ((b - a) M^{-1} mod pk)
    const Bezout bz = xgcd(M, pk);
    ensure(bz.g.is_one(), "CRT moduli are not coprime");
    const Poly minv = bz.s % pk;
    std::vector<Poly> next;
    for (const Poly& a : roots)
      for (const Poly& b : local) next.push_back(a + M * (((b - a) * minv) % pk));
    M = M * pk;
    roots = std::move(next);
  }
  for (auto& r : roots) r = r % M;
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// A generator of the ideal e F[x] + (r + Delta) F[x], found by running the
// continued fraction of (r + Delta) / e until a constant denominator shows
// up; nullopt when the reduced cycle passes without one.
std::optional<QuadInt> ideal_generator(const ContextPtr& ctx, const Poly& r,
                                       const Poly& e) {
  const Field& f = ctx->field();
  if (e.deg() == 0) return QuadInt::one(ctx);
  const Surd start = make_surd(ctx, r, e);
  Convergents conv;
  std::map<std::pair<std::vector<std::uint16_t>, std::vector<std::uint16_t>>, int> seen;
  Surd s = start;
  const std::int64_t bound = period_bound(*ctx);
  const std::int64_t cap = (bound > (std::int64_t(1) << 30) ? (std::int64_t(1) << 32)
                                                           : 4 * bound) +
                           4 * std::int64_t(e.deg()) + 16;
  for (std::int64_t n = 1; n <= cap; ++n) {
    CfStep st = cf_step(s);
    conv.push(st.A);
    s = std::move(st.next);
    if (s.Q.deg() == 0) {
      const std::size_t i = std::size_t(n);
      // rho_0 = (p rho_n + p') / (q rho_n + q'); the ideal is generated by
      // the conjugate of w = q (P_n + Delta) + Q_n q'.
      const Poly& q = conv.Q[i];
      const Poly& qp = conv.Q[i - 1];
      QuadInt w(ctx, q * s.P + s.Q * qp, q);
      QuadInt theta = w.conj();
      const Poly nt = theta.norm();
      ensure(nt.deg() == e.deg() && e.scaled(nt.lead()).scaled(f.inv(e.lead())) == nt,
             "ideal generator has the wrong norm");
      return theta;
    }
    auto key = std::make_pair(s.P.codes(), s.Q.codes());
    if (!seen.emplace(std::move(key), int(n)).second) return std::nullopt;
  }
  throw InternalInvariantViolation("ideal continued fraction did not cycle");
}

// floor(a / b) for b > 0.
long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

// Move w into the degree window [0, k-1] along its unit orbit.
QuadInt into_window(const QuadInt& w, const QuadInt& eps, int k) {
  const int dw = w.degree().value();
  const long long j = floor_div(dw, k);
  if (j == 0) return w;
  QuadInt out = w * eps.pow(-j);
  ensure(out.degree() >= Degree(0) && out.degree() < Degree(k),
         "window shift missed the base range");
  return out;
}

std::vector<QuadInt> base_by_enumeration(const ContextPtr& ctx, const Poly& d,
                                         const QuadInt& eps, int k) {
  const Field& f = ctx->field();
  SolutionSet set(ctx, d);
  // Balanced window [s, s+k-1]: both omega and omega' stay small, so
  // deg v <= max(s+k-1, deg d - s) - m.
  const int dd = d.deg();
  const int s = int(floor_div(dd - k + 1 + 1, 2));
  const int bv = std::max(s + k - 1, dd - s) - ctx->m();
  if (bv >= 0) {
    for_each_poly(f, bv, [&](const Poly& v) {
      recover_u(*ctx, d, v, [&](const Poly& u) {
        QuadInt w(ctx, u, v);
        const int dw = w.degree().value();
        if (dw < s || dw > s + k - 1) return;
        set.add(into_window(w, eps, k));
      });
      return true;
    });
  } else {
    recover_u(*ctx, d, Poly(f), [&](const Poly& u) {
      QuadInt w(ctx, u, Poly(f));
      set.add(into_window(w, eps, k));
    });
  }
  return set.take();
}

std::vector<QuadInt> base_by_ideals(const ContextPtr& ctx, const Poly& d,
                                    const QuadInt& eps, int k) {
  const Field& f = ctx->field();
  SolutionSet set(ctx, d);
  const QuadInt eta = constant_norm_unit(ctx);
  const FieldElement neta = eta.norm().lead();
  // g monic with g^2 | d; the primitive part has norm d / g^2.
  std::vector<Poly> gs{Poly(f, f.one())};
  for (const Factor& fac : factor(d)) {
    std::vector<Poly> next;
    for (const Poly& g : gs) {
      Poly pw(f, f.one());
      for (int i = 0; 2 * i <= fac.multiplicity; ++i) {
        next.push_back(g * pw);
        pw = pw * fac.p;
      }
    }
    gs = std::move(next);
  }
  for (const Poly& g : gs) {
    const Poly e = *d.exact_div(g * g);
    for (const Poly& r : quadratic_roots_mod(ctx->trace(), ctx->nrm(), e.monic())) {
      auto theta = ideal_generator(ctx, r, e.monic());
      if (!theta) continue;
      // N(lambda g theta eta^j) = lambda^2 c neta^j g^2 e_monic; match d.
      const FieldElement c = theta->norm().lead();
      for (int j = 0; j < 2; ++j) {
        const FieldElement need =
            f.div(e.lead(), f.mul(c, j == 0 ? f.one() : neta));
        auto lam = f.sqrt(need);
        if (!lam) continue;
        QuadInt w = QuadInt(ctx, g, Poly(f)) * *theta;
        if (j == 1) w = w * eta;
        w = w.scaled(*lam);
        QuadInt rep = into_window(w, eps, k);
        set.add(rep);
        if (!f.char2()) set.add(rep.scaled(f.neg(f.one())));
        break;
      }
    }
  }
  return set.take();
}

}  // namespace

SolutionFamily solve_real_base(const ContextPtr& ctx, const Poly& d,
                               const UnitGroupDescription& unit,
                               BaseMethod method) {
  if (ctx->kind() != QuadCase::Real)
    throw InvalidInput("solve_real_base needs a real context");
  if (d.is_zero()) throw InvalidInput("real-case base solutions need d != 0");
  SolutionFamily fam{ctx, d, unit, {}, method};
  const int k = unit.degree_k;
  if (method == BaseMethod::Auto) {
    const int dd = d.deg();
    const int s = int(floor_div(dd - k + 2, 2));
    const int bv = std::max(s + k - 1, dd - s) - ctx->m();
    // Enumeration costs q^{bv+1} quadratic solves.
    double cost = 1;
    for (int i = 0; i <= bv; ++i) cost *= ctx->field().q();
    method = cost <= 4096 ? BaseMethod::Enumerate : BaseMethod::Ideals;
  }
  fam.method_used = method;
  fam.base_solutions = method == BaseMethod::Enumerate
                           ? base_by_enumeration(ctx, d, unit.generator, k)
                           : base_by_ideals(ctx, d, unit.generator, k);
  return fam;
}

// ---------------------------------------------------------------------------

namespace {

struct ModRing {
  const QuadContext* ctx;
  Poly P, t, n;
  ModRing(const QuadContext& c, const Poly& modulus)
      : ctx(&c), P(modulus), t(c.trace() % modulus), n(c.nrm() % modulus) {}
  std::pair<Poly, Poly> red(const Poly& x, const Poly& y) const {
    return {x % P, y % P};
  }
  std::pair<Poly, Poly> mul(const std::pair<Poly, Poly>& a,
                            const std::pair<Poly, Poly>& b) const {
    const Poly yy = (a.second * b.second) % P;
    return {(a.first * b.first - n * yy) % P,
            (a.first * b.second + a.second * b.first + t * yy) % P};
  }
  std::pair<Poly, Poly> pow(std::pair<Poly, Poly> base, std::uint64_t e) const {
    const Field& f = P.field();
    std::pair<Poly, Poly> acc{Poly(f, f.one()) % P, Poly(f)};
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }
};

}  // namespace

ResiduePeriod residue_period(const QuadInt& unit, const Poly& modulus) {
  if (modulus.is_zero()) throw InvalidInput("residue period needs a nonzero modulus");
  const QuadContext& ctx = *unit.context();
  const Field& f = ctx.field();
  ensure(unit.norm().is_one(), "residue period needs a norm-1 unit");
  ResiduePeriod out;
  const int dp = modulus.deg();
  out.pair_bound = saturating_pow(f.q(), 2 * std::int64_t(dp));
  out.paper_bound = saturating_pow(f.q(), dp);
  if (dp == 0) return out;
  const ModRing R(ctx, modulus);
  const auto e = R.red(unit.u(), unit.v());
  const std::pair<Poly, Poly> one{Poly(f, f.one()), Poly(f)};
  auto cur = e;
  for (std::int64_t n = 1; n <= out.pair_bound; ++n) {
    if (cur == one) {
      out.period = n;
      return out;
    }
    cur = R.mul(cur, e);
  }
  throw InternalInvariantViolation("residue period exceeds q^{2 deg P}");
}

bool satisfies(const std::vector<LinearForm>& forms, const Poly& u,
               const Poly& v) {
  for (const auto& lf : forms)
    if (!(lf.cu * u + lf.cv * v).divisible_by(lf.modulus)) return false;
  return true;
}

FilterReport filtered_solutions(const SolutionFamily& fam,
                                const std::vector<LinearForm>& forms,
                                std::size_t max_per_base) {
  const QuadContext& ctx = *fam.ctx;
  const Field& f = ctx.field();
  FilterReport rep;
  Poly L(f, f.one());
  for (const auto& lf : forms) {
    if (lf.modulus.is_zero()) throw InvalidInput("zero modulus in a linear form");
    L = lcm(L, lf.modulus);
  }
  const QuadInt& eps = fam.unit.generator;
  const int k = fam.unit.degree_k;
  rep.period = residue_period(eps, L).period;
  const ModRing R(ctx, L);
  const auto e_fwd = R.red(eps.u(), eps.v());
  const QuadInt ec = eps.conj();
  const auto e_bwd = R.red(ec.u(), ec.v());
  auto residue_ok = [&](const std::pair<Poly, Poly>& st) {
    return satisfies(forms, st.first, st.second);
  };
  const int dd = fam.d.deg();
  for (std::size_t bi = 0; bi < fam.base_solutions.size(); ++bi) {
    const QuadInt& w = fam.base_solutions[bi];
    const int dw = w.degree().value();
    // deg(w eps^l) = dw + l k against deg of the conjugate dd - dw - l k.
    const long long lstar = floor_div(dd - 2 * dw + k, 2 * k);
    auto st0 = R.red(w.u(), w.v());
    st0 = lstar >= 0 ? R.mul(st0, R.pow(e_fwd, std::uint64_t(lstar)))
                     : R.mul(st0, R.pow(e_bwd, std::uint64_t(-lstar)));
    std::size_t found = 0;
    auto take = [&](long long l) {
      QuadInt cand = w * eps.pow(l);
      ensure(cand.norm() == fam.d, "filtered candidate lost its norm");
      ensure(satisfies(forms, cand.u(), cand.v()), "residue filter disagrees with exact check");
      rep.survivors.push_back({cand, l, bi});
      ++found;
    };
    auto fwd = st0, bwd = st0;
    std::int64_t covered = 0;
    for (std::int64_t o = 0; covered < rep.period && found < max_per_base; ++o) {
      if (o == 0) {
        ++rep.candidates_checked;
        ++covered;
        if (residue_ok(st0)) take(lstar);
        continue;
      }
      fwd = R.mul(fwd, e_fwd);
      ++rep.candidates_checked;
      ++covered;
      if (residue_ok(fwd)) take(lstar + o);
      if (covered >= rep.period || found >= max_per_base) break;
      bwd = R.mul(bwd, e_bwd);
      ++rep.candidates_checked;
      ++covered;
      if (residue_ok(bwd)) take(lstar - o);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<QuadInt> solutions_with_v_degree(const ContextPtr& ctx,
                                             const Poly& d, int max_v_deg) {
  const Field& f = ctx->field();
  SolutionSet set(ctx, d);
  auto keep = [&](const QuadInt& w) {
    if (w.v().deg() <= max_v_deg) set.add(w);
  };
  const bool insep = ctx->kind() == QuadCase::Imaginary &&
                     ctx->imaginary_kind() == ImaginaryKind::Inseparable;
  if (ctx->kind() == QuadCase::Rational || insep) {
    for (const auto& w : solve_rational(ctx, d, std::max(max_v_deg, -1)).solutions) keep(w);
  } else if (ctx->kind() == QuadCase::Imaginary) {
    for (const auto& w : solve_imaginary(ctx, d)) keep(w);
  } else if (d.is_zero()) {
    set.add(Poly(f), Poly(f));
  } else {
    const UnitGroupDescription unit = fundamental_unit(ctx);
    const SolutionFamily fam = solve_real_base(ctx, d, unit);
    const QuadInt& eps = unit.generator;
    const QuadInt epsc = eps.conj();
    for (const QuadInt& w0 : fam.base_solutions) {
      // Away from the balance point deg v grows by k per step, so stop once
      // v is too large on the growing side.
      for (int dir : {1, -1}) {
        QuadInt w = dir > 0 ? w0 : w0 * epsc;
        for (int guard = 0; guard < 1 << 20; ++guard) {
          keep(w);
          const Degree dw = w.degree(), dc = w.conj().degree();
          const bool growing = dir > 0 ? dw > dc : dc > dw;
          if (growing && w.v().deg() > max_v_deg) break;
          w = w * (dir > 0 ? eps : epsc);
        }
      }
    }
  }
  return set.take();
}

std::vector<std::pair<Poly, Poly>> form_solutions_up_to(const Poly& beta,
                                                        const Poly& gamma,
                                                        const Poly& scale,
                                                        const Poly& d,
                                                        int max_deg) {
  const ContextPtr ctx = classify(beta, gamma, scale);
  std::vector<std::pair<Poly, Poly>> out;
  for (const QuadInt& w : solutions_with_v_degree(ctx, scale * d, max_deg)) {
    auto uv = ctx->to_form(w.u(), w.v());
    if (!uv || uv->first.deg() > max_deg || uv->second.deg() > max_deg) continue;
    out.push_back(*uv);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first < b.first) return true;
    if (b.first < a.first) return false;
    return a.second < b.second;
  });
  return out;
}

}  // namespace gfconj
