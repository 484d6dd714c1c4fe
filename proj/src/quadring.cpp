// SPDX-License-Identifier: Apache-2.0
#include "gfconj/quadring.hpp"

#include <sstream>

#include "gfconj/error.hpp"
#include "gfconj/laurent.hpp"
#include "gfconj/text.hpp"

namespace gfconj {

const char* to_string(QuadCase c) {
  switch (c) {
    case QuadCase::Rational: return "rational";
    case QuadCase::Real: return "real";
    case QuadCase::Imaginary: return "imaginary";
  }
  return "?";
}

const char* to_string(ImaginaryKind k) {
  switch (k) {
    case ImaginaryKind::None: return "none";
    case ImaginaryKind::OddDegree: return "odd-degree";
    case ImaginaryKind::LeadingObstruction: return "leading-obstruction";
    case ImaginaryKind::Inseparable: return "inseparable";
    case ImaginaryKind::NonsquareLead: return "nonsquare-lead";
  }
  return "?";
}

std::string HalfDegree::to_string() const {
  if (neg_inf) return "-inf";
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

Poly QuadContext::b() const { return char2() ? trace_ : Poly(*f_); }
Poly QuadContext::c() const { return char2() ? nrm_ : -nrm_; }

int QuadContext::m() const {
  return char2() ? trace_.deg() : (-nrm_).deg() / 2;
}

Poly QuadContext::norm(const Poly& u, const Poly& v) const {
  return u * u + trace_ * u * v + nrm_ * v * v;
}

std::pair<Poly, Poly> QuadContext::mul(const Poly& u1, const Poly& v1,
                                       const Poly& u2, const Poly& v2) const {
  // Delta^2 = trace Delta - nrm.
  const Poly vv = v1 * v2;
  return {u1 * u2 - nrm_ * vv, u1 * v2 + v1 * u2 + trace_ * vv};
}

std::pair<Poly, Poly> QuadContext::conj(const Poly& u, const Poly& v) const {
  return {u + trace_ * v, -v};
}

Degree QuadContext::series_degree(const Poly& u, const Poly& v) const {
  if (case_ != QuadCase::Real)
    throw InvalidInput("series degree needs a real context");
  if (v.is_zero()) return u.degree();
  const Degree dv = v.degree() + delta_degree_;
  const Degree du = u.degree();
  if (du != dv) return max(du, dv);
  if (char2()) {
    // The conjugate Delta' = trace + Delta has degree m > deg Delta, so
    // u + Delta' v has degree deg v + m with no cancellation.
    return norm(u, v).degree() - (v.deg() + trace_.deg());
  }
  const FieldElement s =
      f_->add(u.lead(), f_->mul(delta_lead_, v.lead()));
  if (!s.is_zero()) return du;
  return norm(u, v).degree() - du.value();
}

HalfDegree QuadContext::deg_imaginary(const Poly& u, const Poly& v) const {
  const Poly cc = c();
  if (case_ != QuadCase::Imaginary || cc.deg() % 2 == 0 ||
      cc.deg() <= 2 * std::max(b().deg(), -1) || cc.is_zero())
    throw InvalidInput("Deg needs an imaginary context with deg c odd");
  if (u.is_zero() && v.is_zero()) return {0, true};
  int best = u.is_zero() ? INT_MIN : 2 * u.deg();
  if (!v.is_zero()) best = std::max(best, 2 * v.deg() + cc.deg());
  return {best, false};
}

std::optional<std::pair<Poly, Poly>> QuadContext::to_form(const Poly& un,
                                                          const Poly& v) const {
  const Poly u1 = un - shift_ * v;
  auto u = u1.exact_div(scale_);
  if (!u) return std::nullopt;
  return std::make_pair(*u, v);
}

std::pair<Poly, Poly> QuadContext::from_form(const Poly& u,
                                             const Poly& v) const {
  return {scale_ * u + shift_ * v, v};
}

std::string QuadContext::describe() const {
  std::ostringstream os;
  os << to_string(case_);
  if (case_ == QuadCase::Imaginary) os << " (" << to_string(imag_) << ")";
  os << "; b = " << format_poly(b()) << ", c = " << format_poly(c());
  if (!shift_.is_zero()) os << "; shift = " << format_poly(shift_);
  if (!scale_.is_one()) os << "; scale = " << format_poly(scale_);
  return os.str();
}

ContextPtr classify(const Poly& beta, const Poly& gamma) {
  const Field& f = beta.bound() ? beta.field() : gamma.field();
  return classify(beta, gamma, Poly(f, f.one()));
}

ContextPtr standard_context(const Poly& b, const Poly& c) {
  const Field& f = c.bound() ? c.field() : b.field();
  Poly bb = b.bound() ? b : Poly(f);
  if (f.char2()) return classify(bb, c);
  if (!bb.is_zero())
    throw InvalidInput("odd characteristic contexts use the form t^2 = c");
  return classify(Poly(f), -c);
}

ContextPtr classify(const Poly& beta0, const Poly& gamma0, const Poly& scale) {
  const Field& f = scale.field();
  const Poly beta = beta0.bound() ? beta0 : Poly(f);
  const Poly gamma = gamma0.bound() ? gamma0 : Poly(f);
  if (scale.is_zero()) throw InvalidInput("monicization scale must be nonzero");
  std::shared_ptr<QuadContext> ctx(new QuadContext());
  ctx->f_ = &f;
  ctx->beta_ = beta;
  ctx->gamma_ = gamma;
  ctx->scale_ = scale;
  const Poly t = beta;
  Poly n = scale * gamma;
  Poly shift(f);

  if (!f.char2()) {
    // Complete the square: u' = u1 + (beta/2) v, form u'^2 - cn v^2.
    shift = t.scaled(f.inv(f.from_int(2)));
    const Poly cn = shift * shift - n;
    ctx->trace_ = Poly(f);
    ctx->nrm_ = -cn;
    ctx->shift_ = shift;
    if (auto s = sqrt(cn)) {
      ctx->case_ = QuadCase::Rational;
      ctx->root1_ = *s;
      ctx->root2_ = -*s;
    } else if (cn.deg() % 2 != 0) {
      ctx->case_ = QuadCase::Imaginary;
      ctx->imag_ = ImaginaryKind::OddDegree;
    } else if (!f.is_square(cn.lead())) {
      ctx->case_ = QuadCase::Imaginary;
      ctx->imag_ = ImaginaryKind::NonsquareLead;
    } else {
      ctx->case_ = QuadCase::Real;
      ctx->delta_degree_ = cn.deg() / 2;
      ctx->delta_lead_ = *f.sqrt(cn.lead());
      auto root = quadratic_series_root(Poly(f), -cn,
                                        default_series_precision(Poly(f), cn));
      ensure(root.has_value(), "real context without a series root");
      ensure(root->lead() == ctx->delta_lead_, "series root branch mismatch");
      ctx->delta_floor_ = polynomial_part(*root);
      const Poly rem = cn - ctx->delta_floor_ * ctx->delta_floor_;
      ensure(rem.deg() < ctx->delta_degree_, "sqrt floor check failed");
    }
    return ctx;
  }

  ctx->trace_ = t;
  if (t.is_zero()) {
    ctx->nrm_ = n;
    if (auto s = sqrt(n)) {
      ctx->case_ = QuadCase::Rational;
      ctx->root1_ = *s;
      ctx->root2_ = *s;
    } else {
      ctx->case_ = QuadCase::Imaginary;
      ctx->imag_ = ImaginaryKind::Inseparable;
    }
    ctx->shift_ = shift;
    return ctx;
  }

  auto roots = solve_monic_quadratic(t, n);
  if (!roots.empty()) {
    ctx->case_ = QuadCase::Rational;
    ctx->nrm_ = n;
    ctx->shift_ = shift;
    ctx->root1_ = roots.front();
    ctx->root2_ = roots.front() + t;
    return ctx;
  }

  // A substitution u' = u + r v turns the norm coefficient into n + t r + r^2.
  auto substitute = [&](const Poly& r) {
    n = n + t * r + r * r;
    shift = shift + r;
  };
  const int m = t.deg();
  const FieldElement t0 = t.lead();
  while (true) {
    ensure(!n.is_zero(), "irrational context reduced to a rational one");
    const int dn = n.deg();
    if (dn > 2 * m) {
      if (dn % 2 == 1) {
        ctx->case_ = QuadCase::Imaginary;
        ctx->imag_ = ImaginaryKind::OddDegree;
        break;
      }
      const FieldElement lc = f.div(*f.sqrt(n.lead()), t0);
      substitute(t.scaled(lc).shifted(dn / 2 - m));
    } else if (dn == 2 * m) {
      // t0^2 tau^2 + t0^2 tau + n0 = 0 in F.
      const FieldElement t02 = f.mul(t0, t0);
      std::optional<FieldElement> tau;
      for (FieldElement e : f.elements()) {
        FieldElement val = f.add(f.mul(t02, f.add(f.mul(e, e), e)), n.lead());
        if (val.is_zero()) {
          tau = e;
          break;
        }
      }
      if (!tau) {
        ctx->case_ = QuadCase::Imaginary;
        ctx->imag_ = ImaginaryKind::LeadingObstruction;
        break;
      }
      substitute(t.scaled(*tau));
    } else {
      // Real; divide n by t until deg n < deg t.
      while (n.deg() >= m) {
        auto [q, r] = n.divmod(t);
        substitute(q);
        (void)r;
        ensure(!n.is_zero(), "reduction produced a rational context");
      }
      ctx->case_ = QuadCase::Real;
      ctx->delta_degree_ = n.deg() - m;
      ctx->delta_floor_ = Poly(f);
      break;
    }
  }
  ctx->nrm_ = n;
  ctx->shift_ = shift;
  return ctx;
}

QuadInt::QuadInt(ContextPtr ctx, Poly u, Poly v)
    : ctx_(std::move(ctx)), u_(std::move(u)), v_(std::move(v)) {
  const Field& f = ctx_->field();
  if (!u_.bound()) u_ = Poly(f);
  if (!v_.bound()) v_ = Poly(f);
}

QuadInt QuadInt::one(ContextPtr ctx) {
  const Field& f = ctx->field();
  return QuadInt(ctx, Poly(f, f.one()), Poly(f));
}

void QuadInt::check(const QuadInt& o) const {
  if (ctx_ != o.ctx_) throw InvalidInput("quadratic integers from different contexts");
}

QuadInt QuadInt::conj() const {
  auto [u, v] = ctx_->conj(u_, v_);
  return QuadInt(ctx_, u, v);
}

QuadInt QuadInt::operator*(const QuadInt& o) const {
  check(o);
  auto [u, v] = ctx_->mul(u_, v_, o.u_, o.v_);
  return QuadInt(ctx_, u, v);
}

QuadInt QuadInt::operator+(const QuadInt& o) const {
  check(o);
  return QuadInt(ctx_, u_ + o.u_, v_ + o.v_);
}

QuadInt QuadInt::operator-(const QuadInt& o) const {
  check(o);
  return QuadInt(ctx_, u_ - o.u_, v_ - o.v_);
}

QuadInt QuadInt::scaled(FieldElement s) const {
  return QuadInt(ctx_, u_.scaled(s), v_.scaled(s));
}

QuadInt QuadInt::pow(long long e) const {
  QuadInt base = *this;
  if (e < 0) {
    const Poly n = norm();
    if (n.deg() != 0) throw InvalidInput("negative power of a non-unit");
    base = conj().scaled(ctx_->field().inv(n.lead()));
    e = -e;
  }
  QuadInt r = one(ctx_);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

}  // namespace gfconj
