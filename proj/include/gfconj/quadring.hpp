// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfconj/poly.hpp"

namespace gfconj {

enum class QuadCase { Rational, Real, Imaginary };

enum class ImaginaryKind {
  None,
  OddDegree,           // deg c odd and above 2 deg b
  LeadingObstruction,  // char 2, deg c = 2 deg b with no leading-term root
  Inseparable,         // char 2, b = 0, c not a square
  NonsquareLead,       // odd char, deg c even with a non-square leading term
};

const char* to_string(QuadCase c);
const char* to_string(ImaginaryKind k);

// Half-integer degree used by the imaginary-case Deg function.
struct HalfDegree {
  int twice = 0;
  bool neg_inf = false;
  friend bool operator==(const HalfDegree&, const HalfDegree&) = default;
  friend HalfDegree operator+(HalfDegree a, HalfDegree b) {
    if (a.neg_inf || b.neg_inf) return {0, true};
    return {a.twice + b.twice, false};
  }
  std::string to_string() const;
};

// The ring F[x][Delta] attached to the monic form u^2 + beta uv + gamma v^2,
// i.e. Delta a root of t^2 - beta t + gamma. Internally the normalized ring is
// kept through trace = Delta + Delta' and nrm = Delta Delta', so that
// N(u + Delta v) = u^2 + trace uv + nrm v^2 in every characteristic.
//
// Normalized coordinates (u', v) relate to the form's coordinates by
// u' = u1 + shift v, where u1 = scale * u is the monicized variable.
class QuadContext {
 public:
  const Field& field() const { return *f_; }
  QuadCase kind() const { return case_; }
  ImaginaryKind imaginary_kind() const { return imag_; }
  bool char2() const { return f_->char2(); }

  // Paper convention for the normalized ring: char 2 t^2 + bt + c, odd char
  // t^2 = c (b = 0).
  Poly b() const;
  Poly c() const;
  const Poly& trace() const { return trace_; }
  const Poly& nrm() const { return nrm_; }

  const Poly& shift() const { return shift_; }
  const Poly& scale() const { return scale_; }
  const Poly& form_beta() const { return beta_; }
  const Poly& form_gamma() const { return gamma_; }

  // Rational case: the images of Delta and Delta' in F[x] (equal when the
  // discriminant vanishes).
  const Poly& root1() const { return root1_; }
  const Poly& root2() const { return root2_; }

  // Real case data: Delta's degree as a series, the polynomial part of Delta
  // and (odd char) its leading coefficient.
  int delta_degree() const { return delta_degree_; }
  const Poly& delta_floor() const { return delta_floor_; }
  int m() const;  // char 2: deg b; odd char: deg c / 2

  Poly norm(const Poly& u, const Poly& v) const;
  std::pair<Poly, Poly> mul(const Poly& u1, const Poly& v1, const Poly& u2,
                            const Poly& v2) const;
  std::pair<Poly, Poly> conj(const Poly& u, const Poly& v) const;

  // Exact degree of u + Delta v in F((1/x)). Real contexts only.
  Degree series_degree(const Poly& u, const Poly& v) const;
  // Deg(u + Delta v) = max(deg u, deg v + deg c / 2); requires an imaginary
  // context with deg c odd.
  HalfDegree deg_imaginary(const Poly& u, const Poly& v) const;

  // Normalized coordinates to the form's (u, v); nullopt when the
  // monicization obligation scale | u1 fails.
  std::optional<std::pair<Poly, Poly>> to_form(const Poly& un,
                                               const Poly& v) const;
  std::pair<Poly, Poly> from_form(const Poly& u, const Poly& v) const;

  std::string describe() const;

 private:
  friend std::shared_ptr<const QuadContext> classify(const Poly&, const Poly&,
                                                     const Poly&);
  QuadContext() = default;

  const Field* f_ = nullptr;
  QuadCase case_ = QuadCase::Imaginary;
  ImaginaryKind imag_ = ImaginaryKind::None;
  Poly beta_, gamma_, scale_;
  Poly trace_, nrm_, shift_;
  Poly root1_, root2_;
  int delta_degree_ = 0;
  Poly delta_floor_;
  FieldElement delta_lead_;
};

using ContextPtr = std::shared_ptr<const QuadContext>;

// Classify the form scale*u^2 + beta uv + gamma v^2 after monicization
// (u1 = scale * u turns it into u1^2 + beta u1 v + scale*gamma v^2, so the
// right-hand side must be multiplied by scale as well).
ContextPtr classify(const Poly& beta, const Poly& gamma, const Poly& scale);
ContextPtr classify(const Poly& beta, const Poly& gamma);

// Context in the paper's convention: char 2 t^2 + bt + c, odd char t^2 = c.
ContextPtr standard_context(const Poly& b, const Poly& c);

class QuadInt {
 public:
  QuadInt(ContextPtr ctx, Poly u, Poly v);
  static QuadInt one(ContextPtr ctx);

  const ContextPtr& context() const { return ctx_; }
  const Poly& u() const { return u_; }
  const Poly& v() const { return v_; }

  Poly norm() const { return ctx_->norm(u_, v_); }
  QuadInt conj() const;
  QuadInt operator*(const QuadInt& o) const;
  QuadInt operator+(const QuadInt& o) const;
  QuadInt operator-(const QuadInt& o) const;
  QuadInt scaled(FieldElement s) const;
  // Negative exponents need a norm in F*.
  QuadInt pow(long long e) const;
  Degree degree() const { return ctx_->series_degree(u_, v_); }
  HalfDegree deg_imaginary() const { return ctx_->deg_imaginary(u_, v_); }
  bool is_constant() const { return v_.is_zero() && u_.is_constant(); }

  friend bool operator==(const QuadInt& a, const QuadInt& b) {
    return a.ctx_ == b.ctx_ && a.u_ == b.u_ && a.v_ == b.v_;
  }

 private:
  void check(const QuadInt& o) const;
  ContextPtr ctx_;
  Poly u_, v_;
};

}  // namespace gfconj
