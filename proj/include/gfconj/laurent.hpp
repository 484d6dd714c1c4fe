// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfconj/poly.hpp"

namespace gfconj {

// Truncated series sum_{i <= top} c_i x^i, known for exponents
// top, top-1, ..., top-prec+1 and O(x^{top-prec}) below.
class LaurentSeries {
 public:
  static LaurentSeries zero(const Field& f);
  // Exact polynomial viewed as a series with a window of length prec.
  static LaurentSeries from_poly(const Poly& p, int prec);
  // window[0] is the coefficient of x^top and must be nonzero.
  LaurentSeries(const Field& f, int top, std::vector<std::uint16_t> window);

  const Field& field() const { return *f_; }
  bool is_zero() const { return window_.empty(); }
  Degree degree() const { return is_zero() ? NEG_INF : Degree(top_); }
  int top() const { return top_; }
  int prec() const { return int(window_.size()); }
  // Lowest exponent with a known coefficient.
  int low() const { return top_ - prec() + 1; }
  FieldElement coeff(int e) const;
  FieldElement lead() const { return coeff(top_); }

  friend LaurentSeries operator+(const LaurentSeries& s,
                                 const LaurentSeries& t);
  friend LaurentSeries operator-(const LaurentSeries& s,
                                 const LaurentSeries& t);
  friend LaurentSeries operator*(const LaurentSeries& s,
                                 const LaurentSeries& t);
  LaurentSeries operator-() const;
  LaurentSeries inverse() const;
  // Terms of exponent >= e.
  LaurentSeries truncate(int e) const;
  // Keep only the first n coefficients of the window.
  LaurentSeries with_prec(int n) const;

  std::string to_string() const;

 private:
  const Field* f_;
  int top_ = 0;
  std::vector<std::uint16_t> window_;
};

// Sum of the terms of degree >= 0. Needs the window to reach exponent 0.
Poly polynomial_part(const LaurentSeries& s);

// 4 max(deg b, deg c) + 8, or the process-wide override when one is set
// (never below max(deg b, deg c) + 2, which polynomial parts need).
int default_series_precision(const Poly& b, const Poly& c);
void set_series_precision_override(int prec);  // 0 clears

// A root of t^2 + b t + c in F_q((1/x)) with at least prec window
// coefficients, or nullopt when none exists. Throws RationalCase when the
// polynomial has a root in F_q[x].
//
// Char 2 (b != 0): t = b y with y^2 + y = c / b^2, solved by Artin-Schreier
// peeling; of the two roots the one whose y has constant term of smaller code
// is returned, the other being root + b. In the reduced situation deg c <
// deg b this is the root of negative degree.
// Odd char: the root whose leading coefficient is the field's canonical
// square root of the leading coefficient of b^2/4 - c.
std::optional<LaurentSeries> quadratic_series_root(const Poly& b,
                                                   const Poly& c, int prec);

}  // namespace gfconj
