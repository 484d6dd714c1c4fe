// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "gfconj/poly.hpp"

namespace gfconj {

struct Matrix2 {
  Poly a11, a12, a21, a22;

  static Matrix2 identity(const Field& f);
  static Matrix2 scalar(const Poly& s);
  static Matrix2 swap(const Field& f);           // [[0,1],[1,0]]
  static Matrix2 upper(const Poly& t);           // [[1,t],[0,1]]
  static Matrix2 lower(const Poly& t);           // [[1,0],[t,1]]
  static Matrix2 diag(const Poly& d1, const Poly& d2);

  const Field& field() const { return a11.field(); }
  Poly det() const { return a11 * a22 - a12 * a21; }
  Poly trace() const { return a11 + a22; }
  Matrix2 adjugate() const;
  // Inverse in GL(2, F[x]); nullopt unless det is in F*.
  std::optional<Matrix2> inverse() const;
  // U * this * U^{-1} for U in GL(2, F[x]).
  Matrix2 conjugated_by(const Matrix2& u) const;
  Matrix2 transpose() const { return {a11, a21, a12, a22}; }
  Matrix2 scaled(FieldElement s) const;

  Degree degree() const;
  bool is_scalar() const;
  bool is_diagonal() const { return a12.is_zero() && a21.is_zero(); }
  bool is_upper_triangular() const { return a21.is_zero(); }
  bool is_lower_triangular() const { return a12.is_zero(); }
  bool is_unimodular() const { return det().deg() == 0; }

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
  friend Matrix2 operator+(const Matrix2& x, const Matrix2& y);
  friend Matrix2 operator-(const Matrix2& x, const Matrix2& y);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

}  // namespace gfconj
