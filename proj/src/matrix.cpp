// SPDX-License-Identifier: Apache-2.0
#include "gfconj/matrix.hpp"

#include "gfconj/error.hpp"

namespace gfconj {

Matrix2 Matrix2::identity(const Field& f) {
  return {Poly(f, f.one()), Poly(f), Poly(f), Poly(f, f.one())};
}

Matrix2 Matrix2::scalar(const Poly& s) {
  const Field& f = s.field();
  return {s, Poly(f), Poly(f), s};
}

Matrix2 Matrix2::swap(const Field& f) {
  return {Poly(f), Poly(f, f.one()), Poly(f, f.one()), Poly(f)};
}

Matrix2 Matrix2::upper(const Poly& t) {
  const Field& f = t.field();
  return {Poly(f, f.one()), t, Poly(f), Poly(f, f.one())};
}

Matrix2 Matrix2::lower(const Poly& t) {
  const Field& f = t.field();
  return {Poly(f, f.one()), Poly(f), t, Poly(f, f.one())};
}

Matrix2 Matrix2::diag(const Poly& d1, const Poly& d2) {
  const Field& f = d1.field();
  return {d1, Poly(f), Poly(f), d2};
}

Matrix2 Matrix2::adjugate() const { return {a22, -a12, -a21, a11}; }

std::optional<Matrix2> Matrix2::inverse() const {
  const Poly d = det();
  if (d.deg() != 0) return std::nullopt;
  return adjugate().scaled(field().inv(d.lead()));
}

Matrix2 Matrix2::conjugated_by(const Matrix2& u) const {
  auto ui = u.inverse();
  if (!ui) throw InvalidInput("conjugator is not invertible over F[x]");
  return u * *this * *ui;
}

Matrix2 Matrix2::scaled(FieldElement s) const {
  return {a11.scaled(s), a12.scaled(s), a21.scaled(s), a22.scaled(s)};
}

Degree Matrix2::degree() const {
  return max(max(a11.degree(), a12.degree()), max(a21.degree(), a22.degree()));
}

bool Matrix2::is_scalar() const { return is_diagonal() && a11 == a22; }

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
          x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

Matrix2 operator+(const Matrix2& x, const Matrix2& y) {
  return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
}

Matrix2 operator-(const Matrix2& x, const Matrix2& y) {
  return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
}

}  // namespace gfconj
