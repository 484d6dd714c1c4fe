// SPDX-License-Identifier: Apache-2.0
#include <sstream>

#include "gfconj/conjugacy.hpp"
#include "gfconj/error.hpp"
#include "gfconj/text.hpp"
#include "gfconj/units.hpp"

namespace gfconj {

CentralizerResult centralizer_generator(const Matrix2& A) {
  const Field& f = A.field();
  if (A.is_scalar()) throw Unsupported("scalar matrix: the centralizer is all of GL(2, F[x])");
  // Commuting with A is commuting with the primitive part of A - a11 I.
  const Poly d = A.a22 - A.a11;
  Poly g(f);
  for (const Poly* e : {&A.a12, &A.a21, &d})
    if (!e->is_zero()) g = g.is_zero() ? e->monic() : gcd(g, *e);
  const Matrix2 A0{Poly(f), *A.a12.exact_div(g), *A.a21.exact_div(g),
                   *(A.a22 - A.a11).exact_div(g)};
  // det(u I + v A0) = u^2 + tr(A0) uv + det(A0) v^2.
  CentralizerResult out;
  out.ctx = classify(A0.trace(), A0.det());
  const QuadContext& ctx = *out.ctx;
  const int da = A.degree().value_or(0);
  {
    BigInt q = 1;
    for (int i = 0; i < 2 * da; ++i) q *= f.q();
    out.bound = BigInt(da) * q;
  }
  if (ctx.kind() == QuadCase::Rational) {
    if (ctx.root1() == ctx.root2())
      throw Unsupported("A is not semisimple (repeated eigenvalue, non-scalar)");
    out.description =
        "rational: A is diagonalizable over F(x), u + r1 v and u + r2 v must both be "
        "constants, so Z(A) is finite: " + ctx.describe();
    return out;
  }
  if (ctx.kind() == QuadCase::Imaginary) {
    out.description = "imaginary: the unit group of F[x][A] is F*, Z(A) is finite: " +
                      ctx.describe();
    return out;
  }
  const UnitGroupDescription unit = fundamental_unit(out.ctx);
  const QuadInt& e = unit.generator;
  const Poly u = e.u() - ctx.shift() * e.v();
  const Matrix2 U = Matrix2::scalar(u) + Matrix2::scalar(e.v()) * A0;
  ensure(U * A == A * U, "centralizer generator does not commute with A");
  ensure(U.is_unimodular(), "centralizer generator is not invertible");
  ensure(BigInt(U.degree().value_or(0)) <= out.bound,
         "centralizer generator exceeds deg(A) q^{2 deg A}");
  out.generator = U;
  std::ostringstream os;
  os << "real: Z(A) = <U> x finite, U = u I + v A0 from the fundamental unit of degree "
     << unit.degree_k << " in " << ctx.describe() << "; A0 = " << format_matrix(A0);
  out.description = os.str();
  return out;
}

}  // namespace gfconj
