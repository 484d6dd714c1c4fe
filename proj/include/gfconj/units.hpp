// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>

#include "gfconj/quadring.hpp"

namespace gfconj {

struct UnitGroupDescription {
  QuadInt generator;  // norm 1, minimal positive degree
  int degree_k = 0;
  int cf_index = 0;   // continued-fraction index the first unit came from
};

// A norm-1 unit of positive degree from the continued fraction of the
// standard reduced start: at the first n >= 1 whose state denominator is a
// constant, (P_0 Q_n - P_n) + Delta Q_n is a unit.
QuadInt nontrivial_unit(const ContextPtr& ctx, int* cf_index = nullptr);

// The same unit before its norm is normalized to 1: positive degree, norm
// in F*. Generates the unit group modulo constants.
QuadInt constant_norm_unit(const ContextPtr& ctx);

// Minimal positive-degree unit among the candidates x + Delta y_i with y_i
// running over F*-multiples of the monic divisors of the nontrivial unit's
// Delta-coordinate.
UnitGroupDescription fundamental_unit(const ContextPtr& ctx);

// Nontrivial (u, v) with u^2 - D v^2 = 1 (odd characteristic only).
std::pair<Poly, Poly> pell_fundamental(const Poly& D);

}  // namespace gfconj
