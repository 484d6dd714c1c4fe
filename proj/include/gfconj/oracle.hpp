// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gfconj/matrix.hpp"
#include "gfconj/poly.hpp"

// Brute-force references for tests. Only gf and poly are used here, so the
// oracle shares no code path with the solvers it checks.
namespace gfconj::oracle {

struct SearchBudget {
  int max_deg = 0;
  // Cap on the number of enumerated tuples.
  std::uint64_t ceiling = std::uint64_t(1) << 26;
};

// First U = [[u, p], [v, q]] in (u, v, p, q) order, every entry of degree
// <= max_deg, with U A = B U and det U in F*.
std::optional<Matrix2> brute_decide(const Matrix2& A, const Matrix2& B,
                                    const SearchBudget& budget);

// All (u, v) of degree <= max_deg with scale u^2 + beta uv + gamma v^2 = d,
// sorted by (u, v).
std::vector<std::pair<Poly, Poly>> brute_form_solutions(
    const Poly& scale, const Poly& beta, const Poly& gamma, const Poly& d,
    const SearchBudget& budget);

// Paper convention: char 2 u^2 + buv + cv^2 = d, odd char u^2 - cv^2 = d.
std::vector<std::pair<Poly, Poly>> brute_norm_solutions(
    const Poly& b, const Poly& c, const Poly& d, const SearchBudget& budget);

// Norm-1 elements in the paper convention, sorted by max(deg u, deg v).
std::vector<std::pair<Poly, Poly>> brute_units(const Poly& b, const Poly& c,
                                               const SearchBudget& budget);

}  // namespace gfconj::oracle
