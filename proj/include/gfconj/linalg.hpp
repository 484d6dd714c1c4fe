// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gfconj/gf.hpp"

namespace gfconj::linalg {

// Dense F_2 system with bit-packed rows. rows[i] holds ncols coefficient bits
// followed by the right-hand side bit at index ncols.
class Gf2System {
 public:
  explicit Gf2System(int ncols);
  void add_row(const std::vector<bool>& coeffs, bool rhs);
  // A particular solution with free variables set to 0, if consistent.
  std::optional<std::vector<bool>> solve() const;

 private:
  int ncols_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

using Matrix = std::vector<std::vector<FieldElement>>;

// Basis of { x : m x = 0 } over F_q.
std::vector<std::vector<FieldElement>> nullspace(const Field& f, Matrix m,
                                                 int ncols);

}  // namespace gfconj::linalg
