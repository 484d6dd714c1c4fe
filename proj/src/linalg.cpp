// SPDX-License-Identifier: Apache-2.0
#include "gfconj/linalg.hpp"

#include <utility>

namespace gfconj::linalg {

Gf2System::Gf2System(int ncols)
    : ncols_(ncols), words_(std::size_t(ncols + 1 + 63) / 64) {}

void Gf2System::add_row(const std::vector<bool>& coeffs, bool rhs) {
  std::vector<std::uint64_t> row(words_, 0);
  for (int j = 0; j < ncols_; ++j)
    if (coeffs[std::size_t(j)]) row[std::size_t(j) / 64] |= 1ull << (j % 64);
  if (rhs) row[std::size_t(ncols_) / 64] |= 1ull << (ncols_ % 64);
  rows_.push_back(std::move(row));
}

std::optional<std::vector<bool>> Gf2System::solve() const {
  auto rows = rows_;
  auto bit = [](const std::vector<std::uint64_t>& r, int j) {
    return (r[std::size_t(j) / 64] >> (j % 64)) & 1u;
  };
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < ncols_ && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && !bit(rows[sel], col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || !bit(rows[i], col)) continue;
      for (std::size_t w = 0; w < words_; ++w) rows[i][w] ^= rows[rank][w];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (bit(rows[i], ncols_)) return std::nullopt;
  std::vector<bool> x(std::size_t(ncols_), false);
  for (std::size_t i = 0; i < rank; ++i)
    x[std::size_t(pivot_col[i])] = bit(rows[i], ncols_) != 0;
  return x;
}

std::vector<std::vector<FieldElement>> nullspace(const Field& f, Matrix m,
                                                 int ncols) {
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][std::size_t(col)].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    const FieldElement inv = f.inv(m[rank][std::size_t(col)]);
    for (auto& e : m[rank]) e = f.mul(e, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank) continue;
      const FieldElement s = m[i][std::size_t(col)];
      if (s.is_zero()) continue;
      for (std::size_t j = 0; j < std::size_t(ncols); ++j)
        m[i][j] = f.sub(m[i][j], f.mul(s, m[rank][j]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(std::size_t(ncols), false);
  for (int c : pivot_col) is_pivot[std::size_t(c)] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[std::size_t(free)]) continue;
    std::vector<FieldElement> v(std::size_t(ncols), f.zero());
    v[std::size_t(free)] = f.one();
    for (std::size_t i = 0; i < rank; ++i)
      v[std::size_t(pivot_col[i])] = f.neg(m[i][std::size_t(free)]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gfconj::linalg
