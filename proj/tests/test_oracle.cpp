// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "gfconj/error.hpp"
#include "gfconj/oracle.hpp"
#include "gfconj/text.hpp"

using namespace gfconj;
using PP = std::pair<Poly, Poly>;

namespace {
Matrix2 M(const Field& f, const char* s) { return parse_matrix(f, s); }
Poly P(const Field& f, const char* s) { return parse_poly(f, s); }
bool has(const std::vector<PP>& v, const PP& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}
}  // namespace

TEST_CASE("brute_decide") {
  const Field& f2 = Field::get(2);
  const Matrix2 A = M(f2, "[[0,1],[x,0]]");
  CHECK(oracle::brute_decide(A, A, {0}) == Matrix2::identity(f2));
  const Matrix2 B = M(f2, "[[x,x+1],[x,x]]");
  CHECK(oracle::brute_decide(A, B, {0}) == M(f2, "[[1,1],[0,1]]"));
  CHECK_FALSE(oracle::brute_decide(M(f2, "[[1,0],[0,0]]"), M(f2, "[[0,0],[0,0]]"), {2}));
  CHECK_THROWS_AS(oracle::brute_decide(A, B, {12}), BudgetExceeded);
}

TEST_CASE("brute_norm_solutions") {
  const Field& f2 = Field::get(2);
  const Poly x = P(f2, "x"), one = P(f2, "1"), zero(f2);
  auto s = oracle::brute_norm_solutions(x, one, one, {1});
  CHECK(has(s, {one, zero}));
  CHECK(has(s, {x, one}));
  // Delta and Delta^2 = 1 + x Delta also have norm 1 in this range.
  CHECK(s.size() == 4);
  for (const auto& [u, v] : s) CHECK(u * u + x * u * v + v * v == one);
  CHECK(has(oracle::brute_norm_solutions(x, one, zero, {1}), {zero, zero}));
  CHECK(oracle::brute_norm_solutions(x, P(f2, "x^3"), x, {3}).empty());
  // Deterministic order.
  CHECK(s == oracle::brute_norm_solutions(x, one, one, {1}));
  CHECK_THROWS_AS(oracle::brute_norm_solutions(x, one, one, {40}), BudgetExceeded);
}

TEST_CASE("brute_units") {
  const Field& f2 = Field::get(2);
  const Poly x = P(f2, "x"), one = P(f2, "1"), zero(f2);
  auto u = oracle::brute_units(x, one, {1});
  CHECK(has(u, {one, zero}));
  CHECK(has(u, {x, one}));
  CHECK(oracle::brute_units(x, P(f2, "x^3"), {2}) == std::vector<PP>{{one, zero}});
  const Field& f3 = Field::get(3);
  auto u3 = oracle::brute_units(Poly(f3), P(f3, "x^2+1"), {2});
  CHECK(has(u3, {P(f3, "x^2+2"), P(f3, "x")}));
}
