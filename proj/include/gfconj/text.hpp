// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gfconj/matrix.hpp"
#include "gfconj/poly.hpp"

namespace gfconj {

// Polynomial grammar: terms c*x^i, x^i, x, c joined by + and -. Coefficients
// are integers (prime fields) or expressions in the generator a, with
// parentheses for multi-term coefficients, e.g. (a+1)*x^2+a*x+1.
std::string format_poly(const Poly& p);
Poly parse_poly(const Field& f, std::string_view text, int line = 1,
                int column = 1);

std::string format_matrix(const Matrix2& m);
Matrix2 parse_matrix(const Field& f, std::string_view text, int line = 1,
                     int column = 1);

// field p=<prime> k=<int> [modulus=<poly in a>]
std::string format_field_header(const Field& f);
const Field& parse_field_header(std::string_view text, int line = 1);

struct ProblemFile {
  const Field* field = nullptr;
  std::map<std::string, Matrix2> matrices;  // A, B
  std::map<std::string, Poly> polys;        // D, b, c, d
  bool has_matrix(const std::string& k) const { return matrices.count(k) > 0; }
  bool has_poly(const std::string& k) const { return polys.count(k) > 0; }
  const Matrix2& matrix(const std::string& k) const;
  const Poly& poly(const std::string& k) const;
};

ProblemFile parse_problem(std::string_view text);

}  // namespace gfconj
