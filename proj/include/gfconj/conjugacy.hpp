// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "gfconj/matrix.hpp"
#include "gfconj/normsolver.hpp"
#include "gfconj/quadring.hpp"

namespace gfconj {

using BigInt = boost::multiprecision::cpp_int;

enum class Verdict { Conjugate, NotConjugate };
enum class Reason {
  None,
  TraceMismatch,
  DetMismatch,
  DiagonalCriterionFailed,
  SolutionSetExhausted,
};
const char* to_string(Verdict v);
const char* to_string(Reason r);

struct BoundReport {
  int delta = 0;             // max entry degree of A and B
  std::uint32_t p = 2, q = 2;
  std::string case_label;    // scalar, triangular, rational, real, imaginary
  BigInt case_bound;         // 2 delta when the case is imaginary, else the theorem bound
  BigInt theorem_bound;      // char 2: delta (q^{6 delta} + 2); odd: (1+q) delta q^{7 delta}
};

struct Certificate {
  Verdict verdict = Verdict::NotConjugate;
  Reason reason = Reason::None;
  std::optional<Matrix2> witness;
  Poly witness_det;
  int witness_degree = -1;
  std::string case_label;
  std::string context;       // classification of the reduced pair
  BoundReport bound;
  std::vector<std::string> transcript;
};

struct DecideOptions {
  BaseMethod base_method = BaseMethod::Auto;
  // Run the general pipeline even when a triangular witness exists.
  bool skip_fast_paths = false;
};

// B = U A U^{-1}, checked as U A = B U with det U in F*.
bool verify_witness(const Matrix2& A, const Matrix2& B, const Matrix2& U);

Certificate decide(const Matrix2& A, const Matrix2& B,
                   const DecideOptions& opts = {});

BoundReport degree_bound(const Matrix2& A, const Matrix2& B);

// Deterministic text block: verdict, witness, checks, case, bound.
std::string serialize(const Certificate& c);
// The witness line of a serialized certificate, if any.
std::optional<Matrix2> parse_certificate_witness(const Field& f,
                                                 const std::string& text);

// Closed-form test for B diagonal (non-scalar) from the eigenvector
// lattice. nullopt when B is not diagonal.
std::optional<bool> diagonal_criterion(const Matrix2& A, const Matrix2& B);
// The same test with the gcds exactly as printed in the source formula.
std::optional<bool> diagonal_criterion_as_printed(const Matrix2& A,
                                                  const Matrix2& B);

struct CentralizerResult {
  std::optional<Matrix2> generator;
  std::string description;
  ContextPtr ctx;
  BigInt bound;  // deg(A) q^{2 deg A}
};

// Z(A) = F[x][A0] intersected with GL(2, F[x]) for A0 the primitive part of
// A - a11 I; the generator is u I + v A0 with u + Delta v the fundamental unit.
CentralizerResult centralizer_generator(const Matrix2& A);

}  // namespace gfconj
