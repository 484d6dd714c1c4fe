// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gfconj/quadring.hpp"
#include "gfconj/units.hpp"

namespace gfconj {

// All solvers work in a context's normalized coordinates: they return
// elements u + Delta v with N(u + Delta v) = d, N the context's norm.

// Finite list, or an infinite family u = u0 + slope * v (v free) together
// with the instances of deg v <= the requested instance degree.
struct NormSolutions {
  std::vector<QuadInt> solutions;
  bool infinite = false;
  std::vector<Poly> family_u0;
  Poly family_slope;
  std::string description;
};

// Rational contexts, and the char-2 contexts with trace 0.
NormSolutions solve_rational(const ContextPtr& ctx, const Poly& d,
                             int instance_deg = 2);

// Imaginary contexts. Complete and finite.
std::vector<QuadInt> solve_imaginary(const ContextPtr& ctx, const Poly& d);

enum class BaseMethod { Auto, Enumerate, Ideals };

struct SolutionFamily {
  ContextPtr ctx;
  Poly d;
  UnitGroupDescription unit;
  // Every solution of series degree 0..k-1, sorted.
  std::vector<QuadInt> base_solutions;
  BaseMethod method_used = BaseMethod::Enumerate;
};

// Real contexts. d must be nonzero.
SolutionFamily solve_real_base(const ContextPtr& ctx, const Poly& d,
                               const UnitGroupDescription& unit,
                               BaseMethod method = BaseMethod::Auto);

// All r with deg r < deg e and e | r^2 + trace r + nrm.
std::vector<Poly> quadratic_roots_mod(const Poly& trace, const Poly& nrm,
                                      const Poly& e);

struct ResiduePeriod {
  std::int64_t period = 1;
  std::int64_t pair_bound = 1;   // q^{2 deg P}, asserted
  std::int64_t paper_bound = 1;  // q^{deg P}, logged only
  bool within_paper_bound() const { return period <= paper_bound; }
};

// Least T >= 1 with unit^T = 1 modulo the modulus, i.e. the period of the
// residue pairs of the powers unit^n = x_n + Delta y_n.
ResiduePeriod residue_period(const QuadInt& unit, const Poly& modulus);

// modulus | cu * u + cv * v
struct LinearForm {
  Poly cu, cv, modulus;
};
bool satisfies(const std::vector<LinearForm>& forms, const Poly& u,
               const Poly& v);

struct FilteredSolution {
  QuadInt omega;
  long long l = 0;  // omega = base_solutions[base_index] * unit^l
  std::size_t base_index = 0;
};

struct FilterReport {
  std::vector<FilteredSolution> survivors;
  std::int64_t period = 1;
  std::int64_t candidates_checked = 0;
};

// Scan base * unit^l over one full residue period per base solution,
// starting from the l that balances deg omega against deg omega'. Stops a
// base after max_per_base survivors.
FilterReport filtered_solutions(
    const SolutionFamily& fam, const std::vector<LinearForm>& forms,
    std::size_t max_per_base = std::numeric_limits<std::size_t>::max());

// Every solution with deg v <= max_v_deg (normalized coordinates), any
// case. Infinite rational families are cut at the same degree.
std::vector<QuadInt> solutions_with_v_degree(const ContextPtr& ctx,
                                             const Poly& d, int max_v_deg);

// The form equation scale u^2 + beta uv + gamma v^2 = d: every solution with
// deg u, deg v <= max_deg, in form coordinates, sorted.
std::vector<std::pair<Poly, Poly>> form_solutions_up_to(const Poly& beta,
                                                        const Poly& gamma,
                                                        const Poly& scale,
                                                        const Poly& d,
                                                        int max_deg);

}  // namespace gfconj
