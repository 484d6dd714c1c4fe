// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "gfconj/quadring.hpp"

namespace gfconj {

// rho = (P + Delta) / Q in a real context, with Q | N(P + Delta). The branch
// is the context's fixed embedding of Delta, so (P, Q) identifies the value.
struct Surd {
  ContextPtr ctx;
  Poly P, Q;
};

// (a, b, c) with a rho^2 + b rho + c = 0.
struct SurdEquation {
  Poly a, b, c;
};

Surd make_surd(ContextPtr ctx, const Poly& P, const Poly& Q);
SurdEquation equation(const Surd& s);
Degree degree(const Surd& s);
Degree conjugate_degree(const Surd& s);
bool is_reduced(const Surd& s);

struct CfStep {
  Poly A;
  Surd next;
};
CfStep cf_step(const Surd& s);

// P_0 = 1, P_1 = A_0, Q_0 = 0, Q_1 = 1, X_{n+1} = X_n A_n + X_{n-1}.
struct Convergents {
  std::vector<Poly> P, Q, partial_quotients;
  void push(const Poly& A);
};

struct Expansion {
  std::vector<Poly> preperiod, period;
  Convergents conv;
  std::vector<Surd> states;  // states[n] = rho_n
  std::int64_t stated_bound = 0;
  bool within_stated_bound = true;
  std::size_t period_length() const { return period.size(); }
};

// Iterate cf_step until a state repeats. Exceeding 4 * bound steps without a
// repeat is an InternalInvariantViolation.
Expansion expand_periodic(const Surd& s, std::int64_t bound);

// q^{2m} in char 2, q^{3m} in odd characteristic (saturating).
std::int64_t period_bound(const QuadContext& ctx);

// Start used by the unit algorithms: b + Delta in char 2 (reduced) and
// sqrt(c) in odd characteristic, whose expansion is reduced from step 1 on.
Surd standard_start(ContextPtr ctx);

std::int64_t saturating_pow(std::int64_t base, std::int64_t exp);

}  // namespace gfconj
