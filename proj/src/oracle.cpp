// SPDX-License-Identifier: Apache-2.0
#include "gfconj/oracle.hpp"

#include <algorithm>

#include "gfconj/error.hpp"

namespace gfconj::oracle {

namespace {

std::vector<Poly> all_polys(const Field& f, int max_deg) {
  std::vector<Poly> out;
  for_each_poly(f, max_deg, [&](const Poly& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

void check_budget(const Field& f, const SearchBudget& b, int arity) {
  std::uint64_t n = 1;
  for (int i = 0; i <= b.max_deg; ++i) {
    n *= f.q();
    if (n > b.ceiling) break;
  }
  std::uint64_t total = 1;
  for (int i = 0; i < arity; ++i) {
    total *= n;
    if (total > b.ceiling)
      throw BudgetExceeded("oracle enumeration exceeds the budget ceiling");
  }
}

std::vector<Poly> times(const std::vector<Poly>& ps, const Poly& m) {
  std::vector<Poly> out;
  out.reserve(ps.size());
  for (const Poly& p : ps) out.push_back(p * m);
  return out;
}

bool pair_less(const std::pair<Poly, Poly>& a, const std::pair<Poly, Poly>& b) {
  if (a.first < b.first) return true;
  if (b.first < a.first) return false;
  return a.second < b.second;
}

}  // namespace

std::optional<Matrix2> brute_decide(const Matrix2& A, const Matrix2& B,
                                    const SearchBudget& budget) {
  const Field& f = A.field();
  // Visited tuples are (u, v, p), with a q loop only for survivors of (11).
  check_budget(f, budget, 3);
  const std::vector<Poly> ps = all_polys(f, budget.max_deg);
  // Entry equations of U A = B U for U = [[u, p], [v, q]]:
  //   (11) p a21 = (b11 - a11) u + b12 v
  //   (21) q a21 = b21 u + (b22 - a11) v
  //   (12) u a12 + p (a22 - b11) = b12 q
  //   (22) v a12 + q (a22 - b22) = b21 p
  const auto u11 = times(ps, B.a11 - A.a11);
  const auto v11 = times(ps, B.a12);
  const auto p11 = times(ps, A.a21);
  const auto u21 = times(ps, B.a21);
  const auto v21 = times(ps, B.a22 - A.a11);
  const auto q21 = times(ps, A.a21);
  const auto u12 = times(ps, A.a12);
  const auto p12 = times(ps, A.a22 - B.a11);
  const auto q12 = times(ps, B.a12);
  const auto v22 = times(ps, A.a12);
  const auto q22 = times(ps, A.a22 - B.a22);
  const auto p22 = times(ps, B.a21);
  const std::size_t n = ps.size();
  for (std::size_t iu = 0; iu < n; ++iu) {
    for (std::size_t iv = 0; iv < n; ++iv) {
      const Poly r11 = u11[iu] + v11[iv];
      const Poly r21 = u21[iu] + v21[iv];
      for (std::size_t ip = 0; ip < n; ++ip) {
        if (p11[ip] != r11) continue;
        const Poly l12 = u12[iu] + p12[ip];
        for (std::size_t iq = 0; iq < n; ++iq) {
          if (q21[iq] != r21 || q12[iq] != l12) continue;
          if (v22[iv] + q22[iq] != p22[ip]) continue;
          const Poly det = ps[iu] * ps[iq] - ps[ip] * ps[iv];
          if (det.deg() != 0) continue;
          Matrix2 U{ps[iu], ps[ip], ps[iv], ps[iq]};
          // Trusted only after the full identity holds.
          if (U * A == B * U) return U;
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<Poly, Poly>> brute_form_solutions(
    const Poly& scale, const Poly& beta, const Poly& gamma, const Poly& d,
    const SearchBudget& budget) {
  const Field& f = scale.field();
  check_budget(f, budget, 2);
  const std::vector<Poly> ps = all_polys(f, budget.max_deg);
  const auto su = [&] {
    std::vector<Poly> out;
    for (const Poly& u : ps) out.push_back(scale * u * u);
    return out;
  }();
  std::vector<std::pair<Poly, Poly>> out;
  for (const Poly& v : ps) {
    const Poly rhs = d - gamma * v * v;
    const Poly bv = beta * v;
    for (std::size_t iu = 0; iu < ps.size(); ++iu) {
      if (su[iu] + bv * ps[iu] == rhs) out.emplace_back(ps[iu], v);
    }
  }
  for (const auto& [u, v] : out)
    ensure(scale * u * u + beta * u * v + gamma * v * v == d,
           "oracle solution fails substitution");
  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

std::vector<std::pair<Poly, Poly>> brute_norm_solutions(
    const Poly& b0, const Poly& c, const Poly& d, const SearchBudget& budget) {
  const Field& f = c.field();
  const Poly b = b0.bound() ? b0 : Poly(f);
  const Poly one(f, f.one());
  if (f.char2()) return brute_form_solutions(one, b, c, d, budget);
  if (!b.is_zero()) throw InvalidInput("odd characteristic uses u^2 - c v^2");
  return brute_form_solutions(one, b, -c, d, budget);
}

std::vector<std::pair<Poly, Poly>> brute_units(const Poly& b, const Poly& c,
                                               const SearchBudget& budget) {
  const Field& f = c.field();
  auto out = brute_norm_solutions(b, c, Poly(f, f.one()), budget);
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::max(x.first.deg(), x.second.deg()) <
           std::max(y.first.deg(), y.second.deg());
  });
  return out;
}

}  // namespace gfconj::oracle
