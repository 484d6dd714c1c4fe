// SPDX-License-Identifier: Apache-2.0
#include "gfconj/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "gfconj/cfrac.hpp"
#include "gfconj/conjugacy.hpp"
#include "gfconj/error.hpp"
#include "gfconj/normsolver.hpp"
#include "gfconj/oracle.hpp"
#include "gfconj/text.hpp"
#include "gfconj/units.hpp"

namespace gfconj {

namespace {

// Pinned limits.
constexpr double kRoundTripSeconds = 300.0;
constexpr double kFastSeconds = 1.0;
constexpr std::size_t kOraclePairCap = 10000;
constexpr int kOracleMaxDeg = 3;
constexpr int kNormMaxDeg = 4;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int scaled(int full, int percent) {
  return std::max(1, int((std::int64_t(full) * percent + 99) / 100));
}

Poly random_poly(const Field& f, std::mt19937_64& rng, int max_deg) {
  std::vector<std::uint16_t> c(std::size_t(rng() % std::uint64_t(max_deg + 2)));
  for (auto& x : c) x = std::uint16_t(rng() % f.q());
  return Poly::from_codes(f, c);
}

Poly random_poly_exact(const Field& f, std::mt19937_64& rng, int deg) {
  std::vector<std::uint16_t> c(std::size_t(deg + 1));
  for (auto& x : c) x = std::uint16_t(rng() % f.q());
  c.back() = std::uint16_t(1 + rng() % (f.q() - 1));
  return Poly::from_codes(f, c);
}

Matrix2 random_matrix(const Field& f, std::mt19937_64& rng, int max_deg) {
  return {random_poly(f, rng, max_deg), random_poly(f, rng, max_deg),
          random_poly(f, rng, max_deg), random_poly(f, rng, max_deg)};
}

// Product of 1..4 factors: translations, swaps and constant diagonal scalings.
Matrix2 random_conjugator(const Field& f, std::mt19937_64& rng) {
  Matrix2 U = Matrix2::identity(f);
  const int n = 1 + int(rng() % 4);
  const Poly one(f, f.one());
  for (int i = 0; i < n; ++i) {
    switch (rng() % 4) {
      case 0: U = Matrix2::upper(random_poly(f, rng, 2)) * U; break;
      case 1: U = Matrix2::lower(random_poly(f, rng, 2)) * U; break;
      case 2: U = Matrix2::swap(f) * U; break;
      default: {
        const FieldElement c = f.element(std::uint16_t(1 + rng() % (f.q() - 1)));
        U = Matrix2::diag(Poly(f, c), one) * U;
      }
    }
  }
  return U;
}

struct Context {
  const AcceptanceOptions& opts;
  std::mt19937_64 rng;
  int audit_max = -1;
  std::size_t audit_count = 0;
  int audit_violations = 0;
  std::string audit_worst;

  void audit(const Matrix2& A, const Matrix2& B, const Certificate& c) {
    if (!c.witness) return;
    ++audit_count;
    const BoundReport b = degree_bound(A, B);
    if (BigInt(c.witness_degree) > b.theorem_bound) ++audit_violations;
    if (c.witness_degree > audit_max) {
      audit_max = c.witness_degree;
      std::ostringstream os;
      os << "q=" << A.field().q() << " delta=" << b.delta << " bound " << b.theorem_bound;
      audit_worst = os.str();
    }
  }
};

CriterionResult round_trip(Context& cx) {
  CriterionResult r{1, "round-trip soundness", true, "", 0};
  const int per_field = scaled(500, cx.opts.budget_percent);
  const auto t0 = Clock::now();
  int ok = 0, total = 0;
  std::string first_fail;
  for (const Field* f : {&Field::get(2), &Field::get(3), &Field::get(2, 2)}) {
    for (int i = 0; i < per_field; ++i) {
      const Matrix2 A = random_matrix(*f, cx.rng, 2);
      const Matrix2 U = random_conjugator(*f, cx.rng);
      const Matrix2 B = A.conjugated_by(U);
      ++total;
      try {
        const Certificate c = decide(A, B);
        if (c.verdict == Verdict::Conjugate && verify_witness(A, B, *c.witness)) {
          ++ok;
          cx.audit(A, B, c);
          continue;
        }
      } catch (const Error& e) {
        if (first_fail.empty()) first_fail = std::string(", ") + e.what();
      }
      if (first_fail.empty() || first_fail.find(" A=") == std::string::npos)
        first_fail += " (first failure A=" + format_matrix(A) + " B=" + format_matrix(B) + ")";
    }
  }
  r.seconds = since(t0);
  r.pass = ok == total && r.seconds <= kRoundTripSeconds;
  std::ostringstream os;
  os << ok << "/" << total << " conjugate with verified witness over q = 2, 3, 4 in "
     << std::fixed;
  os.precision(1);
  os << r.seconds << " s (limit " << kRoundTripSeconds << " s)" << first_fail;
  r.detail = os.str();
  return r;
}

CriterionResult oracle_completeness(Context& cx) {
  CriterionResult r{2, "oracle completeness over F_2, degree <= 1", true, "", 0};
  const auto t0 = Clock::now();
  const Field& f = Field::get(2);
  std::vector<Poly> entries;
  for_each_poly(f, 1, [&](const Poly& p) {
    entries.push_back(p);
    return true;
  });
  std::vector<Matrix2> mats;
  for (const auto& a : entries)
    for (const auto& b : entries)
      for (const auto& c : entries)
        for (const auto& d : entries) mats.push_back({a, b, c, d});
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = 0; j < mats.size(); ++j)
      if (mats[i].trace() == mats[j].trace() && mats[i].det() == mats[j].det())
        pairs.emplace_back(i, j);
  const std::size_t eligible = pairs.size();
  std::shuffle(pairs.begin(), pairs.end(), cx.rng);
  const std::size_t cap =
      std::min(pairs.size(), std::size_t(scaled(int(kOraclePairCap), cx.opts.budget_percent)));
  pairs.resize(cap);
  std::size_t oracle_pos = 0, solver_pos = 0, beyond_cap = 0, disagree = 0, bad = 0;
  for (const auto& [i, j] : pairs) {
    const Matrix2& A = mats[i];
    const Matrix2& B = mats[j];
    const Certificate c = decide(A, B);
    const bool s = c.verdict == Verdict::Conjugate;
    if (s) {
      ++solver_pos;
      if (!verify_witness(A, B, *c.witness)) ++bad;
      cx.audit(A, B, c);
    }
    const std::optional<Matrix2> o = oracle::brute_decide(A, B, {kOracleMaxDeg});
    if (o) {
      ++oracle_pos;
      if (!verify_witness(A, B, *o)) ++bad;
      if (!s) ++disagree;
    } else if (s) {
      ++beyond_cap;
    }
  }
  r.seconds = since(t0);
  r.pass = disagree == 0 && bad == 0;
  std::ostringstream os;
  os << pairs.size() << " of " << eligible << " pairs with equal trace and det: "
     << oracle_pos << " oracle-positive, " << solver_pos << " solver-positive, "
     << beyond_cap << " with witnesses only above degree " << kOracleMaxDeg << ", "
     << disagree << " disagreements, " << bad << " failed re-verifications";
  r.detail = os.str();
  return r;
}

CriterionResult pell(Context&) {
  CriterionResult r{3, "Pell equation over F_3, D = x^2+1", true, "", 0};
  const auto t0 = Clock::now();
  const Field& f = Field::get(3);
  const Poly D = parse_poly(f, "x^2+1");
  const auto [u, v] = pell_fundamental(D);
  r.seconds = since(t0);
  const bool exact = u * u - D * v * v == Poly(f, f.one());
  const int lim = int(saturating_pow(f.q(), D.deg()));
  const bool small = u.deg() <= lim && v.deg() <= lim;
  const Poly eu = parse_poly(f, "x^2+2"), ev = parse_poly(f, "x");
  const bool expected = (u == eu || u == -eu) && (v == ev || v == -ev);
  r.pass = exact && small && expected && r.seconds <= kFastSeconds;
  std::ostringstream os;
  os << "u = " << format_poly(u) << ", v = " << format_poly(v)
     << (exact ? ", u^2 - D v^2 = 1" : ", NORM WRONG") << ", degrees <= " << lim;
  r.detail = os.str();
  return r;
}

CriterionResult char2_units(Context&) {
  CriterionResult r{4, "char-2 unit group, F_2 b = x c = 1", true, "", 0};
  const auto t0 = Clock::now();
  const Field& f = Field::get(2);
  const Poly x = parse_poly(f, "x"), one(f, f.one());
  const ContextPtr ctx = standard_context(x, one);
  const UnitGroupDescription unit = fundamental_unit(ctx);
  const auto found = oracle::brute_units(x, one, {3});
  // Every unit found is eps^n times a constant of norm 1 (only 1 over F_2).
  std::size_t explained = 0;
  int min_pos = 1 << 20;
  for (const auto& [u, v] : found) {
    const auto [nu, nv] = ctx->from_form(u, v);
    const QuadInt w(ctx, nu, nv);
    const int d = w.degree().value();
    if (d != 0) min_pos = std::min(min_pos, std::abs(d));
    for (int n = -8; n <= 8; ++n) {
      if (unit.generator.pow(n) == w) {
        ++explained;
        break;
      }
    }
  }
  r.seconds = since(t0);
  r.pass = unit.degree_k == 1 && unit.generator.norm().is_one() &&
           explained == found.size() && min_pos == unit.degree_k &&
           r.seconds <= kFastSeconds;
  std::ostringstream os;
  os << "generator " << format_poly(unit.generator.u()) << " + Delta*("
     << format_poly(unit.generator.v()) << "), degree " << unit.degree_k << "; "
     << explained << "/" << found.size() << " units up to degree 3 are its powers"
     << ", least positive degree " << min_pos;
  r.detail = os.str();
  return r;
}

// Random real contexts with delta = max(deg b, deg c) <= 2.
ContextPtr random_real(const Field& f, std::mt19937_64& rng, int max_delta) {
  for (;;) {
    const Poly b = f.char2() ? random_poly_exact(f, rng, 1 + int(rng() % max_delta)) : Poly(f);
    const Poly c = random_poly(f, rng, max_delta);
    if (c.is_zero()) continue;
    try {
      ContextPtr ctx = standard_context(b, c);
      if (ctx->kind() == QuadCase::Real) return ctx;
    } catch (const InvalidInput&) {
    }
  }
}

CriterionResult cf_laws(Context& cx) {
  CriterionResult r{5, "continued-fraction laws", true, "", 0};
  const auto t0 = Clock::now();
  const int n = scaled(200, cx.opts.budget_percent);
  int violations = 0, checked = 0;
  std::int64_t max_T = 0;
  for (int i = 0; i < n; ++i) {
    const Field& f = Field::get(i % 2 ? 3 : 2);
    const ContextPtr ctx = random_real(f, cx.rng, 2);
    const int delta = std::max(ctx->b().deg(), ctx->c().deg());
    const std::int64_t bound = f.char2() ? saturating_pow(f.q(), 2 * ctx->m())
                                         : saturating_pow(f.q(), 3 * delta);
    const Expansion ex = expand_periodic(standard_start(ctx), period_bound(*ctx));
    ++checked;
    const auto T = std::int64_t(ex.period_length());
    max_T = std::max(max_T, T);
    if (T > bound) ++violations;
    if (f.char2() && !ex.preperiod.empty()) ++violations;
    const auto& cv = ex.conv;
    for (std::size_t k = 0; k + 1 < cv.P.size(); ++k) {
      // P_{k+1} Q_k + Q_{k+1} P_k up to sign, in the recorded indexing.
      const Poly s = cv.P[k + 1] * cv.Q[k] - cv.Q[k + 1] * cv.P[k];
      const bool unit_sign = s.is_one() || (-s).is_one();
      if (!unit_sign) ++violations;
    }
  }
  r.seconds = since(t0);
  r.pass = violations == 0;
  std::ostringstream os;
  os << checked << " contexts over F_2 and F_3, longest period " << max_T << ", "
     << violations << " violations";
  r.detail = os.str();
  return r;
}

CriterionResult multiplicativity(Context& cx) {
  CriterionResult r{6, "Deg and norm multiplicativity", true, "", 0};
  const auto t0 = Clock::now();
  const int n = scaled(10000, cx.opts.budget_percent);
  const Field& f2 = Field::get(2);
  const Field& f3 = Field::get(3);
  struct Class {
    const char* name;
    ContextPtr ctx;
  };
  const std::vector<Class> classes{
      {"real char 2", standard_context(parse_poly(f2, "x"), parse_poly(f2, "1"))},
      {"real odd", standard_context(Poly(f3), parse_poly(f3, "x^2+1"))},
      {"imaginary char 2", standard_context(parse_poly(f2, "x"), parse_poly(f2, "x^3"))},
      {"imaginary odd", standard_context(Poly(f3), parse_poly(f3, "x^3+x+1"))},
      {"rational", standard_context(parse_poly(f2, "x+1"), parse_poly(f2, "x"))},
  };
  long long bad_norm = 0, bad_deg = 0, pairs = 0;
  for (const auto& cl : classes) {
    const Field& f = cl.ctx->field();
    const bool odd_deg = cl.ctx->kind() == QuadCase::Imaginary &&
                         cl.ctx->imaginary_kind() == ImaginaryKind::OddDegree;
    for (int i = 0; i < n; ++i) {
      const QuadInt a(cl.ctx, random_poly(f, cx.rng, 4), random_poly(f, cx.rng, 4));
      const QuadInt b(cl.ctx, random_poly(f, cx.rng, 4), random_poly(f, cx.rng, 4));
      const QuadInt ab = a * b;
      ++pairs;
      if (ab.norm() != a.norm() * b.norm()) ++bad_norm;
      if (odd_deg && !(ab.deg_imaginary() == a.deg_imaginary() + b.deg_imaginary())) ++bad_deg;
    }
  }
  r.seconds = since(t0);
  r.pass = bad_norm == 0 && bad_deg == 0;
  std::ostringstream os;
  os << pairs << " pairs over " << classes.size() << " context classes: " << bad_norm
     << " norm and " << bad_deg << " Deg mismatches";
  r.detail = os.str();
  return r;
}

// (u, v) -> (u, v) mod P after one multiplication.
std::pair<Poly, Poly> mul_mod(const QuadContext& ctx, const std::pair<Poly, Poly>& a,
                              const std::pair<Poly, Poly>& b, const Poly& P) {
  auto [u, v] = ctx.mul(a.first, a.second, b.first, b.second);
  return {u.divmod(P).second, v.divmod(P).second};
}

CriterionResult residue_periods(Context& cx) {
  CriterionResult r{7, "residue periodicity", true, "", 0};
  const auto t0 = Clock::now();
  const int n = scaled(100, cx.opts.budget_percent);
  int broken = 0, over_pair = 0, over_paper = 0;
  std::int64_t max_T = 0;
  for (int i = 0; i < n; ++i) {
    const Field& f = Field::get(i % 2 ? 3 : 2);
    const ContextPtr ctx = random_real(f, cx.rng, 2);
    const QuadInt eps = fundamental_unit(ctx).generator;
    const Poly P = random_poly_exact(f, cx.rng, 1 + int(cx.rng() % 3));
    const ResiduePeriod rp = residue_period(eps, P);
    const std::int64_t T = rp.period;
    max_T = std::max(max_T, T);
    if (T > rp.pair_bound) ++over_pair;
    if (!rp.within_paper_bound()) ++over_paper;
    // r_l for l = 0 .. 3T, compared at distance T.
    std::vector<std::pair<Poly, Poly>> res;
    const std::pair<Poly, Poly> e{eps.u().divmod(P).second, eps.v().divmod(P).second};
    std::pair<Poly, Poly> cur{Poly(f, f.one()).divmod(P).second, Poly(f)};
    for (std::int64_t l = 0; l <= 3 * T; ++l) {
      res.push_back(cur);
      cur = mul_mod(*ctx, cur, e, P);
    }
    for (std::int64_t l = 0; l <= 2 * T; ++l)
      if (res[std::size_t(l + T)] != res[std::size_t(l)]) ++broken;
  }
  r.seconds = since(t0);
  r.pass = broken == 0 && over_pair == 0;
  std::ostringstream os;
  os << n << " instances, longest period " << max_T << ", " << broken
     << " periodicity failures, " << over_pair << " above q^{2 deg P}; logged: " << over_paper
     << " above q^{deg P}";
  r.detail = os.str();
  return r;
}

CriterionResult centralizer(Context&) {
  CriterionResult r{8, "centralizer generators", true, "", 0};
  const auto t0 = Clock::now();
  const Field& f = Field::get(2);
  const Matrix2 A = parse_matrix(f, "[[0,1],[1,x]]");
  const CentralizerResult g = centralizer_generator(A);
  const Matrix2 expect = parse_matrix(f, "[[x,1],[1,0]]");
  bool ok = false;
  std::string got = "none";
  if (g.generator) {
    const Matrix2& U = *g.generator;
    got = format_matrix(U);
    const auto inv = expect.inverse();
    bool match = false;
    for (FieldElement c : f.elements()) {
      if (c.is_zero()) continue;
      if (U == expect.scaled(c) || U == inv->scaled(c)) match = true;
    }
    ok = match && U * A == A * U && U.is_unimodular() && U.degree().value() == 1 &&
         g.bound == 4;
  }
  const CentralizerResult im = centralizer_generator(parse_matrix(f, "[[0,1],[x,0]]"));
  const bool finite = !im.generator && im.description.rfind("imaginary", 0) == 0;
  r.seconds = since(t0);
  r.pass = ok && finite && r.seconds <= kFastSeconds;
  r.detail = "generator " + got + " (bound " + g.bound.str() + "); [[0,1],[x,0]] " +
             (finite ? "reported finite" : "NOT reported finite");
  return r;
}

CriterionResult norm_completeness(Context& cx) {
  CriterionResult r{9, "norm-equation completeness", true, "", 0};
  const auto t0 = Clock::now();
  const int n = scaled(200, cx.opts.budget_percent);
  int equal = 0, total = 0;
  std::string first;
  for (int i = 0; i < n; ++i) {
    const Field& f = Field::get(i % 2 ? 3 : 2);
    const Poly b = f.char2() ? random_poly(f, cx.rng, 2) : Poly(f);
    const Poly c = random_poly(f, cx.rng, 2), d = random_poly(f, cx.rng, 2);
    const Poly one(f, f.one());
    ++total;
    const auto mine = f.char2() ? form_solutions_up_to(b, c, one, d, kNormMaxDeg)
                                : form_solutions_up_to(Poly(f), -c, one, d, kNormMaxDeg);
    const auto ref = oracle::brute_norm_solutions(b, c, d, {kNormMaxDeg});
    if (mine == ref) {
      ++equal;
    } else if (first.empty()) {
      first = " (first mismatch q=" + std::to_string(f.q()) + " b=" + format_poly(b) +
              " c=" + format_poly(c) + " d=" + format_poly(d) + ")";
    }
  }
  r.seconds = since(t0);
  r.pass = equal == total;
  r.detail = std::to_string(equal) + "/" + std::to_string(total) +
             " solution sets equal to brute force at degree " + std::to_string(kNormMaxDeg) +
             first;
  return r;
}

CriterionResult audit(Context& cx) {
  CriterionResult r{10, "witness-degree audit", true, "", 0};
  r.pass = cx.audit_count > 0 && cx.audit_violations == 0;
  std::ostringstream os;
  os << cx.audit_count << " witnesses from criteria 1-2, " << cx.audit_violations
     << " above the bound, empirical maximum degree " << cx.audit_max;
  if (!cx.audit_worst.empty()) os << " (" << cx.audit_worst << ")";
  if (cx.audit_count == 0) os << "; run criteria 1 or 2 first";
  r.detail = os.str();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opts, const std::function<void(const CriterionResult&)>& on_result) {
  Context cx{opts, std::mt19937_64(opts.seed), -1, 0, 0, {}};
  using Fn = CriterionResult (*)(Context&);
  const Fn all[] = {round_trip,       oracle_completeness, pell,    char2_units,
                    cf_laws,          multiplicativity,    residue_periods,
                    centralizer,      norm_completeness,   audit};
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), id) == opts.only.end())
      continue;
    CriterionResult r;
    const auto t0 = Clock::now();
    try {
      r = all[id - 1](cx);
    } catch (const std::exception& e) {
      r.id = id;
      r.name = "criterion " + std::to_string(id);
      r.pass = false;
      r.detail = std::string("threw: ") + e.what();
      r.seconds = since(t0);
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  "
     << r.name << ": " << r.detail;
  return os.str();
}

}  // namespace gfconj
