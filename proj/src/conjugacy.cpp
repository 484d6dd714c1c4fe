// SPDX-License-Identifier: Apache-2.0
#include "gfconj/conjugacy.hpp"

#include <algorithm>
#include <sstream>

#include "gfconj/cfrac.hpp"
#include "gfconj/error.hpp"
#include "gfconj/text.hpp"

namespace gfconj {

const char* to_string(Verdict v) {
  return v == Verdict::Conjugate ? "Conjugate" : "NotConjugate";
}

const char* to_string(Reason r) {
  switch (r) {
    case Reason::None: return "None";
    case Reason::TraceMismatch: return "TraceMismatch";
    case Reason::DetMismatch: return "DetMismatch";
    case Reason::DiagonalCriterionFailed: return "DiagonalCriterionFailed";
    case Reason::SolutionSetExhausted: return "SolutionSetExhausted";
  }
  return "?";
}

bool verify_witness(const Matrix2& A, const Matrix2& B, const Matrix2& U) {
  return U.is_unimodular() && U * A == B * U;
}

namespace {

int deg_or(const Poly& p, int neg) { return p.is_zero() ? neg : p.deg(); }

// M = C * original * C^{-1}; every step is recorded in C.
struct Reduced {
  Matrix2 M, C;
};

std::pair<int, int> measure(const Matrix2& m) {
  int mx = -1, sum = 0;
  for (const Poly* e : {&m.a11, &m.a12, &m.a21, &m.a22}) {
    mx = std::max(mx, deg_or(*e, -1));
    sum += deg_or(*e, -1) + 1;
  }
  return {mx, sum};
}

// [[1,t],[0,1]] M [[1,-t],[0,1]]
Matrix2 by_upper(const Matrix2& m, const Poly& t) {
  return {m.a11 + t * m.a21, m.a12 + t * (m.a22 - m.a11) - t * t * m.a21, m.a21,
          m.a22 - t * m.a21};
}

// [[1,0],[t,1]] M [[1,0],[-t,1]]
Matrix2 by_lower(const Matrix2& m, const Poly& t) {
  return {m.a11 - t * m.a12, m.a12, m.a21 + t * (m.a11 - m.a22) - t * t * m.a12,
          m.a22 + t * m.a12};
}

// Greedy degree reduction by monomial translations.
Reduced reduce(const Matrix2& A) {
  const Field& f = A.field();
  Reduced r{A, Matrix2::identity(f)};
  for (;;) {
    const auto cur = measure(r.M);
    auto best = cur;
    Matrix2 bestM = r.M, bestX = Matrix2::identity(f);
    auto consider = [&](const Matrix2& m2, const Matrix2& x) {
      const auto ms = measure(m2);
      if (ms < best) {
        best = ms;
        bestM = m2;
        bestX = x;
      }
    };
    const Matrix2& M = r.M;
    const int top = std::max({deg_or(M.a11, 0), deg_or(M.a12, 0), deg_or(M.a21, 0),
                              deg_or(M.a22, 0)});
    for (FieldElement c : f.elements()) {
      if (c.is_zero()) continue;
      if (!M.a21.is_zero())
        for (int e = 0; e <= top - M.a21.deg(); ++e) {
          const Poly t = Poly::monomial(f, c, e);
          consider(by_upper(M, t), Matrix2::upper(t));
        }
      if (!M.a12.is_zero())
        for (int e = 0; e <= top - M.a12.deg(); ++e) {
          const Poly t = Poly::monomial(f, c, e);
          consider(by_lower(M, t), Matrix2::lower(t));
        }
    }
    if (!(best < cur)) break;
    r.M = bestM;
    r.C = bestX * r.C;
  }
  // The elimination divides by the (2,1) entry.
  if (r.M.a21.is_zero()) {
    const Matrix2 X = r.M.a12.is_zero() ? Matrix2::lower(Poly(f, f.one()))
                                        : Matrix2::swap(f);
    r.M = r.M.conjugated_by(X);
    r.C = X * r.C;
  }
  ensure(r.M == A.conjugated_by(r.C), "normalization conjugator drifted");
  return r;
}

int delta_of(const Matrix2& A, const Matrix2& B) {
  return std::max(A.degree().value_or(0), B.degree().value_or(0));
}

BigInt big_pow(std::uint32_t q, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

BigInt theorem_bound(const Field& f, int delta) {
  const std::uint32_t q = f.q();
  if (f.char2()) return BigInt(delta) * (big_pow(q, 6 * delta) + 2);
  return BigInt(1 + q) * delta * big_pow(q, 7 * delta);
}

std::string lower_case(std::string s) {
  for (char& c : s) c = char(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// The quadratic relation of the elimination for the reduced pair.
struct Setup {
  Reduced ra, rb;
  ContextPtr ctx;
};

Setup setup(const Matrix2& A, const Matrix2& B) {
  Setup s{reduce(A), reduce(B), nullptr};
  const Matrix2& b = s.rb.M;
  // b21 u^2 + (b22 - b11) uv - b12 v^2 = alpha a21
  s.ctx = classify(b.a22 - b.a11, -b.a12, b.a21);
  return s;
}

BoundReport make_bound(const Matrix2& A, const Matrix2& B, const std::string& label) {
  const Field& f = A.field();
  BoundReport r;
  r.delta = delta_of(A, B);
  r.p = f.p();
  r.q = f.q();
  r.case_label = label;
  r.theorem_bound = theorem_bound(f, r.delta);
  r.case_bound = label == "imaginary" ? BigInt(2 * r.delta) : r.theorem_bound;
  return r;
}

std::optional<Matrix2> triangular_witness(const Matrix2& A0, const Matrix2& B0) {
  Matrix2 A = A0, B = B0;
  bool swapped = false;
  if (!(A.is_upper_triangular() && B.is_upper_triangular())) {
    if (!(A.is_lower_triangular() && B.is_lower_triangular())) return std::nullopt;
    const Matrix2 S = Matrix2::swap(A.field());
    A = A.conjugated_by(S);
    B = B.conjugated_by(S);
    swapped = true;
  }
  // U = [[u, p], [0, q]] with u, q constant. (12): p (a22 - b11) = b12 q - u a12.
  if (A.a11 != B.a11 || A.a22 != B.a22) return std::nullopt;
  const Field& f = A.field();
  const Poly den = A.a22 - B.a11;
  for (FieldElement u : f.elements()) {
    if (u.is_zero()) continue;
    for (FieldElement q : f.elements()) {
      if (q.is_zero()) continue;
      const Poly uu(f, u), qq(f, q);
      const Poly num = B.a12 * qq - A.a12 * uu;
      Poly p(f);
      if (den.is_zero()) {
        if (!num.is_zero()) continue;
      } else {
        auto e = num.exact_div(den);
        if (!e) continue;
        p = *e;
      }
      Matrix2 U{uu, p, Poly(f), qq};
      if (!verify_witness(A, B, U)) continue;
      if (swapped) {
        const Matrix2 S = Matrix2::swap(f);
        U = S * U * S;
      }
      return U;
    }
  }
  return std::nullopt;
}

// Primitive generator of ker(A - lam I) for non-scalar A.
std::pair<Poly, Poly> eigenvector(const Matrix2& A, const Poly& lam) {
  const Poly r1 = A.a11 - lam;
  if (!r1.is_zero() || !A.a12.is_zero()) {
    const Poly g = gcd(r1, A.a12);
    return {*A.a12.exact_div(g), *(-r1).exact_div(g)};
  }
  const Poly s = A.a22 - lam;
  const Poly g = gcd(s, A.a21);
  return {*s.exact_div(g), *(-A.a21).exact_div(g)};
}

struct PipelineResult {
  std::optional<Matrix2> witness;
  Poly alpha;
  std::string label;
  std::string context;
  std::vector<std::string> notes;
};

std::vector<LinearForm> normalized_forms(const QuadContext& ctx,
                                         const Matrix2& a, const Matrix2& b) {
  // In (u1, v), u1 = b21 u:
  //   b21 | u1
  //   a21 b21 | (b11 - a11) u1 + b12 b21 v      (p integral)
  //   a21 | u1 + (b22 - a11) v                  (q integral)
  const Field& f = ctx.field();
  const Poly one(f, f.one());
  std::vector<LinearForm> raw{
      {one, Poly(f), b.a21},
      {b.a11 - a.a11, b.a12 * b.a21, a.a21 * b.a21},
      {one, b.a22 - a.a11, a.a21},
  };
  std::vector<LinearForm> out;
  for (auto& lf : raw) {
    // u1 = u' - shift v
    lf.cv = lf.cv - lf.cu * ctx.shift();
    if (lf.modulus.deg() > 0) out.push_back(lf);
  }
  return out;
}

// Normalized-coordinate solution to U* = [[u, p], [v, q]].
std::optional<Matrix2> assemble(const QuadContext& ctx, const Matrix2& a,
                                const Matrix2& b, const QuadInt& w) {
  auto uv = ctx.to_form(w.u(), w.v());
  if (!uv) return std::nullopt;
  const auto& [u, v] = *uv;
  auto p = ((b.a11 - a.a11) * u + b.a12 * v).exact_div(a.a21);
  auto q = (b.a21 * u + (b.a22 - a.a11) * v).exact_div(a.a21);
  if (!p || !q) return std::nullopt;
  Matrix2 U{u, *p, v, *q};
  if (!verify_witness(a, b, U)) return std::nullopt;
  return U;
}

PipelineResult pipeline(const Matrix2& A, const Matrix2& B, const DecideOptions& opts) {
  const Field& f = A.field();
  PipelineResult res;
  const Setup s = setup(A, B);
  const Matrix2& a = s.ra.M;
  const Matrix2& b = s.rb.M;
  const QuadContext& ctx = *s.ctx;
  res.label = lower_case(to_string(ctx.kind()));
  res.context = ctx.describe();
  res.notes.push_back("reduced A = " + format_matrix(a));
  res.notes.push_back("reduced B = " + format_matrix(b));
  if (f.char2()) {
    // Literal form of the char-2 equation: b21 u^2 + (b11 + b22) uv + b12 v^2.
    ensure(ctx.form_beta() == b.a11 + b.a22 && ctx.form_gamma() == b.a12,
           "char-2 elimination differs from the literal equation");
  }
  const auto forms = normalized_forms(ctx, a, b);
  Poly L(f, f.one());
  for (const auto& lf : forms) L = lcm(L, lf.modulus);

  std::vector<FieldElement> alphas{f.one()};
  if (!f.char2()) alphas.push_back(f.nonsquare());

  std::optional<Matrix2> best;
  for (FieldElement al : alphas) {
    const Poly alpha(f, al);
    const Poly d = alpha * a.a21 * b.a21;
    std::vector<QuadInt> cands;
    const bool insep = ctx.kind() == QuadCase::Imaginary &&
                       ctx.imaginary_kind() == ImaginaryKind::Inseparable;
    if (ctx.kind() == QuadCase::Rational || insep) {
      NormSolutions ns = solve_rational(s.ctx, d, -1);
      if (ns.infinite) {
        // v only matters modulo L.
        const int inst = std::max(L.deg() - 1, 0);
        if (saturating_pow(f.q(), inst + 1) > (std::int64_t(1) << 20))
          throw BudgetExceeded("rational family residue enumeration too large");
        ns = solve_rational(s.ctx, d, inst);
      }
      cands = std::move(ns.solutions);
    } else if (ctx.kind() == QuadCase::Imaginary) {
      cands = solve_imaginary(s.ctx, d);
    } else {
      const UnitGroupDescription unit = fundamental_unit(s.ctx);
      const SolutionFamily fam = solve_real_base(s.ctx, d, unit, opts.base_method);
      const FilterReport rep = filtered_solutions(fam, forms, 1);
      std::ostringstream os;
      os << "alpha " << f.format(al) << ": unit degree " << unit.degree_k << ", "
         << fam.base_solutions.size() << " base solutions, residue period "
         << rep.period << ", " << rep.survivors.size() << " survivors";
      res.notes.push_back(os.str());
      for (const auto& sv : rep.survivors) cands.push_back(sv.omega);
    }
    int found = 0;
    for (const QuadInt& w : cands) {
      if (!satisfies(forms, w.u(), w.v())) continue;
      auto U = assemble(ctx, a, b, w);
      if (!U) continue;
      ++found;
      ensure(U->det() == alpha, "assembled witness has the wrong determinant");
      if (!best || U->degree() < best->degree()) {
        best = U;
        res.alpha = alpha;
      }
    }
    if (ctx.kind() != QuadCase::Real)
      res.notes.push_back("alpha " + f.format(al) + ": " + std::to_string(cands.size()) +
                          " norm solutions, " + std::to_string(found) + " pass divisibility");
  }
  if (best) {
    // U* a = b U* with a = C_A A C_A^{-1}, b = C_B B C_B^{-1}.
    const Matrix2 U = *s.rb.C.inverse() * *best * s.ra.C;
    ensure(verify_witness(A, B, U), "composed witness fails verification");
    res.witness = U;
    res.notes.push_back("witness class det = " + format_poly(res.alpha));
  }
  return res;
}

}  // namespace

std::optional<bool> diagonal_criterion(const Matrix2& A, const Matrix2& B) {
  if (!B.is_diagonal() || B.is_scalar() || A.is_scalar()) return std::nullopt;
  if (A.trace() != B.trace() || A.det() != B.det()) return false;
  const auto [x1, y1] = eigenvector(A, B.a11);
  const auto [x2, y2] = eigenvector(A, B.a22);
  return (x1 * y2 - x2 * y1).deg() == 0;
}

std::optional<bool> diagonal_criterion_as_printed(const Matrix2& A, const Matrix2& B) {
  if (!B.is_diagonal() || B.is_scalar() || A.is_scalar()) return std::nullopt;
  if (A.trace() != B.trace() || A.det() != B.det()) return false;
  const Poly r1 = A.a11 - B.a11, r2 = A.a11 - B.a22;
  const bool z1 = r1.is_zero() && A.a12.is_zero();
  const bool z2 = r2.is_zero() && A.a12.is_zero();
  if (!z1 && !z2) {
    auto t = (A.a12 * (B.a22 - B.a11)).exact_div(gcd(r1, A.a12) * gcd(r2, A.a12));
    return t && t->deg() == 0;
  }
  if (z1 && !z2) {
    const Poly num = (B.a11 - A.a22) * (B.a22 - A.a11) - A.a12 * A.a21;
    auto t = num.exact_div(gcd(B.a11 - A.a22, A.a12) * gcd(r2, A.a12));
    return t && t->deg() == 0;
  }
  return std::nullopt;
}

BoundReport degree_bound(const Matrix2& A, const Matrix2& B) {
  if (&A.field() != &B.field()) throw InvalidInput("matrices over different fields");
  if (A.is_scalar() || B.is_scalar()) return make_bound(A, B, "scalar");
  return make_bound(A, B, lower_case(to_string(setup(A, B).ctx->kind())));
}

Certificate decide(const Matrix2& A, const Matrix2& B, const DecideOptions& opts) {
  if (&A.field() != &B.field()) throw InvalidInput("matrices over different fields");
  const Field& f = A.field();
  Certificate c;
  auto finish_conjugate = [&](const Matrix2& U) {
    ensure(verify_witness(A, B, U), "witness fails U A = B U or det U in F*");
    c.verdict = Verdict::Conjugate;
    c.reason = Reason::None;
    c.witness = U;
    c.witness_det = U.det();
    c.witness_degree = U.degree().value_or(0);
    c.bound = make_bound(A, B, c.case_label);
    ensure(BigInt(c.witness_degree) <= c.bound.theorem_bound,
           "witness degree exceeds the theorem bound");
    c.transcript.push_back(
        std::string("witness degree ") + std::to_string(c.witness_degree) +
        (BigInt(c.witness_degree) <= c.bound.case_bound ? " within" : " above") +
        " the case bound");
    return c;
  };
  auto finish_negative = [&](Reason r) {
    c.verdict = Verdict::NotConjugate;
    c.reason = r;
    c.bound = make_bound(A, B, c.case_label);
    return c;
  };

  if (A.trace() != B.trace()) {
    c.case_label = "invariants";
    return finish_negative(Reason::TraceMismatch);
  }
  if (A.det() != B.det()) {
    c.case_label = "invariants";
    return finish_negative(Reason::DetMismatch);
  }
  if (A.is_scalar() || B.is_scalar()) {
    c.case_label = "scalar";
    if (A == B) return finish_conjugate(Matrix2::identity(f));
    return finish_negative(Reason::SolutionSetExhausted);
  }
  if (!opts.skip_fast_paths) {
    if (A == B) {
      c.case_label = "identical";
      return finish_conjugate(Matrix2::identity(f));
    }
    if (auto U = triangular_witness(A, B)) {
      c.case_label = "triangular";
      c.transcript.push_back("upper-triangular witness with constant diagonal");
      return finish_conjugate(*U);
    }
  }
  // Closed form when one side is diagonal; verdicts must agree with the
  // general pipeline below.
  std::optional<bool> diag;
  if (B.is_diagonal()) diag = diagonal_criterion(A, B);
  else if (A.is_diagonal()) diag = diagonal_criterion(B, A);
  if (diag) c.transcript.push_back(std::string("diagonal criterion: ") + (*diag ? "conjugate" : "not conjugate"));

  PipelineResult pr = pipeline(A, B, opts);
  c.case_label = pr.label;
  c.context = pr.context;
  for (auto& n : pr.notes) c.transcript.push_back(std::move(n));
  if (diag && *diag != pr.witness.has_value())
    throw InternalInvariantViolation("diagonal criterion disagrees with the pipeline");
  if (pr.witness) return finish_conjugate(*pr.witness);
  return finish_negative(diag ? Reason::DiagonalCriterionFailed : Reason::SolutionSetExhausted);
}

std::string serialize(const Certificate& c) {
  std::ostringstream os;
  os << "verdict: " << to_string(c.verdict) << "\n";
  if (c.witness) {
    os << "witness: " << format_matrix(*c.witness) << "\n";
    os << "checks: U*A = B*U holds; det(U) = " << format_poly(c.witness_det) << " in F*\n";
  } else {
    os << "reason: " << to_string(c.reason) << "\n";
  }
  os << "case: " << c.case_label << "\n";
  if (!c.context.empty()) os << "context: " << c.context << "\n";
  os << "bound: delta = " << c.bound.delta << ", theorem bound " << c.bound.theorem_bound;
  if (c.bound.case_bound != c.bound.theorem_bound) os << ", case bound " << c.bound.case_bound;
  if (c.witness) os << ", witness degree " << c.witness_degree;
  os << "\n";
  for (const auto& t : c.transcript) os << "note: " << t << "\n";
  return os.str();
}

std::optional<Matrix2> parse_certificate_witness(const Field& f, const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = 0;
  while (std::getline(is, line)) {
    ++n;
    const std::string key = "witness:";
    if (line.rfind(key, 0) != 0) continue;
    std::size_t at = key.size();
    while (at < line.size() && line[at] == ' ') ++at;
    return parse_matrix(f, std::string_view(line).substr(at), n, int(at) + 1);
  }
  return std::nullopt;
}

}  // namespace gfconj
