// SPDX-License-Identifier: Apache-2.0
// Command-line front end. Reports go to stdout, timing and errors to stderr.
// Exit codes: 0 affirmative, 1 negative, 2 usage or parse error, 3 internal.
#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "gfconj/acceptance.hpp"
#include "gfconj/conjugacy.hpp"
#include "gfconj/error.hpp"
#include "gfconj/laurent.hpp"
#include "gfconj/normsolver.hpp"
#include "gfconj/text.hpp"
#include "gfconj/units.hpp"

using namespace gfconj;

namespace {

struct Outcome {
  int code = 0;
  std::string out, err;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::InvalidInput:
    case ErrorKind::Unsupported:
    case ErrorKind::RationalCase:
    case ErrorKind::DivisionByZero:
      return 2;
    default:
      return 3;
  }
}

// Runs one file's job, turning exceptions into exit codes.
Outcome guarded(const std::string& path,
                const std::function<int(const ProblemFile&, std::ostream&)>& job) {
  Outcome o;
  std::ostringstream out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const ProblemFile pf = parse_problem(read_file(path));
    o.code = job(pf, out);
  } catch (const ParseError& e) {
    o.err = path + ":" + e.what() + "\n";
    o.code = 2;
  } catch (const Error& e) {
    o.err = path + ": " + to_string(e.kind()) + ": " + e.what() + "\n";
    o.code = code_for(e);
  } catch (const std::exception& e) {
    o.err = path + ": " + e.what() + "\n";
    o.code = 3;
  }
  o.out = out.str();
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[96];
  std::snprintf(buf, sizeof buf, "time: %.3f s\n", dt);
  o.err += path + ": " + buf;
  return o;
}

// Files run on up to `jobs` threads; reports are printed in argument order.
int run_files(const std::vector<std::string>& files, int jobs,
              const std::function<int(const ProblemFile&, std::ostream&)>& job) {
  std::vector<Outcome> res(files.size());
  const std::size_t nt = std::size_t(std::max(1, std::min<int>(jobs, int(files.size()))));
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (std::size_t t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < files.size();) res[i] = guarded(files[i], job);
    });
  for (auto& t : pool) t.join();
  int code = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (files.size() > 1) std::cout << "== " << files[i] << "\n";
    std::cout << res[i].out;
    std::cerr << res[i].err;
    // Worst outcome wins: internal > usage > negative.
    code = std::max(code, res[i].code);
  }
  std::cout.flush();
  return code;
}

void need(const ProblemFile& pf, std::initializer_list<const char*> mats,
          std::initializer_list<const char*> polys) {
  for (const char* m : mats)
    if (!pf.has_matrix(m)) throw InvalidInput(std::string("problem needs matrix ") + m);
  for (const char* p : polys)
    if (!pf.has_poly(p)) throw InvalidInput(std::string("problem needs polynomial ") + p);
}

Poly optional_poly(const ProblemFile& pf, const char* k) {
  return pf.has_poly(k) ? pf.poly(k) : Poly(*pf.field);
}

// Context of the input's equation: char 2 u^2 + buv + cv^2, odd u^2 - cv^2.
ContextPtr equation_context(const ProblemFile& pf) {
  return standard_context(optional_poly(pf, "b"), pf.poly("c"));
}

std::string pair_text(const QuadContext& ctx, const QuadInt& w) {
  auto uv = ctx.to_form(w.u(), w.v());
  ensure(uv.has_value(), "solution does not map back to the equation");
  return "(" + format_poly(uv->first) + ", " + format_poly(uv->second) + ")";
}

int do_decide(const ProblemFile& pf, std::ostream& out, bool emit_witness) {
  need(pf, {"A", "B"}, {});
  const Matrix2& A = pf.matrix("A");
  const Matrix2& B = pf.matrix("B");
  const Certificate c = decide(A, B);
  if (emit_witness) {
    if (c.witness) out << format_matrix(*c.witness) << "\n";
  } else {
    out << serialize(c);
  }
  return c.verdict == Verdict::Conjugate ? 0 : 1;
}

int do_bound(const ProblemFile& pf, std::ostream& out) {
  need(pf, {"A", "B"}, {});
  const BoundReport b = degree_bound(pf.matrix("A"), pf.matrix("B"));
  out << "delta: " << b.delta << "\n"
      << "field: p=" << b.p << " q=" << b.q << "\n"
      << "case: " << b.case_label << "\n"
      << "theorem bound: " << b.theorem_bound << "\n"
      << "case bound: " << b.case_bound << "\n";
  return 0;
}

int do_centralizer(const ProblemFile& pf, std::ostream& out) {
  need(pf, {"A"}, {});
  const CentralizerResult r = centralizer_generator(pf.matrix("A"));
  if (r.generator) out << "generator: " << format_matrix(*r.generator) << "\n";
  else out << "generator: none (finite centralizer)\n";
  out << "description: " << r.description << "\n";
  out << "bound: " << r.bound << "\n";
  return r.generator ? 0 : 1;
}

int do_pell(const ProblemFile& pf, std::ostream& out) {
  need(pf, {}, {"D"});
  const Poly& D = pf.poly("D");
  if (pf.field->char2()) throw Unsupported("pell needs odd characteristic");
  const ContextPtr ctx = standard_context(Poly(*pf.field), D);
  if (ctx->kind() != QuadCase::Real) {
    out << "no nontrivial solution: " << ctx->describe() << "\n";
    return 1;
  }
  const auto [u, v] = pell_fundamental(D);
  out << "u = " << format_poly(u) << "\n" << "v = " << format_poly(v) << "\n";
  return 0;
}

int do_units(const ProblemFile& pf, std::ostream& out) {
  need(pf, {}, {"c"});
  const ContextPtr ctx = equation_context(pf);
  out << "context: " << ctx->describe() << "\n";
  if (ctx->kind() != QuadCase::Real) {
    out << "no nontrivial units: the unit group is finite\n";
    return 1;
  }
  const UnitGroupDescription u = fundamental_unit(ctx);
  out << "generator: " << pair_text(*ctx, u.generator) << "\n"
      << "degree: " << u.degree_k << "\n"
      << "norm: " << format_poly(u.generator.norm()) << "\n";
  return 0;
}

int do_solve_norm(const ProblemFile& pf, std::ostream& out) {
  need(pf, {}, {"c", "d"});
  const ContextPtr ctx = equation_context(pf);
  const Poly& d = pf.poly("d");
  out << "context: " << ctx->describe() << "\n";
  std::size_t count = 0;
  auto print = [&](const QuadInt& w) {
    out << "solution: " << pair_text(*ctx, w) << "\n";
    ++count;
  };
  const bool insep = ctx->kind() == QuadCase::Imaginary &&
                     ctx->imaginary_kind() == ImaginaryKind::Inseparable;
  if (ctx->kind() == QuadCase::Rational || insep) {
    const NormSolutions s = solve_rational(ctx, d);
    out << "structure: " << s.description << "\n";
    if (s.infinite) out << "instances: deg v <= 2\n";
    for (const auto& w : s.solutions) print(w);
  } else if (ctx->kind() == QuadCase::Imaginary) {
    out << "structure: finite\n";
    for (const auto& w : solve_imaginary(ctx, d)) print(w);
  } else if (d.is_zero()) {
    out << "structure: only the zero solution\n";
    print(QuadInt(ctx, Poly(*pf.field), Poly(*pf.field)));
  } else {
    const UnitGroupDescription unit = fundamental_unit(ctx);
    const SolutionFamily fam = solve_real_base(ctx, d, unit);
    out << "unit: " << pair_text(*ctx, unit.generator) << " of degree " << unit.degree_k << "\n";
    out << "structure: every solution is a base solution times unit^l, l in Z\n";
    for (const auto& w : fam.base_solutions) print(w);
  }
  if (count == 0) out << "no solutions\n";
  return count > 0 ? 0 : 1;
}

int do_verify(const std::string& problem, const std::string& cert) {
  try {
    const ProblemFile pf = parse_problem(read_file(problem));
    need(pf, {"A", "B"}, {});
    const std::string text = read_file(cert);
    std::optional<Matrix2> U = parse_certificate_witness(*pf.field, text);
    if (!U) {
      // A bare matrix, as printed by decide --emit-witness.
      std::string line = text.substr(0, text.find('\n'));
      if (line.find("[[") == std::string::npos) {
        std::cout << "no witness in " << cert << "\n";
        return 1;
      }
      U = parse_matrix(*pf.field, line);
    }
    const Matrix2& A = pf.matrix("A");
    const Matrix2& B = pf.matrix("B");
    if (verify_witness(A, B, *U)) {
      std::cout << "verified: U*A = B*U, det(U) = " << format_poly(U->det()) << " in F*\n";
      return 0;
    }
    std::cout << "not verified: " << (U->is_unimodular() ? "U*A != B*U" : "det(U) not in F*")
              << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return code_for(e);
  }
}

int do_selftest(int budget) {
  AcceptanceOptions opts;
  opts.budget_percent = std::max(1, budget);
  bool all = true;
  run_acceptance(opts, [&](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    std::fprintf(stderr, "criterion %d: %.3f s\n", r.id, r.seconds);
    all = all && r.pass;
  });
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy of 2x2 matrices over F_q[x] with verified witnesses"};
  app.require_subcommand(1);
  int jobs = 1, budget = 100, precision = 0;
  bool emit_witness = false;
  app.add_option("--precision", precision, "Laurent series precision override")
      ->check(CLI::NonNegativeNumber);

  std::vector<std::string> files;
  auto file_cmd = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("files", files, "problem files")->required()->check(CLI::ExistingFile);
    c->add_option("--jobs", jobs, "files processed concurrently")->check(CLI::PositiveNumber);
    return c;
  };
  CLI::App* dec = file_cmd("decide", "decide conjugacy of A and B; prints a certificate");
  dec->add_flag("--emit-witness", emit_witness, "print only the witness matrix");
  CLI::App* cen = file_cmd("centralizer", "generator of the centralizer of A");
  CLI::App* pel = file_cmd("pell", "fundamental solution of u^2 - D v^2 = 1");
  CLI::App* uni = file_cmd("units", "fundamental unit of F[x][Delta] for b, c");
  CLI::App* sol = file_cmd("solve-norm", "solutions of the norm equation N(u, v) = d");
  CLI::App* bnd = file_cmd("bound", "witness degree bounds for A and B");
  CLI::App* st = app.add_subcommand("selftest", "run the acceptance criteria");
  st->add_option("--budget", budget, "instance counts in percent of the full run")
      ->check(CLI::PositiveNumber);
  std::string vprob, vcert;
  CLI::App* ver = app.add_subcommand("verify", "re-check a witness against a problem");
  ver->add_option("problem", vprob)->required()->check(CLI::ExistingFile);
  ver->add_option("certificate", vcert)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  set_series_precision_override(precision);

  if (*dec)
    return run_files(files, jobs, [&](const ProblemFile& pf, std::ostream& o) {
      return do_decide(pf, o, emit_witness);
    });
  if (*cen) return run_files(files, jobs, do_centralizer);
  if (*pel) return run_files(files, jobs, do_pell);
  if (*uni) return run_files(files, jobs, do_units);
  if (*sol) return run_files(files, jobs, do_solve_norm);
  if (*bnd) return run_files(files, jobs, do_bound);
  if (*st) return do_selftest(budget);
  if (*ver) return do_verify(vprob, vcert);
  return 2;
}
