// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

std::string bin() {
  const char* b = std::getenv("GFCONJ_BIN");
  REQUIRE_MESSAGE(b != nullptr, "GFCONJ_BIN is not set");
  return b;
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("gfconj_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

// stdout only; stderr carries timing.
Run run(const std::string& args) {
  const std::string cmd = bin() + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int st = ::pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

const char* kPair =
    "field p=2 k=1\n"
    "A = [[0,1],[x,0]]\n"
    "B = [[x,x+1],[x,x]]\n";

}  // namespace

TEST_CASE("decide") {
  const auto pair = write("pair.txt", kPair);
  const Run r = run("decide " + pair.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: Conjugate") != std::string::npos);
  CHECK(r.out.find("witness: [[") != std::string::npos);
  // Byte-identical across runs.
  CHECK(run("decide " + pair.string()).out == r.out);

  const auto mm = write("mismatch.txt", "field p=2 k=1\nA = [[1,0],[0,0]]\nB = [[0,0],[0,0]]\n");
  const Run n = run("decide " + mm.string());
  CHECK(n.code == 1);
  CHECK(n.out.find("reason: TraceMismatch") != std::string::npos);

  // Several files with --jobs keep argument order.
  const Run both = run("decide --jobs 2 " + pair.string() + " " + mm.string());
  CHECK(both.code == 1);
  CHECK(both.out.find("pair.txt") < both.out.find("mismatch.txt"));
}

TEST_CASE("verify round trip") {
  const auto pair = write("pair2.txt", kPair);
  const Run r = run("decide " + pair.string());
  REQUIRE(r.code == 0);
  const auto cert = write("pair2.cert", r.out);
  CHECK(run("verify " + pair.string() + " " + cert.string()).code == 0);
  const Run w = run("decide --emit-witness " + pair.string());
  CHECK(w.out.rfind("[[", 0) == 0);
  const auto bare = write("pair2.w", w.out);
  CHECK(run("verify " + pair.string() + " " + bare.string()).code == 0);
  const auto wrong = write("wrong.w", "[[1,0],[0,1]]\n");
  CHECK(run("verify " + pair.string() + " " + wrong.string()).code == 1);
}

TEST_CASE("pell, units, solve-norm, bound, centralizer") {
  const Run p = run("pell " + write("d.txt", "field p=3 k=1\nD = x^2+1\n").string());
  CHECK(p.code == 0);
  CHECK(p.out == "u = x^2+2\nv = x\n");

  const Run u = run("units " + write("u.txt", "field p=2 k=1\nb = x\nc = 1\n").string());
  CHECK(u.code == 0);
  CHECK(u.out.find("degree: 1") != std::string::npos);
  const Run ui = run("units " + write("ui.txt", "field p=2 k=1\nb = x\nc = x^3\n").string());
  CHECK(ui.code == 1);

  const Run s = run("solve-norm " + write("s.txt", "field p=2 k=1\nb = x\nc = x^3\nd = x\n").string());
  CHECK(s.code == 1);
  const Run s1 = run("solve-norm " + write("s1.txt", "field p=2 k=1\nb = x\nc = 1\nd = x\n").string());
  CHECK(s1.code == 0);
  CHECK(s1.out.find("solution: ") != std::string::npos);

  const Run b = run("bound " + write("b.txt", "field p=2 k=1\nA = [[0,1],[1,x]]\nB = [[0,1],[1,x]]\n").string());
  CHECK(b.code == 0);
  CHECK(b.out.find("theorem bound: 66") != std::string::npos);

  const Run c = run("centralizer " + write("c.txt", "field p=2 k=1\nA = [[0,1],[1,x]]\n").string());
  CHECK(c.code == 0);
  CHECK(c.out.find("generator: [[x, 1], [1, 0]]") != std::string::npos);
  const Run ci = run("centralizer " + write("ci.txt", "field p=2 k=1\nA = [[0,1],[x,0]]\n").string());
  CHECK(ci.code == 1);
}

TEST_CASE("errors map to exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  const auto bad = write("bad.txt", "field p=2 k=1\nA = [[0,1],[x,0]\nB = [[0,0],[0,0]]\n");
  const std::string cmd = bin() + " decide " + bad.string() + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  std::string all;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) all.append(buf.data(), n);
  const int st = ::pclose(pipe);
  CHECK(WEXITSTATUS(st) == 2);
  // file:line:column
  CHECK(all.find("bad.txt:2:") != std::string::npos);
  CHECK(run("decide " + write("nokey.txt", "field p=2 k=1\nA = [[0,1],[x,0]]\n").string()).code == 2);
  CHECK(run("centralizer " + write("id.txt", "field p=2 k=1\nA = [[1,0],[0,1]]\n").string()).code == 2);
}

TEST_CASE("selftest at a small budget") {
  const Run r = run("selftest --budget 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS   1") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
