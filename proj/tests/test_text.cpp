// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "gfconj/error.hpp"
#include "gfconj/text.hpp"

using namespace gfconj;

TEST_CASE("printing") {
  const Field& f3 = Field::get(3);
  CHECK(format_poly(parse_poly(f3, "x^2 + 2*x")) == "x^2+2*x");
  CHECK(format_poly(Poly(f3)) == "0");
  CHECK(format_poly(parse_poly(f3, "-1")) == "2");
  const Field& f4 = Field::get(2, 2);
  CHECK(format_poly(parse_poly(f4, "(a+1)*x^2 + a*x + a + 1")) == "(a+1)*x^2+a*x+a+1");
  const Field& f9 = Field::get(3, 2);
  CHECK(format_poly(parse_poly(f9, "2*a*x^3+(2*a+1)")) == "2*a*x^3+2*a+1");
}


TEST_CASE("round trip is bit exact") {
  std::mt19937_64 rng(17);
  for (const Field* f : {&Field::get(2), &Field::get(3), &Field::get(2, 2), &Field::get(2, 3), &Field::get(3, 2), &Field::get(13)}) {
    std::uniform_int_distribution<std::uint32_t> cc(0, f->q() - 1);
    for (int i = 0; i < 300; ++i) {
      std::vector<std::uint16_t> c(std::size_t(rng() % 8));
      for (auto& x : c) x = std::uint16_t(cc(rng));
      Poly p = Poly::from_codes(*f, c);
      const std::string s = format_poly(p);
      CHECK(parse_poly(*f, s) == p);
      CHECK(format_poly(parse_poly(*f, s)) == s);
    }
  }
}

TEST_CASE("parse errors name line and column") {
  const Field& f2 = Field::get(2);
  try {
    parse_poly(f2, "x^2 + y", 4, 1);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 7);
  }
  CHECK_THROWS_AS(parse_poly(f2, "a*x"), ParseError);  // no generator in F_2
  CHECK_THROWS_AS(parse_poly(f2, "x^"), ParseError);
  CHECK_THROWS_AS(parse_poly(f2, ""), ParseError);
}

TEST_CASE("field header") {
  CHECK(&parse_field_header("field p=2 k=1") == &Field::get(2));
  const Field& f4 = parse_field_header("field p=2 k=2");
  CHECK(format_field_header(f4) == "field p=2 k=2 modulus=a^2+a+1");
  CHECK(&parse_field_header(format_field_header(f4)) == &f4);
  const Field& f8 = parse_field_header("field p=2 k=3 modulus=a^3+a^2+1");
  CHECK(f8.spec().modulus == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK_THROWS_AS(parse_field_header("field p=2 k=2 modulus=a^2+1"), ParseError);
  CHECK_THROWS_AS(parse_field_header("field p=4"), ParseError);
  CHECK_THROWS_AS(parse_field_header("field p=2 z=1"), ParseError);
}

TEST_CASE("problem files") {
  const char* text =
      "# worked pair\n"
      "field p=2 k=1\n"
      "A = [[0, 1], [x, 0]]\n"
      "\n"
      "B = [[x, x+1], [x, x]]   # conjugate by [[1,1],[0,1]]\n";
  ProblemFile pf = parse_problem(text);
  CHECK(pf.field == &Field::get(2));
  CHECK(format_matrix(pf.matrix("A")) == "[[0, 1], [x, 0]]");
  CHECK(format_matrix(pf.matrix("B")) == "[[x, x+1], [x, x]]");
  try {
    parse_problem("field p=3\nD = x^2+1\nE = x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 1);
  }
  try {
    parse_problem("field p=3\nA = [[1, 2], [x, ]]\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_problem("D = x\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("field p=3\nD = x\nD = x^2\n"), ParseError);
}
