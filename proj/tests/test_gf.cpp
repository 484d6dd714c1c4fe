// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "gfconj/error.hpp"
#include "gfconj/gf.hpp"

using namespace gfconj;

namespace {

// Schoolbook product of coordinate vectors modulo the field's modulus; an
// oracle independent of the log tables.
FieldElement reference_mul(const Field& f, FieldElement x, FieldElement y) {
  const auto a = f.coords(x), b = f.coords(y);
  const auto k = f.k(), p = f.p();
  std::vector<std::uint32_t> prod(2 * k, 0);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  const auto& m = f.spec().modulus;
  for (std::uint32_t d = 2 * k - 1; d >= k && k > 1; --d) {
    const std::uint32_t c = prod[d];
    for (std::uint32_t i = 0; i <= k; ++i)
      prod[d - k + i] = (prod[d - k + i] + (p - c) * m[i]) % p;
  }
  prod.resize(k);
  return f.from_coords(prod);
}

}  // namespace

TEST_CASE("spot values") {
  const Field& f2 = Field::get(2);
  CHECK(f2.add(f2.one(), f2.one()) == f2.zero());
  const Field& f3 = Field::get(3);
  CHECK(f3.inv(f3.element(2)) == f3.element(2));
  const Field& f4 = Field::get(2, 2);
  const FieldElement a = f4.element(2);
  CHECK(f4.mul(a, a) == f4.element(3));  // a + 1
  CHECK(f4.format(f4.mul(a, a)) == "a+1");
}

TEST_CASE("default moduli") {
  CHECK(Field::get(2, 2).spec().modulus == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::get(2, 3).spec().modulus == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(Field::get(3, 2).spec().modulus == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("modulus validation") {
  FieldSpec s;
  s.p = 2;
  s.k = 2;
  s.modulus = {1, 0, 1};  // (a+1)^2
  CHECK_THROWS_AS(Field::get(s), InvalidInput);
  s.modulus = {1, 1, 1};
  CHECK(Field::get(s).q() == 4);
  CHECK_THROWS_AS(Field::get(4), InvalidInput);
  CHECK_THROWS_AS(Field::get(2, 17), InvalidInput);
  FieldSpec other;
  other.p = 2;
  other.k = 3;
  other.modulus = {1, 0, 1, 1};  // a^3 + a^2 + 1
  const Field& f8b = Field::get(other);
  CHECK(&f8b != &Field::get(2, 3));
  CHECK(f8b.mul(f8b.element(2), f8b.element(4)) == reference_mul(f8b, f8b.element(2), f8b.element(4)));
}

TEST_CASE("sqrt examples") {
  const Field& f2 = Field::get(2);
  CHECK(f2.sqrt(f2.one()) == f2.one());
  const Field& f3 = Field::get(3);
  CHECK_FALSE(f3.sqrt(f3.element(2)).has_value());
  const Field& f4 = Field::get(2, 2);
  CHECK(f4.sqrt(f4.element(2)) == f4.element(3));
}

TEST_CASE("enumeration") {
  const Field& f4 = Field::get(2, 2);
  auto e = f4.elements();
  REQUIRE(e.size() == 4);
  CHECK(f4.format(e[0]) == "0");
  CHECK(f4.format(e[1]) == "1");
  CHECK(f4.format(e[2]) == "a");
  CHECK(f4.format(e[3]) == "a+1");
  CHECK(Field::get(3).elements().size() == 3);
}

TEST_CASE("field axioms exhaustively for q <= 9") {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const Field& f = Field::get(std::uint32_t(p), std::uint32_t(k));
    CAPTURE(f.q());
    for (auto x : f.elements()) {
      if (!x.is_zero()) CHECK(f.mul(x, f.inv(x)) == f.one());
      CHECK(f.add(x, f.neg(x)) == f.zero());
      for (auto y : f.elements()) {
        CHECK(f.mul(x, y) == reference_mul(f, x, y));
        CHECK(f.add(x, y) == f.add(y, x));
        CHECK(f.mul(x, y) == f.mul(y, x));
        for (auto z : f.elements()) {
          CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
          CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
          CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        }
      }
    }
  }
  CHECK_THROWS_AS(Field::get(5).inv(FieldElement(0)), DivisionByZero);
}

TEST_CASE("square roots") {
  for (int k : {1, 2, 3}) {
    const Field& f = Field::get(2, std::uint32_t(k));
    for (auto x : f.elements()) {
      auto r = f.sqrt(x);
      REQUIRE(r.has_value());
      CHECK(f.mul(*r, *r) == x);
    }
  }
  for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {3, 2}}) {
    const Field& f = Field::get(std::uint32_t(p), std::uint32_t(k));
    int squares = 0;
    for (auto x : f.elements()) {
      if (x.is_zero()) continue;
      auto r = f.sqrt(x);
      // Euler criterion as an independent check.
      const bool euler = f.pow(x, (f.q() - 1) / 2) == f.one();
      CHECK(r.has_value() == euler);
      if (r) {
        ++squares;
        CHECK(f.mul(*r, *r) == x);
      }
    }
    CHECK(squares == int(f.q() - 1) / 2);
    CHECK_FALSE(f.is_square(f.nonsquare()));
  }
}
