// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <climits>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfconj/gf.hpp"

namespace gfconj {

// Polynomial degree with an explicit -infinity for the zero polynomial.
// NEG_INF + n = NEG_INF and max(NEG_INF, n) = n.
class Degree {
 public:
  constexpr Degree(int d) : v_(d) {}  // NOLINT: implicit from int on purpose
  static constexpr Degree neg_inf() { return Degree(kNegInf, 0); }

  constexpr bool is_neg_inf() const { return v_ == kNegInf; }
  int value() const;
  constexpr int value_or(int fallback) const {
    return is_neg_inf() ? fallback : v_;
  }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return Degree(a.v_ + b.v_);
  }
  friend constexpr Degree operator-(Degree a, int b) {
    return a.is_neg_inf() ? a : Degree(a.v_ - b);
  }
  friend constexpr auto operator<=>(Degree a, Degree b) = default;
  friend constexpr bool operator==(Degree a, Degree b) = default;

  std::string to_string() const;

 private:
  static constexpr int kNegInf = INT_MIN / 4;
  constexpr Degree(int v, int) : v_(v) {}
  int v_;
};

constexpr Degree NEG_INF = Degree::neg_inf();

inline Degree max(Degree a, Degree b) { return a < b ? b : a; }
inline Degree min(Degree a, Degree b) { return a < b ? a : b; }

// Element of F_q[x]. Coefficient codes are stored low to high with no
// leading zero; the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;  // placeholder only; not bound to a field
  explicit Poly(const Field& f) : f_(&f) {}
  Poly(const Field& f, FieldElement c);
  static Poly from_codes(const Field& f, std::vector<std::uint16_t> codes);
  static Poly monomial(const Field& f, FieldElement c, int e);
  static Poly x(const Field& f) { return monomial(f, f.one(), 1); }
  static Poly constant(const Field& f, long long n) {
    return Poly(f, f.from_int(n));
  }

  const Field& field() const;
  bool bound() const { return f_ != nullptr; }

  Degree degree() const {
    return c_.empty() ? NEG_INF : Degree(int(c_.size()) - 1);
  }
  // Degree as an int with -1 standing in for the zero polynomial.
  int deg() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  FieldElement lead() const;
  FieldElement coeff(std::size_t i) const {
    return i < c_.size() ? FieldElement(c_[i]) : FieldElement(0);
  }
  const std::vector<std::uint16_t>& codes() const { return c_; }
  std::size_t size() const { return c_.size(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  Poly& operator*=(const Poly& g) { return *this = *this * g; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(FieldElement s) const;
  friend Poly operator*(FieldElement s, const Poly& a) { return a.scaled(s); }
  // Multiply by x^e, e >= 0.
  Poly shifted(int e) const;
  // Terms of degree >= e divided by x^e (floor of f / x^e).
  Poly shifted_down(int e) const;

  // Euclidean division with deg r < deg g.
  std::pair<Poly, Poly> divmod(const Poly& g) const;
  friend Poly operator/(const Poly& a, const Poly& b) {
    return a.divmod(b).first;
  }
  friend Poly operator%(const Poly& a, const Poly& b) {
    return a.divmod(b).second;
  }
  // Quotient when g divides this exactly.
  std::optional<Poly> exact_div(const Poly& g) const;
  bool divisible_by(const Poly& g) const;

  Poly monic() const;
  Poly pow(std::uint64_t e) const;
  FieldElement eval(FieldElement t) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.c_ == b.c_;
  }
  // Degree first, then coefficient codes from the top down.
  friend bool operator<(const Poly& a, const Poly& b);

  std::size_t hash() const;

 private:
  void trim();
  void check_same(const Poly& g) const;
  const Field* f_ = nullptr;
  std::vector<std::uint16_t> c_;
};

struct PolyHash {
  std::size_t operator()(const Poly& p) const { return p.hash(); }
};

// Monic gcd; gcd(f, 0) = monic(f). Both zero is InvalidInput.
Poly gcd(const Poly& f, const Poly& g);
struct Bezout {
  Poly g, s, t;  // s f + t g = g (monic)
};
Bezout xgcd(const Poly& f, const Poly& g);
Poly lcm(const Poly& f, const Poly& g);

// g with g^2 = f. In odd characteristic the root whose leading coefficient is
// the field's canonical square root is returned.
std::optional<Poly> sqrt(const Poly& f);

// All u with u^2 + b u = r. At most two solutions.
std::vector<Poly> solve_monic_quadratic(const Poly& b, const Poly& r);

// f = f0(x^2) + x f1(x^2).
std::pair<Poly, Poly> even_odd_split(const Poly& f);
// Inverse of even_odd_split's substitution: returns h(x^2).
Poly inflate(const Poly& h);

struct Factor {
  Poly p;
  int multiplicity;
};
// Monic irreducible factors: squarefree split, then Berlekamp.
std::vector<Factor> factor(const Poly& f);
// All monic divisors, sorted by operator<.
std::vector<Poly> divisors(const Poly& f);

// Enumerate every polynomial of degree <= max_deg in lexicographic order of
// coefficient codes (constant term fastest). fn returns false to stop.
void for_each_poly(const Field& f, int max_deg,
                   const std::function<bool(const Poly&)>& fn);
void for_each_monic(const Field& f, int deg,
                    const std::function<bool(const Poly&)>& fn);

}  // namespace gfconj
