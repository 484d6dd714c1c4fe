// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gfconj {

class Field;

// An element of F_q addressed by its code sum(c_i p^i), c_i the power-basis
// coordinates. For p = 2 the code is the coordinate bit vector.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint16_t code) : code_(code) {}
  constexpr std::uint16_t code() const { return code_; }
  constexpr bool is_zero() const { return code_ == 0; }
  constexpr auto operator<=>(const FieldElement&) const = default;

 private:
  std::uint16_t code_ = 0;
};

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  // Monic modulus over F_p, coefficients low to high (size k + 1). Empty for
  // k = 1.
  std::vector<std::uint32_t> modulus;

  std::uint32_t q() const;
  bool operator==(const FieldSpec&) const = default;
};

namespace kernels {
using AxpyFn = void (*)(std::uint16_t* dst, const std::uint16_t* src,
                        std::size_t n, std::uint16_t s, const Field& f);
}

// Fields are interned: Field::get returns a reference that stays valid for
// the life of the process, so Poly can hold a plain pointer.
class Field {
 public:
  static const Field& get(const FieldSpec& spec);
  static const Field& get(std::uint32_t p, std::uint32_t k = 1);
  // Default modulus for (p, k): the first monic irreducible polynomial in
  // code order, which gives a^2+a+1, a^3+a+1 and a^2+1 for q = 4, 8, 9.
  static std::vector<std::uint32_t> default_modulus(std::uint32_t p,
                                                    std::uint32_t k);
  static bool is_irreducible_over_prime(std::uint32_t p,
                                        const std::vector<std::uint32_t>& f);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return spec_.k; }
  std::uint32_t q() const { return q_; }
  bool char2() const { return p_ == 2; }

  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }
  FieldElement element(std::uint32_t code) const;
  // Image of an integer in the prime subfield.
  FieldElement from_int(long long n) const;
  std::vector<FieldElement> elements() const;
  std::vector<std::uint32_t> coords(FieldElement a) const;
  FieldElement from_coords(const std::vector<std::uint32_t>& c) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    return FieldElement(add_code(a.code(), b.code()));
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return FieldElement(add_code(a.code(), neg_code(b.code())));
  }
  FieldElement neg(FieldElement a) const {
    return FieldElement(neg_code(a.code()));
  }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return FieldElement(mul_code(a.code(), b.code()));
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const {
    return mul(a, inv(b));
  }
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  std::optional<FieldElement> sqrt(FieldElement a) const;
  bool is_square(FieldElement a) const;
  // Smallest-code non-square; only meaningful in odd characteristic.
  FieldElement nonsquare() const;

  std::string format(FieldElement a) const;

  // Raw code arithmetic used by the polynomial kernels.
  std::uint16_t add_code(std::uint16_t a, std::uint16_t b) const {
    if (kind_ == Kind::Binary) return a ^ b;
    if (kind_ == Kind::Prime) {
      std::uint32_t s = std::uint32_t(a) + b;
      return std::uint16_t(s >= p_ ? s - p_ : s);
    }
    return add_code_digits(a, b);
  }
  std::uint16_t neg_code(std::uint16_t a) const {
    if (kind_ == Kind::Binary) return a;
    if (kind_ == Kind::Prime) return std::uint16_t(a == 0 ? 0 : p_ - a);
    return neg_code_digits(a);
  }
  std::uint16_t mul_code(std::uint16_t a, std::uint16_t b) const {
    if (kind_ == Kind::Prime) return std::uint16_t((std::uint32_t(a) * b) % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[std::size_t(log_[a]) + log_[b]];
  }
  std::uint16_t inv_code(std::uint16_t a) const;

  // dst[i] += s * src[i], i < n, through the selected row kernel.
  void axpy(std::uint16_t* dst, const std::uint16_t* src, std::size_t n,
            std::uint16_t s) const {
    axpy_(dst, src, n, s, *this);
  }
  const char* kernel_name() const { return kernel_name_; }

 private:
  enum class Kind { Prime, Binary, OddExtension };
  explicit Field(const FieldSpec& spec);
  friend struct FieldRegistry;

  std::uint16_t add_code_digits(std::uint16_t a, std::uint16_t b) const;
  std::uint16_t neg_code_digits(std::uint16_t a) const;
  std::uint16_t slow_mul(std::uint16_t a, std::uint16_t b) const;

  FieldSpec spec_;
  std::uint32_t p_;
  std::uint32_t q_;
  Kind kind_;
  std::vector<std::uint16_t> exp_;   // size 2(q-1); extension fields only
  std::vector<std::uint32_t> log_;   // size q; extension fields only
  std::vector<std::uint16_t> inv_;   // prime fields only
  std::vector<std::int32_t> sqrt_;   // odd characteristic: -1 if non-square
  std::uint16_t nonsquare_ = 0;
  kernels::AxpyFn axpy_ = nullptr;
  const char* kernel_name_ = "scalar";
};

}  // namespace gfconj
