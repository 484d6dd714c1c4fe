// SPDX-License-Identifier: Apache-2.0
#include "gfconj/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "gfconj/error.hpp"
#include "gfconj/kernels.hpp"

namespace gfconj {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::RationalCase: return "RationalCase";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, low to high, used for modulus checks and table
// construction only.
using PPoly = std::vector<std::uint32_t>;

void trim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return std::uint32_t(r);
}

PPoly pmod(PPoly f, const PPoly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t il = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint32_t c = std::uint32_t(std::uint64_t(f.back()) * il % p);
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i)
      f[shift + i] = std::uint32_t((f[shift + i] + std::uint64_t(p - c) * g[i]) % p);
    trim(f);
  }
  return f;
}

PPoly code_to_poly(std::uint32_t code, std::uint32_t p) {
  PPoly f;
  while (code > 0) {
    f.push_back(code % p);
    code /= p;
  }
  return f;
}

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
  std::uint32_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::uint32_t FieldSpec::q() const { return ipow(p, k); }

bool Field::is_irreducible_over_prime(std::uint32_t p, const PPoly& f0) {
  PPoly f = f0;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // Trial division by every monic polynomial of degree 1..n/2.
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    const std::uint32_t count = ipow(p, std::uint32_t(d));
    for (std::uint32_t low = 0; low < count; ++low) {
      PPoly g = code_to_poly(low, p);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (pmod(f, g, p).empty()) return false;
    }
  }
  return true;
}

PPoly Field::default_modulus(std::uint32_t p, std::uint32_t k) {
  if (k == 1) return {};
  const std::uint32_t count = ipow(p, k);
  for (std::uint32_t low = 0; low < count; ++low) {
    PPoly g = code_to_poly(low, p);
    g.resize(k + 1, 0);
    g[k] = 1;
    if (is_irreducible_over_prime(p, g)) return g;
  }
  throw InternalInvariantViolation("no irreducible polynomial found");
}

struct FieldRegistry {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>,
           std::unique_ptr<Field>>
      fields;

  const Field& get(const FieldSpec& spec) {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(spec.p, spec.modulus);
    auto it = fields.find(key);
    if (it == fields.end())
      it = fields.emplace(key, std::unique_ptr<Field>(new Field(spec))).first;
    return *it->second;
  }
};

namespace {
FieldRegistry& registry() {
  static FieldRegistry r;
  return r;
}
}  // namespace

const Field& Field::get(const FieldSpec& spec0) {
  FieldSpec spec = spec0;
  if (!is_prime(spec.p)) throw InvalidInput("characteristic is not prime");
  if (spec.k < 1) throw InvalidInput("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    q *= spec.p;
    if (q > 65536) throw InvalidInput("field too large (q must be <= 2^16)");
  }
  if (spec.k == 1) {
    spec.modulus.clear();
  } else if (spec.modulus.empty()) {
    spec.modulus = default_modulus(spec.p, spec.k);
  } else {
    PPoly m = spec.modulus;
    for (auto& c : m) c %= spec.p;
    trim(m);
    if (m.size() != spec.k + 1 || m.back() != 1)
      throw InvalidInput("modulus must be monic of degree k");
    if (!is_irreducible_over_prime(spec.p, m))
      throw InvalidInput("modulus is reducible over F_p");
    spec.modulus = m;
  }
  return registry().get(spec);
}

const Field& Field::get(std::uint32_t p, std::uint32_t k) {
  FieldSpec s;
  s.p = p;
  s.k = k;
  return get(s);
}

Field::Field(const FieldSpec& spec) : spec_(spec), p_(spec.p), q_(spec.q()) {
  if (p_ == 2)
    kind_ = Kind::Binary;
  else if (spec_.k == 1)
    kind_ = Kind::Prime;
  else
    kind_ = Kind::OddExtension;

  if (kind_ == Kind::Prime) {
    inv_.assign(p_, 0);
    for (std::uint32_t a = 1; a < p_; ++a) inv_[a] = std::uint16_t(inv_mod(a, p_));
  } else {
    // Find a primitive element by brute force and tabulate its powers.
    const std::uint32_t n = q_ - 1;
    std::vector<std::uint32_t> primes;
    for (std::uint32_t m = n, d = 2; m > 1; ++d) {
      if (d * d > m) {
        primes.push_back(m);
        break;
      }
      if (m % d == 0) {
        primes.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    auto slow_pow = [&](std::uint16_t g, std::uint32_t e) {
      std::uint16_t r = 1;
      for (; e > 0; e >>= 1, g = slow_mul(g, g))
        if (e & 1) r = slow_mul(r, g);
      return r;
    };
    std::uint16_t gen = 0;
    for (std::uint32_t g = 2; g < q_ && gen == 0; ++g) {
      bool ok = slow_pow(std::uint16_t(g), n) == 1;
      for (std::uint32_t r : primes)
        if (slow_pow(std::uint16_t(g), n / r) == 1) ok = false;
      if (ok) gen = std::uint16_t(g);
    }
    if (q_ == 2) gen = 1;
    if (gen == 0) throw InternalInvariantViolation("no primitive element");
    exp_.assign(2 * std::size_t(n), 0);
    log_.assign(q_, 0);
    std::uint16_t x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      exp_[i] = x;
      exp_[i + n] = x;
      log_[x] = i;
      x = slow_mul(x, gen);
    }
  }

  if (p_ != 2) {
    sqrt_.assign(q_, -1);
    for (std::uint32_t a = q_; a-- > 0;) {
      std::uint16_t sq = mul_code(std::uint16_t(a), std::uint16_t(a));
      sqrt_[sq] = std::int32_t(a);  // descending loop keeps the smaller root
    }
    for (std::uint32_t a = 1; a < q_; ++a)
      if (sqrt_[a] < 0) {
        nonsquare_ = std::uint16_t(a);
        break;
      }
  }

  auto variant = kernels::select_variant(*this);
  axpy_ = kernels::resolve(variant);
  kernel_name_ = kernels::name(variant);
}

std::uint16_t Field::slow_mul(std::uint16_t a, std::uint16_t b) const {
  if (spec_.k == 1) return std::uint16_t(std::uint32_t(a) * b % p_);
  PPoly fa = code_to_poly(a, p_), fb = code_to_poly(b, p_);
  if (fa.empty() || fb.empty()) return 0;
  PPoly prod(fa.size() + fb.size() - 1, 0);
  for (std::size_t i = 0; i < fa.size(); ++i)
    for (std::size_t j = 0; j < fb.size(); ++j)
      prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
  PPoly r = pmod(prod, spec_.modulus, p_);
  std::uint32_t code = 0;
  for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i];
  return std::uint16_t(code);
}

std::uint16_t Field::add_code_digits(std::uint16_t a, std::uint16_t b) const {
  std::uint32_t r = 0, scale = 1;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    std::uint32_t d = (a % p_ + b % p_) % p_;
    r += d * scale;
    scale *= p_;
    a = std::uint16_t(a / p_);
    b = std::uint16_t(b / p_);
  }
  return std::uint16_t(r);
}

std::uint16_t Field::neg_code_digits(std::uint16_t a) const {
  std::uint32_t r = 0, scale = 1;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    std::uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a = std::uint16_t(a / p_);
  }
  return std::uint16_t(r);
}

std::uint16_t Field::inv_code(std::uint16_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in F_q");
  if (kind_ == Kind::Prime) return inv_[a];
  const std::uint32_t n = q_ - 1;
  return exp_[(n - log_[a]) % n];
}

FieldElement Field::element(std::uint32_t code) const {
  if (code >= q_) throw InvalidInput("field element code out of range");
  return FieldElement(std::uint16_t(code));
}

FieldElement Field::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return FieldElement(std::uint16_t(r));
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out.emplace_back(std::uint16_t(c));
  return out;
}

std::vector<std::uint32_t> Field::coords(FieldElement a) const {
  std::vector<std::uint32_t> c(spec_.k, 0);
  std::uint32_t code = a.code();
  for (std::uint32_t i = 0; i < spec_.k; ++i, code /= p_) c[i] = code % p_;
  return c;
}

FieldElement Field::from_coords(const std::vector<std::uint32_t>& c) const {
  if (c.size() > spec_.k) throw InvalidInput("too many coordinates");
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + c[i] % p_;
  return FieldElement(std::uint16_t(code));
}

FieldElement Field::inv(FieldElement a) const {
  return FieldElement(inv_code(a.code()));
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  FieldElement r = one();
  for (; e > 0; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}

std::optional<FieldElement> Field::sqrt(FieldElement a) const {
  if (p_ == 2) return pow(a, q_ / 2);  // Frobenius inverse a^(q/2)
  std::int32_t r = sqrt_[a.code()];
  if (r < 0) return std::nullopt;
  return FieldElement(std::uint16_t(r));
}

bool Field::is_square(FieldElement a) const {
  return p_ == 2 || sqrt_[a.code()] >= 0;
}

FieldElement Field::nonsquare() const {
  if (p_ == 2) throw InvalidInput("no non-squares in characteristic 2");
  return FieldElement(nonsquare_);
}

std::string Field::format(FieldElement a) const {
  if (spec_.k == 1) return std::to_string(a.code());
  if (a.is_zero()) return "0";
  auto c = coords(a);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace gfconj
