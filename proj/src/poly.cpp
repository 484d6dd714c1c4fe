// SPDX-License-Identifier: Apache-2.0
#include "gfconj/poly.hpp"

#include <algorithm>

#include "gfconj/error.hpp"
#include "gfconj/linalg.hpp"

namespace gfconj {

int Degree::value() const {
  if (is_neg_inf()) throw InvalidInput("degree of the zero polynomial");
  return v_;
}

std::string Degree::to_string() const {
  return is_neg_inf() ? std::string("-inf") : std::to_string(v_);
}

Poly::Poly(const Field& f, FieldElement c) : f_(&f) {
  if (!c.is_zero()) c_.push_back(c.code());
}

Poly Poly::from_codes(const Field& f, std::vector<std::uint16_t> codes) {
  Poly r(f);
  for (auto c : codes)
    if (c >= f.q()) throw InvalidInput("coefficient code out of range");
  r.c_ = std::move(codes);
  r.trim();
  return r;
}

Poly Poly::monomial(const Field& f, FieldElement c, int e) {
  Poly r(f);
  if (c.is_zero()) return r;
  if (e < 0) throw InvalidInput("negative exponent");
  r.c_.assign(std::size_t(e) + 1, 0);
  r.c_.back() = c.code();
  return r;
}

const Field& Poly::field() const {
  if (f_ == nullptr) throw InvalidInput("polynomial is not bound to a field");
  return *f_;
}

FieldElement Poly::lead() const {
  return c_.empty() ? FieldElement(0) : FieldElement(c_.back());
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& g) const {
  if (f_ != nullptr && g.f_ != nullptr && f_ != g.f_)
    throw InvalidInput("polynomials over different fields");
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = f_->neg_code(c);
  return r;
}

Poly& Poly::operator+=(const Poly& g) {
  check_same(g);
  if (f_ == nullptr) f_ = g.f_;
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), 0);
  for (std::size_t i = 0; i < g.c_.size(); ++i)
    c_[i] = f_->add_code(c_[i], g.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& g) {
  check_same(g);
  if (f_ == nullptr) f_ = g.f_;
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), 0);
  for (std::size_t i = 0; i < g.c_.size(); ++i)
    c_[i] = f_->add_code(c_[i], f_->neg_code(g.c_[i]));
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  const Field* f = a.f_ != nullptr ? a.f_ : b.f_;
  Poly r;
  r.f_ = f;
  if (a.c_.empty() || b.c_.empty()) return r;
  const Poly& big = a.c_.size() >= b.c_.size() ? a : b;
  const Poly& small = a.c_.size() >= b.c_.size() ? b : a;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < small.c_.size(); ++i)
    f->axpy(r.c_.data() + i, big.c_.data(), big.c_.size(), small.c_[i]);
  r.trim();
  return r;
}

Poly Poly::scaled(FieldElement s) const {
  Poly r(field());
  if (s.is_zero()) return r;
  r.c_ = c_;
  for (auto& c : r.c_) c = f_->mul_code(c, s.code());
  return r;
}

Poly Poly::shifted(int e) const {
  if (e < 0) throw InvalidInput("negative shift");
  Poly r = *this;
  if (!r.c_.empty()) r.c_.insert(r.c_.begin(), std::size_t(e), 0);
  return r;
}

Poly Poly::shifted_down(int e) const {
  Poly r = *this;
  if (e <= 0) return e == 0 ? r : shifted(-e);
  if (std::size_t(e) >= r.c_.size())
    r.c_.clear();
  else
    r.c_.erase(r.c_.begin(), r.c_.begin() + e);
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& g) const {
  check_same(g);
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  const Field& f = g.field();
  Poly q(f), r = *this;
  r.f_ = &f;
  if (r.c_.size() < g.c_.size()) return {q, r};
  const std::size_t dg = g.c_.size() - 1;
  const std::uint16_t il = f.inv_code(g.c_.back());
  q.c_.assign(r.c_.size() - dg, 0);
  for (std::size_t i = r.c_.size() - g.c_.size() + 1; i-- > 0;) {
    const std::uint16_t top = r.c_[i + dg];
    if (top == 0) continue;
    const std::uint16_t c = f.mul_code(top, il);
    q.c_[i] = c;
    f.axpy(r.c_.data() + i, g.c_.data(), dg + 1, f.neg_code(c));
  }
  r.c_.resize(dg);
  r.trim();
  q.trim();
  return {q, r};
}

std::optional<Poly> Poly::exact_div(const Poly& g) const {
  auto [q, r] = divmod(g);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

bool Poly::divisible_by(const Poly& g) const {
  if (g.is_zero()) return is_zero();
  return divmod(g).second.is_zero();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(lead()));
}

Poly Poly::pow(std::uint64_t e) const {
  Poly r(field(), field().one()), b = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b;
    if (e > 1) b = b * b;
  }
  return r;
}

FieldElement Poly::eval(FieldElement t) const {
  FieldElement r(0);
  for (std::size_t i = c_.size(); i-- > 0;)
    r = f_->add(f_->mul(r, t), FieldElement(c_[i]));
  return r;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

std::size_t Poly::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ c_.size();
  for (auto c : c_) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

Bezout xgcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw InvalidInput("gcd(0, 0)");
  const Field& F = f.is_zero() ? g.field() : f.field();
  Poly r0 = f, r1 = g, s0(F, F.one()), s1(F), t0(F), t1(F, F.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    Poly s = s0 - q * s1;
    s0 = s1;
    s1 = s;
    Poly t = t0 - q * t1;
    t0 = t1;
    t1 = t;
  }
  const FieldElement il = F.inv(r0.lead());
  return {r0.scaled(il), s0.scaled(il), t0.scaled(il)};
}

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw InvalidInput("gcd(0, 0)");
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly lcm(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly(f.is_zero() ? g.field() : f.field());
  return ((f / gcd(f, g)) * g).monic();
}

std::optional<Poly> sqrt(const Poly& f) {
  const Field& F = f.field();
  if (f.is_zero()) return f;
  const int n = f.deg();
  if (n % 2 != 0) return std::nullopt;
  const int h = n / 2;
  std::vector<std::uint16_t> g(std::size_t(h) + 1, 0);
  if (F.char2()) {
    for (int i = 0; i <= n; ++i) {
      if (i % 2 == 1) {
        if (!f.coeff(std::size_t(i)).is_zero()) return std::nullopt;
        continue;
      }
      g[std::size_t(i / 2)] = F.sqrt(f.coeff(std::size_t(i)))->code();
    }
    return Poly::from_codes(F, g);
  }
  auto s0 = F.sqrt(f.lead());
  if (!s0) return std::nullopt;
  g[std::size_t(h)] = s0->code();
  const FieldElement inv2s = F.inv(F.add(*s0, *s0));
  for (int k = h - 1; k >= 0; --k) {
    FieldElement s(0);
    for (int i = k + 1; i <= h - 1; ++i)
      s = F.add(s, F.mul(FieldElement(g[std::size_t(i)]),
                         FieldElement(g[std::size_t(h + k - i)])));
    g[std::size_t(k)] =
        F.mul(F.sub(f.coeff(std::size_t(h + k)), s), inv2s).code();
  }
  Poly r = Poly::from_codes(F, g);
  if (!(r * r == f)) return std::nullopt;
  return r;
}

namespace {

// Char 2, b != 0: u -> u^2 + b u is F_2-linear, kernel {0, b}.
std::optional<Poly> char2_particular(const Poly& b, const Poly& r) {
  const Field& F = b.field();
  const int k = int(F.k());
  const int ub = std::max(b.deg(), r.is_zero() ? 0 : r.deg() / 2);
  const int out_deg = std::max(2 * ub, ub + b.deg());
  if (r.deg() > out_deg) return std::nullopt;
  const int nunk = (ub + 1) * k;
  const int nout = (out_deg + 1) * k;
  std::vector<std::vector<bool>> rows(
      std::size_t(nout), std::vector<bool>(std::size_t(nunk), false));
  for (int i = 0; i <= ub; ++i)
    for (int j = 0; j < k; ++j) {
      Poly e = Poly::monomial(F, FieldElement(std::uint16_t(1u << j)), i);
      Poly img = e * e + b * e;
      for (std::size_t t = 0; t < img.size(); ++t) {
        const std::uint16_t code = img.codes()[t];
        for (int bitj = 0; bitj < k; ++bitj)
          if ((code >> bitj) & 1u)
            rows[t * std::size_t(k) + std::size_t(bitj)]
                [std::size_t(i * k + j)] = true;
      }
    }
  linalg::Gf2System sys(nunk);
  for (int t = 0; t <= out_deg; ++t)
    for (int bitj = 0; bitj < k; ++bitj)
      sys.add_row(rows[std::size_t(t * k + bitj)],
                  (r.coeff(std::size_t(t)).code() >> bitj) & 1u);
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  std::vector<std::uint16_t> codes(std::size_t(ub) + 1, 0);
  for (int i = 0; i <= ub; ++i)
    for (int j = 0; j < k; ++j)
      if ((*sol)[std::size_t(i * k + j)]) codes[std::size_t(i)] |= std::uint16_t(1u << j);
  Poly u = Poly::from_codes(F, codes);
  if (!(u * u + b * u == r))
    throw InternalInvariantViolation("char-2 quadratic solve failed to verify");
  return u;
}

}  // namespace

std::vector<Poly> solve_monic_quadratic(const Poly& b, const Poly& r) {
  const Field& F = b.bound() ? b.field() : r.field();
  Poly bb = b.bound() ? b : Poly(F);
  std::vector<Poly> out;
  if (F.char2()) {
    if (bb.is_zero()) {
      if (auto s = sqrt(r)) out.push_back(*s);
      return out;
    }
    auto u = char2_particular(bb, r);
    if (!u) return out;
    out.push_back(*u);
    out.push_back(*u + bb);
  } else {
    // (u + b/2)^2 = r + b^2/4
    const FieldElement half = F.inv(F.from_int(2));
    Poly hb = bb.scaled(half);
    auto s = sqrt(r + hb * hb);
    if (!s) return out;
    out.push_back(*s - hb);
    if (!s->is_zero()) out.push_back(-*s - hb);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Poly, Poly> even_odd_split(const Poly& f) {
  const Field& F = f.field();
  std::vector<std::uint16_t> e, o;
  for (std::size_t i = 0; i < f.size(); ++i)
    (i % 2 == 0 ? e : o).push_back(f.codes()[i]);
  return {Poly::from_codes(F, e), Poly::from_codes(F, o)};
}

Poly inflate(const Poly& h) {
  const Field& F = h.field();
  if (h.is_zero()) return h;
  std::vector<std::uint16_t> c(2 * h.size() - 1, 0);
  for (std::size_t i = 0; i < h.size(); ++i) c[2 * i] = h.codes()[i];
  return Poly::from_codes(F, c);
}

void for_each_poly(const Field& f, int max_deg,
                   const std::function<bool(const Poly&)>& fn) {
  if (max_deg < 0) {
    fn(Poly(f));
    return;
  }
  std::vector<std::uint16_t> digits(std::size_t(max_deg) + 1, 0);
  const std::uint32_t q = f.q();
  while (true) {
    if (!fn(Poly::from_codes(f, digits))) return;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
    if (i == digits.size()) return;
  }
}

void for_each_monic(const Field& f, int deg,
                    const std::function<bool(const Poly&)>& fn) {
  if (deg < 0) return;
  std::vector<std::uint16_t> digits(std::size_t(deg) + 1, 0);
  digits.back() = 1;
  const std::uint32_t q = f.q();
  while (true) {
    if (!fn(Poly::from_codes(f, digits))) return;
    std::size_t i = 0;
    while (i < digits.size() - 1 && ++digits[i] == q) digits[i++] = 0;
    if (i == digits.size() - 1) return;
  }
}

namespace {

Poly derivative(const Poly& f) {
  const Field& F = f.field();
  const auto& c = f.codes();
  std::vector<std::uint16_t> d(c.size() > 1 ? c.size() - 1 : 0);
  for (std::size_t i = 1; i < c.size(); ++i)
    d[i - 1] = F.mul(F.from_int(std::int64_t(i % F.p())), FieldElement(c[i])).code();
  return Poly::from_codes(F, std::move(d));
}

// f = g(x)^p for f' = 0; a^{1/p} = a^{q/p} in F_q.
Poly pth_root(const Poly& f) {
  const Field& F = f.field();
  const auto& c = f.codes();
  std::vector<std::uint16_t> r((c.size() + F.p() - 1) / F.p());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.pow(FieldElement(c[i * F.p()]), F.q() / F.p()).code();
  return Poly::from_codes(F, std::move(r));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b).divmod(m).second; }

Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  const Field& F = m.field();
  Poly r(F, F.one());
  base = base.divmod(m).second;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// Monic squarefree parts with multiplicities (Yun, with p-th roots).
void squarefree(const Poly& f, int scale, std::vector<Factor>& out) {
  if (f.deg() <= 0) return;
  const Field& F = f.field();
  const Poly d = derivative(f);
  if (d.is_zero()) {
    squarefree(pth_root(f).monic(), scale * int(F.p()), out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = *f.exact_div(c);
  for (int i = 1; w.deg() > 0; ++i) {
    const Poly y = gcd(w, c);
    const Poly z = *w.exact_div(y);
    if (z.deg() > 0) out.push_back({z.monic(), i * scale});
    w = y;
    c = *c.exact_div(y);
  }
  if (c.deg() > 0) squarefree(pth_root(c).monic(), scale * int(F.p()), out);
}

// Irreducible factors of a monic squarefree f (Berlekamp).
std::vector<Poly> berlekamp(const Poly& f) {
  const int n = f.deg();
  if (n <= 1) return {f};
  const Field& F = f.field();
  const Poly xq = powmod(Poly::x(F), F.q(), f);
  linalg::Matrix m(std::size_t(n), std::vector<FieldElement>(std::size_t(n), FieldElement{}));
  Poly r(F, F.one());
  for (int i = 0; i < n; ++i) {
    // column i: x^{qi} mod f - x^i
    for (int j = 0; j < n; ++j) {
      FieldElement v = r.coeff(std::size_t(j));
      if (i == j) v = F.sub(v, F.one());
      m[std::size_t(j)][std::size_t(i)] = v;
    }
    r = mulmod(r, xq, f);
  }
  const auto basis = linalg::nullspace(F, m, n);
  const std::size_t k = basis.size();
  std::vector<Poly> parts{f};
  for (const auto& vec : basis) {
    if (parts.size() == k) break;
    std::vector<std::uint16_t> codes(vec.size());
    for (std::size_t i = 0; i < vec.size(); ++i) codes[i] = vec[i].code();
    const Poly g = Poly::from_codes(F, std::move(codes));
    if (g.deg() <= 0) continue;
    std::vector<Poly> next;
    for (const Poly& h : parts) {
      Poly rest = h;
      for (FieldElement c : F.elements()) {
        if (rest.deg() <= 1) break;
        const Poly t = gcd(rest, g - Poly(F, c));
        if (t.deg() > 0 && t.deg() < rest.deg()) {
          next.push_back(t);
          rest = *rest.exact_div(t);
        }
      }
      next.push_back(rest);
    }
    parts = std::move(next);
  }
  ensure(parts.size() == k, "Berlekamp split incomplete");
  return parts;
}

}  // namespace

std::vector<Factor> factor(const Poly& f) {
  if (f.is_zero()) throw InvalidInput("factor of zero");
  std::vector<Factor> sq;
  squarefree(f.monic(), 1, sq);
  std::vector<Factor> out;
  for (const auto& s : sq)
    for (const Poly& p : berlekamp(s.p)) {
      auto it = std::find_if(out.begin(), out.end(), [&](const Factor& x) { return x.p == p; });
      if (it != out.end()) it->multiplicity += s.multiplicity;
      else out.push_back({p.monic(), s.multiplicity});
    }
  std::sort(out.begin(), out.end(),
            [](const Factor& a, const Factor& b) { return a.p < b.p; });
  return out;
}

std::vector<Poly> divisors(const Poly& f) {
  if (f.is_zero()) throw InvalidInput("divisors of zero");
  const Field& F = f.field();
  std::vector<Poly> out{Poly(F, F.one())};
  for (const auto& fac : factor(f)) {
    std::vector<Poly> next;
    for (const auto& d : out) {
      Poly m = d;
      for (int i = 0; i <= fac.multiplicity; ++i) {
        next.push_back(m);
        m = m * fac.p;
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gfconj
