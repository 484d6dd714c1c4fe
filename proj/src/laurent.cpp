// SPDX-License-Identifier: Apache-2.0
#include "gfconj/laurent.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

#include "gfconj/error.hpp"

namespace gfconj {

LaurentSeries LaurentSeries::zero(const Field& f) {
  return LaurentSeries(f, 0, {});
}

LaurentSeries::LaurentSeries(const Field& f, int top,
                             std::vector<std::uint16_t> window)
    : f_(&f), top_(top), window_(std::move(window)) {
  if (!window_.empty() && window_.front() == 0)
    throw InvalidInput("series window must start with a nonzero coefficient");
  if (window_.empty()) top_ = 0;
}

LaurentSeries LaurentSeries::from_poly(const Poly& p, int prec) {
  const Field& f = p.field();
  if (p.is_zero()) return zero(f);
  if (prec < 1) throw PrecisionExhausted("series precision must be positive");
  std::vector<std::uint16_t> w(std::size_t(prec), 0);
  const int d = p.deg();
  for (int i = 0; i < prec && d - i >= 0; ++i)
    w[std::size_t(i)] = p.coeff(std::size_t(d - i)).code();
  return LaurentSeries(f, d, std::move(w));
}

FieldElement LaurentSeries::coeff(int e) const {
  if (is_zero() || e > top_) return FieldElement(0);
  if (e < low()) throw PrecisionExhausted("coefficient below series precision");
  return FieldElement(window_[std::size_t(top_ - e)]);
}

namespace {

LaurentSeries combine(const LaurentSeries& s, const LaurentSeries& t,
                      bool subtract) {
  const Field& f = s.field();
  const int hi = std::max(s.top(), t.top());
  const int lo = std::max(s.low(), t.low());
  std::vector<std::uint16_t> w;
  for (int e = hi; e >= lo; --e) {
    std::uint16_t b = t.coeff(e).code();
    if (subtract) b = f.neg_code(b);
    std::uint16_t c = f.add_code(s.coeff(e).code(), b);
    if (w.empty() && c == 0) continue;
    w.push_back(c);
  }
  if (w.empty()) throw PrecisionExhausted("cancellation emptied the series window");
  const int top = lo + int(w.size()) - 1;
  return LaurentSeries(f, top, std::move(w));
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& s, const LaurentSeries& t) {
  if (s.is_zero()) return t;
  if (t.is_zero()) return s;
  return combine(s, t, false);
}

LaurentSeries operator-(const LaurentSeries& s, const LaurentSeries& t) {
  if (t.is_zero()) return s;
  if (s.is_zero()) return -t;
  return combine(s, t, true);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.window_) c = f_->neg_code(c);
  return r;
}

LaurentSeries operator*(const LaurentSeries& s, const LaurentSeries& t) {
  const Field& f = s.field();
  if (s.is_zero() || t.is_zero()) return LaurentSeries::zero(f);
  const int n = std::min(s.prec(), t.prec());
  std::vector<std::uint16_t> w(std::size_t(n), 0);
  for (int i = 0; i < n; ++i)
    f.axpy(w.data() + i, t.window_.data(), std::size_t(n - i),
           s.window_[std::size_t(i)]);
  return LaurentSeries(f, s.top() + t.top(), std::move(w));
}

LaurentSeries LaurentSeries::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero series");
  const Field& f = *f_;
  const int n = prec();
  std::vector<std::uint16_t> w(std::size_t(n), 0);
  const std::uint16_t i0 = f.inv_code(window_[0]);
  w[0] = i0;
  for (int i = 1; i < n; ++i) {
    std::uint16_t acc = 0;
    for (int j = 1; j <= i; ++j)
      acc = f.add_code(acc, f.mul_code(window_[std::size_t(j)], w[std::size_t(i - j)]));
    w[std::size_t(i)] = f.mul_code(f.neg_code(acc), i0);
  }
  return LaurentSeries(f, -top_, std::move(w));
}

LaurentSeries LaurentSeries::truncate(int e) const {
  if (is_zero() || top_ < e) return zero(*f_);
  if (low() > e) throw PrecisionExhausted("truncation below series precision");
  std::vector<std::uint16_t> w(window_.begin(), window_.begin() + (top_ - e + 1));
  return LaurentSeries(*f_, top_, std::move(w));
}

LaurentSeries LaurentSeries::with_prec(int n) const {
  if (is_zero()) return *this;
  if (n < 1 || n > prec()) throw PrecisionExhausted("requested precision unavailable");
  std::vector<std::uint16_t> w(window_.begin(), window_.begin() + n);
  return LaurentSeries(*f_, top_, std::move(w));
}

std::string LaurentSeries::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i < prec(); ++i) {
    const FieldElement c(window_[std::size_t(i)]);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += f_->format(c) + " x^" + std::to_string(top_ - i);
  }
  out += " + O(x^" + std::to_string(low() - 1) + ")";
  return out;
}

Poly polynomial_part(const LaurentSeries& s) {
  const Field& f = s.field();
  if (s.is_zero() || s.top() < 0) return Poly(f);
  if (s.low() > 0) throw PrecisionExhausted("series does not reach degree 0");
  std::vector<std::uint16_t> codes(std::size_t(s.top()) + 1, 0);
  for (int e = 0; e <= s.top(); ++e) codes[std::size_t(e)] = s.coeff(e).code();
  return Poly::from_codes(f, codes);
}

namespace {
std::atomic<int> precision_override{0};
}  // namespace

int default_series_precision(const Poly& b, const Poly& c) {
  const int d = std::max({b.deg(), c.deg(), 0});
  if (const int o = precision_override.load(); o > 0) return std::max(o, d + 2);
  return 4 * d + 8;
}

void set_series_precision_override(int prec) { precision_override.store(std::max(prec, 0)); }

namespace {

// Dense coefficients for exponents lo..lo+size-1.
struct Dense {
  int lo;
  std::vector<std::uint16_t> c;
  std::uint16_t& at(int e) { return c[std::size_t(e - lo)]; }
  std::uint16_t get(int e) const {
    return e < lo || e >= lo + int(c.size()) ? 0 : c[std::size_t(e - lo)];
  }
  int hi() const { return lo + int(c.size()) - 1; }
};

std::optional<LaurentSeries> char2_root(const Poly& b, const Poly& c, int prec) {
  const Field& f = b.field();
  const Poly b2 = b * b;
  const int de = c.deg() - b2.deg();
  for (int guard = prec + std::abs(de) + 8;; guard *= 2) {
    const int lo = -guard;
    // e = c / b^2 for exponents lo..max(de, 0).
    const int ehi = std::max(de, 0);
    LaurentSeries es = LaurentSeries::from_poly(c, de - lo + 1) *
                       LaurentSeries::from_poly(b2, de - lo + 1).inverse();
    Dense e{lo, std::vector<std::uint16_t>(std::size_t(ehi - lo + 1), 0)};
    for (int x = lo; x <= de; ++x) e.at(x) = es.coeff(x).code();
    Dense y{lo, std::vector<std::uint16_t>(std::size_t(std::max(ehi / 2, 0) - lo + 1), 0)};
    // Positive exponents: y_top must square to the top of e, so odd tops
    // have no root.
    for (int i = ehi; i >= 1; --i) {
      const std::uint16_t ei = e.get(i);
      if (ei == 0) continue;
      if (i % 2 == 1) return std::nullopt;
      const std::uint16_t s = f.sqrt(FieldElement(ei))->code();
      y.at(i / 2) = f.add_code(y.get(i / 2), s);
      e.at(i) = 0;
      e.at(i / 2) = f.add_code(e.get(i / 2), s);
    }
    // Constant term: y0^2 + y0 = e0 in F_q.
    std::optional<std::uint16_t> y0;
    for (std::uint32_t t = 0; t < f.q() && !y0; ++t) {
      const std::uint16_t tt = std::uint16_t(t);
      if (f.add_code(f.mul_code(tt, tt), tt) == e.get(0)) y0 = tt;
    }
    if (!y0) return std::nullopt;
    y.at(0) = *y0;
    // Negative part: y = sum_j e_-^(2^j).
    Dense term{lo, std::vector<std::uint16_t>(std::size_t(-lo), 0)};
    for (int x = lo; x < 0; ++x) term.at(x) = e.get(x);
    while (true) {
      bool any = false;
      for (int x = lo; x < 0; ++x)
        if (term.get(x) != 0) {
          any = true;
          y.at(x) = f.add_code(y.get(x), term.get(x));
        }
      if (!any) break;
      Dense next{lo, std::vector<std::uint16_t>(std::size_t(-lo), 0)};
      for (int x = lo; x < 0; ++x)
        if (term.get(x) != 0 && 2 * x >= lo)
          next.at(2 * x) = f.mul_code(term.get(x), term.get(x));
      term = std::move(next);
    }
    // Delta = b y, known for exponents >= lo + deg b.
    const int dlo = lo + b.deg();
    const int dhi = y.hi() + b.deg();
    std::vector<std::uint16_t> w;
    int top = 0;
    for (int x = dhi; x >= dlo; --x) {
      std::uint16_t acc = 0;
      for (int i = 0; i <= b.deg(); ++i)
        acc = f.add_code(acc, f.mul_code(b.coeff(std::size_t(i)).code(), y.get(x - i)));
      if (w.empty()) {
        if (acc == 0) continue;
        top = x;
      }
      w.push_back(acc);
    }
    if (int(w.size()) >= prec)
      return LaurentSeries(f, top, std::move(w)).with_prec(prec);
    if (guard > (1 << 20)) throw PrecisionExhausted("series root precision cap");
  }
}

std::optional<LaurentSeries> odd_root(const Poly& b, const Poly& c, int prec) {
  const Field& f = b.field();
  const Poly hb = b.scaled(f.inv(f.from_int(2)));
  const Poly d = hb * hb - c;
  if (sqrt(d)) throw RationalCase("t^2 + bt + c has a polynomial root");
  if (d.deg() % 2 != 0) return std::nullopt;
  auto s0 = f.sqrt(d.lead());
  if (!s0) return std::nullopt;
  const int m = d.deg() / 2;
  const std::uint16_t inv2g = f.inv_code(f.add_code(s0->code(), s0->code()));
  // Subtracting b/2 can cancel leading terms; widen until prec survive.
  int n = prec + 2;
  for (;;) {
    std::vector<std::uint16_t> g(std::size_t(n), 0);
    g[0] = s0->code();
    for (int k = 1; k < n; ++k) {
      std::uint16_t acc = 0;
      for (int i = 1; i < k; ++i)
        acc = f.add_code(acc, f.mul_code(g[std::size_t(i)], g[std::size_t(k - i)]));
      const int ex = 2 * m - k;
      const std::uint16_t dk = ex >= 0 ? d.coeff(std::size_t(ex)).code() : 0;
      g[std::size_t(k)] = f.mul_code(f.add_code(dk, f.neg_code(acc)), inv2g);
    }
    LaurentSeries root(f, m, std::move(g));
    if (!hb.is_zero())
      root = root - LaurentSeries::from_poly(hb, hb.deg() - root.low() + 1);
    if (root.prec() >= prec) return root.with_prec(prec);
    n += prec - root.prec();
  }
}

}  // namespace

std::optional<LaurentSeries> quadratic_series_root(const Poly& b0,
                                                   const Poly& c, int prec) {
  const Field& f = c.bound() ? c.field() : b0.field();
  const Poly b = b0.bound() ? b0 : Poly(f);
  if (prec < 1) throw PrecisionExhausted("series precision must be positive");
  if (f.char2()) {
    if (b.is_zero()) {
      if (sqrt(c)) throw RationalCase("t^2 = c has a polynomial root");
      return std::nullopt;
    }
    if (!solve_monic_quadratic(b, c).empty())
      throw RationalCase("t^2 + bt + c has a polynomial root");
    return char2_root(b, c, prec);
  }
  return odd_root(b, c, prec);
}

}  // namespace gfconj
