// SPDX-License-Identifier: Apache-2.0
#include "gfconj/text.hpp"

#include <cctype>
#include <sstream>

#include "gfconj/error.hpp"

namespace gfconj {

std::string format_poly(const Poly& p) {
  if (!p.bound() || p.is_zero()) return "0";
  const Field& f = p.field();
  std::string out;
  for (int i = p.deg(); i >= 0; --i) {
    const FieldElement c = p.coeff(std::size_t(i));
    if (c.is_zero()) continue;
    if (!out.empty()) out += "+";
    const std::string cs = f.format(c);
    if (i == 0) {
      out += cs;
      continue;
    }
    if (c != f.one()) {
      if (cs.find('+') != std::string::npos)
        out += "(" + cs + ")*";
      else
        out += cs + "*";
    }
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

// Recursive-descent parser over one line of text. Values are polynomials in
// `var` over `field`; the generator symbol `a` is accepted when the field is
// an extension.
class Parser {
 public:
  Parser(const Field& field, std::string_view s, int line, int column,
         char var = 'x', bool allow_gen = true)
      : f_(field), s_(s), line_(line), col0_(column), var_(var),
        allow_gen_(allow_gen && field.k() > 1) {}

  Poly expr() {
    skip();
    Poly acc(f_);
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
    }
    Poly t = term();
    acc = neg ? acc - t : acc + t;
    while (true) {
      skip();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly t2 = term();
      acc = c == '-' ? acc - t2 : acc + t2;
    }
    return acc;
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col0_ + int(pos_), msg);
  }

 private:
  Poly term() {
    Poly acc = factor();
    while (true) {
      skip();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  long long integer() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > (1ll << 40)) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  int exponent() {
    skip();
    if (peek() != '^') return 1;
    ++pos_;
    long long e = integer();
    if (e > 100000) fail("exponent too large");
    return int(e);
  }

  Poly factor() {
    skip();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(f_, integer());
    if (c == var_) {
      ++pos_;
      return Poly::monomial(f_, f_.one(), exponent());
    }
    if (c == 'a' && allow_gen_) {
      ++pos_;
      const FieldElement gen = f_.element(f_.p());
      return Poly(f_, f_.pow(gen, std::uint64_t(exponent())));
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      expect(')');
      skip();
      if (peek() == '^') {
        ++pos_;
        return inner.pow(std::uint64_t(integer()));
      }
      return inner;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

 public:
  std::size_t pos_ = 0;

 private:
  const Field& f_;
  std::string_view s_;
  int line_;
  int col0_;
  char var_;
  bool allow_gen_;
};

}  // namespace

Poly parse_poly(const Field& f, std::string_view text, int line, int column) {
  Parser p(f, text, line, column);
  Poly r = p.expr();
  if (!p.at_end()) p.fail("trailing characters after polynomial");
  return r;
}

std::string format_matrix(const Matrix2& m) {
  return "[[" + format_poly(m.a11) + ", " + format_poly(m.a12) + "], [" +
         format_poly(m.a21) + ", " + format_poly(m.a22) + "]]";
}

Matrix2 parse_matrix(const Field& f, std::string_view text, int line,
                     int column) {
  Parser p(f, text, line, column);
  Matrix2 m;
  p.expect('[');
  p.expect('[');
  m.a11 = p.expr();
  p.expect(',');
  m.a12 = p.expr();
  p.expect(']');
  p.expect(',');
  p.expect('[');
  m.a21 = p.expr();
  p.expect(',');
  m.a22 = p.expr();
  p.expect(']');
  p.expect(']');
  if (!p.at_end()) p.fail("trailing characters after matrix");
  return m;
}

std::string format_field_header(const Field& f) {
  std::string out =
      "field p=" + std::to_string(f.p()) + " k=" + std::to_string(f.k());
  if (f.k() > 1) {
    const Field& base = Field::get(f.p(), 1);
    std::vector<std::uint16_t> codes;
    for (auto c : f.spec().modulus) codes.push_back(std::uint16_t(c));
    std::string m = format_poly(Poly::from_codes(base, codes));
    for (auto& ch : m)
      if (ch == 'x') ch = 'a';
    out += " modulus=" + m;
  }
  return out;
}

const Field& parse_field_header(std::string_view text, int line) {
  std::size_t pos = 0;
  auto col = [&]() { return int(pos) + 1; };
  auto skip = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.substr(pos, 5) != "field") throw ParseError(line, col(), "expected 'field' header");
  pos += 5;
  FieldSpec spec;
  bool have_p = false, have_k = false;
  std::string modulus_text;
  int modulus_col = 0;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    const std::size_t eq = text.find('=', pos);
    if (eq == std::string_view::npos) throw ParseError(line, col(), "expected key=value");
    std::string key(text.substr(pos, eq - pos));
    std::size_t end = eq + 1;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string value(text.substr(eq + 1, end - eq - 1));
    const int value_col = int(eq) + 2;
    auto number = [&]() {
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos ||
          value.size() > 6)
        throw ParseError(line, value_col, "expected a small integer");
      return std::uint32_t(std::stoul(value));
    };
    if (key == "p") {
      spec.p = number();
      have_p = true;
    } else if (key == "k") {
      spec.k = number();
      have_k = true;
    } else if (key == "modulus") {
      modulus_text = value;
      modulus_col = value_col;
    } else {
      throw ParseError(line, col(), "unknown field header key '" + key + "'");
    }
    pos = end;
  }
  if (!have_p) throw ParseError(line, 1, "field header needs p=<prime>");
  if (!have_k) spec.k = 1;
  try {
    if (!modulus_text.empty()) {
      const Field& base = Field::get(spec.p, 1);
      Parser mp(base, modulus_text, line, modulus_col, 'a', false);
      Poly m = mp.expr();
      if (!mp.at_end()) mp.fail("trailing characters after modulus");
      for (auto c : m.codes()) spec.modulus.push_back(c);
    }
    return Field::get(spec);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line, 1, e.what());
  }
}

const Matrix2& ProblemFile::matrix(const std::string& k) const {
  auto it = matrices.find(k);
  if (it == matrices.end()) throw InvalidInput("problem file lacks matrix " + k);
  return it->second;
}

const Poly& ProblemFile::poly(const std::string& k) const {
  auto it = polys.find(k);
  if (it == polys.end()) throw InvalidInput("problem file lacks polynomial " + k);
  return it->second;
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile pf;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s(raw);
    const std::size_t hash = s.find('#');
    if (hash != std::string_view::npos) s = s.substr(0, hash);
    std::size_t first = 0;
    while (first < s.size() && std::isspace(static_cast<unsigned char>(s[first]))) ++first;
    if (first == s.size()) continue;
    if (pf.field == nullptr) {
      pf.field = &parse_field_header(s, line);
      continue;
    }
    const std::size_t eq = s.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(line, int(first) + 1, "expected 'key = value'");
    std::size_t kend = eq;
    while (kend > first && std::isspace(static_cast<unsigned char>(s[kend - 1]))) --kend;
    const std::string key(s.substr(first, kend - first));
    const std::string_view value = s.substr(eq + 1);
    const int vcol = int(eq) + 2;
    if (key == "A" || key == "B") {
      if (pf.matrices.count(key)) throw ParseError(line, int(first) + 1, "duplicate key " + key);
      pf.matrices.emplace(key, parse_matrix(*pf.field, value, line, vcol));
    } else if (key == "D" || key == "b" || key == "c" || key == "d") {
      if (pf.polys.count(key)) throw ParseError(line, int(first) + 1, "duplicate key " + key);
      pf.polys.emplace(key, parse_poly(*pf.field, value, line, vcol));
    } else {
      throw ParseError(line, int(first) + 1, "unknown key '" + key + "'");
    }
  }
  if (pf.field == nullptr) throw ParseError(line + 1, 1, "missing field header");
  return pf;
}

}  // namespace gfconj
