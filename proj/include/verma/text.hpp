#pragma once

// Text syntax for polynomials in u, rational highest weights and series.
//
//   "(u+2)/(u+1)"   "(u^2+3u+1)/(u^2+1)"   "(u+2)^2/(u+1)^2"   "((3/2)u+1)/(...)"
//
// A digit run immediately followed by '/' and another digit run is one
// rational literal ("3/2"); every other '/' divides rational expressions.

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "verma/exact.hpp"

namespace verma {

namespace detail {

struct Fraction {
  PolyQ num{Rat(1)};
  PolyQ den{Rat(1)};
};

inline Fraction frac_mul(const Fraction& a, const Fraction& b) { return {a.num * b.num, a.den * b.den}; }
inline Fraction frac_add(const Fraction& a, const Fraction& b, bool subtract) {
  PolyQ rhs = b.num * a.den;
  return {subtract ? a.num * b.den - rhs : a.num * b.den + rhs, a.den * b.den};
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  Fraction parse() {
    Fraction f = expr();
    if (pos_ != s_.size()) fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw invalid_input(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  Fraction expr() {
    Fraction acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = s_[pos_++] == '-';
    acc = term();
    if (negate) acc.num = -acc.num;
    while (peek() == '+' || peek() == '-') {
      bool sub = s_[pos_++] == '-';
      acc = frac_add(acc, term(), sub);
    }
    return acc;
  }

  Fraction term() {
    Fraction acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = frac_mul(acc, power());
      } else if (c == '/') {
        ++pos_;
        Fraction d = power();
        if (d.num.is_zero()) fail("division by zero");
        acc = frac_mul(acc, Fraction{d.den, d.num});
      } else if (c == '(' || c == 'u' || std::isdigit(static_cast<unsigned char>(c))) {
        acc = frac_mul(acc, power());  // implicit multiplication: 3u, (u+1)(u+2)
      } else {
        return acc;
      }
    }
  }

  Fraction power() {
    Fraction base = primary();
    if (peek() != '^') return base;
    ++pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent");
    unsigned long e = std::stoul(s_.substr(start, pos_ - start));
    Fraction out;
    for (unsigned long i = 0; i < e; ++i) out = frac_mul(out, base);
    if (neg) {
      if (out.num.is_zero()) fail("negative power of zero");
      std::swap(out.num, out.den);
    }
    return out;
  }

  Fraction primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Fraction inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'u') {
      ++pos_;
      return {PolyQ::u(), PolyQ(Rat(1))};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      return {PolyQ(Rat::parse(s_.substr(start, pos_ - start))), PolyQ(Rat(1))};
    }
    fail("expected a number, 'u' or '('");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial in u (division by non-constants is rejected).
inline PolyQ parse_poly(std::string_view text) {
  detail::Fraction f = detail::Parser(text).parse();
  if (f.den.degree() != 0) throw invalid_input("expected a polynomial in u: '" + std::string(text) + "'");
  return f.num * PolyQ(Rat(1) / f.den.lead());
}

/// Parses a rational highest weight such as "(u+2)/(u+1)" into reduced monic form.
inline RationalFn parse_rational_fn(std::string_view text) {
  detail::Fraction f = detail::Parser(text).parse();
  return RationalFn(f.num, f.den);
}

/// Comma separated rational literals, e.g. "1,-1,1/2".
inline std::vector<Rat> parse_rat_list(std::string_view text) {
  std::vector<Rat> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw invalid_input("empty entry in coefficient list '" + std::string(text) + "'");
    out.push_back(Rat::parse(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',') flush();
    else cur.push_back(ch);
  }
  if (!cur.empty() || !out.empty()) flush();
  return out;
}

/// "u^2+3u+1", "(3/2)u-1", "1". Highest degree first.
inline std::string format_poly(const PolyQ& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    Rat c = p.coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rat a = neg ? -c : c;
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    std::string mag = a.is_integer() ? a.str() : "(" + a.str() + ")";
    if (k == 0) {
      out += a.str();
      continue;
    }
    if (a != Rat(1)) out += mag;
    out += "u";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

inline std::string format_rational_fn(const RationalFn& f) {
  if (f.is_one()) return "1";
  return "(" + format_poly(f.P()) + ")/(" + format_poly(f.Q()) + ")";
}

/// "1 + 1*u^-1 - 1*u^-2 + ..." (the trailing "..." marks a truncated series).
inline std::string format_series(const SeriesU& s) {
  std::ostringstream os;
  os << "1";
  for (std::size_t r = 1; r <= s.order(); ++r) {
    const Rat& c = s.coeffs()[r];
    if (c.is_zero()) continue;
    os << (c.sign() < 0 ? " - " : " + ") << (c.sign() < 0 ? (-c).str() : c.str()) << "*u^-" << r;
  }
  if (!s.exact()) os << " + ...";
  return os.str();
}

}  // namespace verma
