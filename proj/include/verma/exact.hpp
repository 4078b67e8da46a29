#pragma once

/**
 * @file exact.hpp
 * @brief Exact scalars, dense univariate polynomials and truncated series in u^-1.
 *
 * Rat is a thin value wrapper over GMP's mpq_class that keeps the canonical
 * form (lowest terms, positive denominator, zero as 0/1) and sidesteps the
 * gmpxx expression templates. PolyQ stores coefficients lowest degree first.
 * SeriesU stores 1 + a_1 u^-1 + ... + a_n u^-n together with a flag saying
 * whether every coefficient beyond n is known to vanish.
 */

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "verma/errors.hpp"

namespace verma {

using Integer = mpz_class;

class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT: implicit by design of numeric literals
  Rat(int v) : q_(v) {}   // NOLINT
  Rat(const Integer& num) : q_(num) {}  // NOLINT
  Rat(const Integer& num, const Integer& den) {
    if (den == 0) throw invalid_input("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rat(long num, long den) : Rat(Integer(num), Integer(den)) {}
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "-3/2", "7", "0/5". Whitespace is not accepted.
  static Rat parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw invalid_input("empty rational literal");
    auto valid_int = [](std::string_view t) {
      std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
      if (i >= t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
      throw invalid_input("malformed rational literal '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    return Rat(Integer(num), Integer(den));
  }

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  std::string str() const { return q_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw invalid_input("division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

inline Rat pow(Rat base, unsigned long e) {
  Rat out(1);
  while (e) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// ---------------------------------------------------------------------------
// PolyQ

class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(Rat c) { if (!c.is_zero()) c_.push_back(std::move(c)); }  // NOLINT
  explicit PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// The polynomial u.
  static PolyQ u() { return PolyQ(std::vector<Rat>{Rat(0), Rat(1)}); }
  /// u + c
  static PolyQ linear(const Rat& c) { return PolyQ(std::vector<Rat>{c, Rat(1)}); }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == Rat(1); }
  bool is_monic() const { return !c_.empty() && c_.back() == Rat(1); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  PolyQ monic() const {
    if (c_.empty()) throw invalid_input("zero polynomial has no monic form");
    PolyQ out = *this;
    Rat l = lead();
    for (auto& x : out.c_) x /= l;
    return out;
  }

  /// p(u + c), by Horner's scheme over the linear polynomial.
  PolyQ shifted(const Rat& c) const {
    PolyQ acc;
    PolyQ lin = linear(c);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + PolyQ(*it);
    return acc;
  }

  PolyQ operator-() const {
    PolyQ out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }
  PolyQ& operator+=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  PolyQ& operator-=(const PolyQ& o) { return *this += -o; }
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return PolyQ(std::move(out));
  }
  PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }

  /// Euclidean division; returns (quotient, remainder).
  static std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw invalid_input("polynomial division by zero");
    PolyQ rem = a;
    std::vector<Rat> quot(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
      Rat f = rem.lead() / b.lead();
      quot[shift] = f;
      std::vector<Rat> sub(shift + b.c_.size());
      for (std::size_t i = 0; i < b.c_.size(); ++i) sub[shift + i] = f * b.c_[i];
      rem -= PolyQ(std::move(sub));
    }
    return {PolyQ(std::move(quot)), std::move(rem)};
  }

  /// Monic gcd; gcd(0, 0) = 0.
  static PolyQ gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
      PolyQ r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
  }

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// ---------------------------------------------------------------------------
// SeriesU

/// 1 + a_1 u^-1 + a_2 u^-2 + ... known through `order`; when `exact` every
/// coefficient past `order` is zero, otherwise reading past it is a truncation error.
class SeriesU {
 public:
  SeriesU() : c_{Rat(1)}, exact_(true) {}

  /// coeffs[0] must be 1.
  SeriesU(std::vector<Rat> coeffs, bool exact) : c_(std::move(coeffs)), exact_(exact) {
    if (c_.empty() || c_[0] != Rat(1))
      throw invalid_input("series in u^-1 must have constant term 1");
    if (exact_) {
      while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
    }
  }

  /// Builds 1 + t_1 u^-1 + ... + t_n u^-n from the tail t_1..t_n.
  static SeriesU from_tail(const std::vector<Rat>& tail, bool exact) {
    std::vector<Rat> c{Rat(1)};
    c.insert(c.end(), tail.begin(), tail.end());
    return SeriesU(std::move(c), exact);
  }

  /// 1 + u^-k (exact).
  static SeriesU one_plus_power(std::size_t k) {
    std::vector<Rat> c(k + 1);
    c[0] = Rat(1);
    c[k] += Rat(1);
    return SeriesU(std::move(c), true);
  }

  std::size_t order() const { return c_.size() - 1; }
  bool exact() const { return exact_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  /// Coefficient of u^-r.
  Rat operator[](std::size_t r) const {
    if (r < c_.size()) return c_[r];
    if (exact_) return Rat(0);
    throw truncation_error(r, order());
  }

  /// Whether coefficient r can be read without a truncation error.
  bool known(std::size_t r) const { return exact_ || r < c_.size(); }

  bool is_one() const { return exact_ && c_.size() == 1; }

  /// Forget everything past `n` (result is never exact unless it was and n covers it).
  SeriesU truncated(std::size_t n) const {
    if (exact_ && n >= order()) return *this;
    std::vector<Rat> c;
    c.reserve(n + 1);
    for (std::size_t r = 0; r <= n; ++r) c.push_back((*this)[r]);
    return SeriesU(std::move(c), false);
  }

  /// Equality of the known data: same exactness, same coefficients through the common order.
  friend bool operator==(const SeriesU& a, const SeriesU& b) {
    return a.exact_ == b.exact_ && a.c_ == b.c_;
  }

 private:
  std::vector<Rat> c_;
  bool exact_;
};

/// Truncated Cauchy product. Non-exact operands bound the trustworthy order.
inline SeriesU series_mul(const SeriesU& a, const SeriesU& b) {
  std::size_t order;
  if (a.exact() && b.exact())
    order = a.order() + b.order();
  else if (a.exact())
    order = b.order();
  else if (b.exact())
    order = a.order();
  else
    order = std::min(a.order(), b.order());
  std::vector<Rat> c(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    std::size_t lo = b.exact() ? (m > b.order() ? m - b.order() : 0) : 0;
    std::size_t hi = a.exact() ? std::min(m, a.order()) : m;
    for (std::size_t i = lo; i <= hi; ++i) c[m] += a[i] * b[m - i];
  }
  return SeriesU(std::move(c), a.exact() && b.exact());
}

/// Multiplicative inverse. Exact input other than 1 gives an infinite series,
/// so `order` must then be supplied; for non-exact input it defaults to a.order().
inline SeriesU series_inverse(const SeriesU& a, std::optional<std::size_t> order = std::nullopt) {
  if (a.is_one()) return a;
  std::size_t n;
  if (order)
    n = a.exact() ? *order : std::min(*order, a.order());
  else if (!a.exact())
    n = a.order();
  else
    throw invalid_input("inverse of an exact non-constant series needs an explicit order");
  std::vector<Rat> b(n + 1);
  b[0] = Rat(1);
  for (std::size_t r = 1; r <= n; ++r) {
    Rat acc(0);
    std::size_t top = a.exact() ? std::min(r, a.order()) : r;
    for (std::size_t c = 1; c <= top; ++c) acc += a[c] * b[r - c];
    b[r] = -acc;
  }
  return SeriesU(std::move(b), false);
}

/// Expansion of a(u + c) in u^-1. Uses (u+c)^-k = sum_j binom(-k, j) c^j u^{-k-j}.
/// Exact input with c != 0 has an infinite expansion, so `order` is then required.
inline SeriesU series_shift_argument(const SeriesU& a, const Rat& c,
                                     std::optional<std::size_t> order = std::nullopt) {
  if (c.is_zero() || a.is_one()) return a;
  std::size_t n;
  if (order)
    n = a.exact() ? *order : std::min(*order, a.order());
  else if (!a.exact())
    n = a.order();
  else
    throw invalid_input("shift of an exact non-constant series needs an explicit order");
  std::vector<Rat> powers(n + 1);
  powers[0] = Rat(1);
  for (std::size_t j = 1; j <= n; ++j) powers[j] = powers[j - 1] * c;
  std::vector<Rat> out(n + 1);
  out[0] = Rat(1);
  for (std::size_t m = 1; m <= n; ++m) {
    std::size_t top = a.exact() ? std::min(m, a.order()) : m;
    for (std::size_t k = 1; k <= top; ++k) {
      std::size_t j = m - k;
      // binom(-k, j) = (-1)^j binom(k + j - 1, j)
      Rat w(binomial(k + j - 1, j));
      if (j % 2 == 1) w = -w;
      out[m] += a[k] * w * powers[j];
    }
  }
  return SeriesU(std::move(out), false);
}

/// Coefficients of u^-m in (u + c)^-k for m = 0..n (zero for m < k).
inline std::vector<Rat> shifted_power_weights(std::size_t k, const Rat& c, std::size_t n) {
  std::vector<Rat> w(n + 1);
  if (k == 0) {
    w[0] = Rat(1);
    return w;
  }
  SeriesU s = series_shift_argument(SeriesU::one_plus_power(k), c, n);
  for (std::size_t m = 1; m <= n; ++m) w[m] = s[m];
  return w;
}

// ---------------------------------------------------------------------------
// RationalFn

/// P(u)/Q(u) with P, Q monic, coprime, of equal degree.
class RationalFn {
 public:
  RationalFn() : p_(Rat(1)), q_(Rat(1)) {}

  /// Reduces and normalizes num/den; the quotient must tend to 1 at infinity.
  RationalFn(const PolyQ& num, const PolyQ& den) {
    if (num.is_zero() || den.is_zero())
      throw invalid_input("rational highest weight needs nonzero numerator and denominator");
    if (num.degree() != den.degree() || num.lead() != den.lead())
      throw invalid_input("rational highest weight must tend to 1 at u = infinity");
    PolyQ g = PolyQ::gcd(num, den);
    p_ = PolyQ::divmod(num, g).first.monic();
    q_ = PolyQ::divmod(den, g).first.monic();
  }

  const PolyQ& P() const { return p_; }
  const PolyQ& Q() const { return q_; }
  std::size_t degree() const { return static_cast<std::size_t>(p_.degree()); }
  bool is_one() const { return p_.is_one() && q_.is_one(); }

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  PolyQ p_;
  PolyQ q_;
};

/// Reverse coefficients: x^d p(1/x) for d = deg p; for monic p the constant term is 1.
inline std::vector<Rat> reversed_coeffs(const PolyQ& p) {
  std::vector<Rat> c = p.coeffs();
  std::reverse(c.begin(), c.end());
  return c;
}

/// Laurent expansion of P(u)/Q(u) at u = infinity through u^-order.
inline SeriesU expand_rational(const RationalFn& f, std::size_t order) {
  if (f.Q().is_one()) return SeriesU();  // then P = 1 as well
  std::vector<Rat> pt = reversed_coeffs(f.P());
  std::vector<Rat> qt = reversed_coeffs(f.Q());
  std::vector<Rat> s(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    Rat acc = m < pt.size() ? pt[m] : Rat(0);
    for (std::size_t j = 1; j <= std::min(m, qt.size() - 1); ++j) acc -= qt[j] * s[m - j];
    s[m] = acc;
  }
  return SeriesU(std::move(s), false);
}

}  // namespace verma
