#pragma once

// Linear recurrences with constant coefficients in a coefficient tail, and the
// rational function they force.
//
// A tail nu_1, nu_2, ... satisfies a recurrence of order d from N on when
//
//   c_0 nu_r + c_1 nu_{r+1} + ... + c_d nu_{r+d} = 0   for all r >= N.
//
// With C(u) = sum c_j u^j this says C(u) nu(u) has no u^-r terms for r >= N,
// so u^(N-1) C(u) nu(u) is a polynomial G(u) and
//
//   mu(u) = 1 + nu(u) = (u^(N-1) C(u) + G(u)) / (u^(N-1) C(u)).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "verma/errors.hpp"
#include "verma/exact.hpp"
#include "verma/linalg.hpp"

namespace verma {

struct RecurrenceWitness {
  std::vector<Rat> c;  // c_0 .. c_d, last entry 1
  std::size_t N = 1;   // first index r at which the relation holds
  RationalFn recovered;

  std::size_t order() const { return c.size() - 1; }
};

/// Coefficient matrix of the order-d relations at r = N .. length-d (1-based tail).
inline Matrix hankel_system(const std::vector<Rat>& tail, std::size_t d, std::size_t N) {
  const std::size_t L = tail.size();
  Matrix m(L + 1 - d - N, d + 1);
  for (std::size_t r = N; r + d <= L; ++r)
    for (std::size_t j = 0; j <= d; ++j) m(r - N, j) = tail[r + j - 1];
  return m;
}

/// Whether c_0 nu_r + ... + c_d nu_{r+d} = 0 for every r >= N the tail covers.
inline bool recurrence_holds(const std::vector<Rat>& tail, const std::vector<Rat>& c, std::size_t N) {
  const std::size_t d = c.size() - 1;
  for (std::size_t r = N; r + d <= tail.size(); ++r) {
    Rat acc(0);
    for (std::size_t j = 0; j <= d; ++j) acc += c[j] * tail[r + j - 1];
    if (!acc.is_zero()) return false;
  }
  return true;
}

/// The rational function generated by a recurrence (c, N) and the first N-1+d tail entries.
inline RationalFn rational_from_recurrence(const std::vector<Rat>& tail, const std::vector<Rat>& c,
                                           std::size_t N) {
  const std::size_t d = c.size() - 1;
  if (tail.size() + 1 < N + d) throw insufficient_data("recurrence needs the first N-1+d tail entries");
  // Q = u^(N-1) C(u); G = polynomial part of Q(u) nu(u).
  std::vector<Rat> q(N - 1 + d + 1);
  for (std::size_t j = 0; j <= d; ++j) q[N - 1 + j] = c[j];
  std::vector<Rat> g(N - 1 + d);
  for (std::size_t k = 0; k < g.size(); ++k)
    for (std::size_t e = k + 1; e < q.size(); ++e) g[k] += q[e] * tail[e - k - 1];
  PolyQ Q(q);
  return RationalFn(Q + PolyQ(g), Q);
}

/// Rebuilds P/Q from a witness; alias of rational_from_recurrence on the witness data.
inline RationalFn reconstruct_rational(const std::vector<Rat>& tail, const RecurrenceWitness& w) {
  return rational_from_recurrence(tail, w.c, w.N);
}

/// Whether 1 + sum tail[r-1] u^-r agrees with the expansion of f through the tail length.
inline bool reproduces(const RationalFn& f, const std::vector<Rat>& tail) {
  SeriesU s = expand_rational(f, tail.size());
  for (std::size_t r = 1; r <= tail.size(); ++r)
    if (s[r] != tail[r - 1]) return false;
  return true;
}

/// Minimal-order recurrence of order <= max_order supported by at least
/// max_order + 2 relations, smallest start N first. The returned witness holds
/// on the whole tail and its rational function reproduces the whole tail.
inline std::optional<RecurrenceWitness> detect_recurrence(const std::vector<Rat>& tail,
                                                          std::size_t max_order) {
  const std::size_t L = tail.size();
  if (L < 2 * max_order + 2)
    throw insufficient_data("recurrence detection up to order " + std::to_string(max_order) +
                            " needs at least " + std::to_string(2 * max_order + 2) + " coefficients, got " +
                            std::to_string(L));
  const std::size_t max_start = std::max<std::size_t>(1, L / 3);
  for (std::size_t d = 0; d <= max_order; ++d) {
    for (std::size_t N = 1; N <= max_start; ++N) {
      if (L + 1 < d + N + max_order + 2) break;  // fewer than max_order + 2 relations
      auto ns = nullspace(hankel_system(tail, d, N));
      if (ns.empty()) continue;
      std::vector<Rat> c = ns.front();
      std::size_t last = c.size();
      while (last > 0 && c[last - 1].is_zero()) --last;
      c.resize(last);
      const Rat lead = c.back();
      for (auto& x : c) x /= lead;
      if (!recurrence_holds(tail, c, N)) continue;
      RationalFn f = rational_from_recurrence(tail, c, N);
      if (!reproduces(f, tail)) continue;
      return RecurrenceWitness{std::move(c), N, std::move(f)};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verdict

enum class RationalityKind { rational, no_recurrence_up_to, insufficient_data };

inline std::string to_string(RationalityKind k) {
  switch (k) {
    case RationalityKind::rational: return "rational";
    case RationalityKind::no_recurrence_up_to: return "no_recurrence_up_to";
    case RationalityKind::insufficient_data: return "insufficient_data";
  }
  return "";
}

struct RationalityVerdict {
  RationalityKind kind = RationalityKind::insufficient_data;
  std::size_t budget = 0;
  std::optional<RationalFn> rational;
  std::optional<RecurrenceWitness> witness;
  std::string detail;
};

using WeightInput = std::variant<RationalFn, SeriesU>;

/// Tail of a series as data: coefficients 1..order.
inline std::vector<Rat> series_tail(const SeriesU& s) {
  return {s.coeffs().begin() + 1, s.coeffs().end()};
}

/// An exact series is a polynomial in u^-1: u^-n (u^n + c_1 u^(n-1) + ... + c_n).
inline RationalFn polynomial_series_as_rational(const SeriesU& s) {
  std::vector<Rat> p = s.coeffs();
  std::reverse(p.begin(), p.end());
  std::vector<Rat> q(p.size());
  q.back() = Rat(1);
  return RationalFn(PolyQ(p), PolyQ(q));
}

inline RationalityVerdict is_rational_verdict(const WeightInput& mu, std::size_t budget) {
  RationalityVerdict v;
  v.budget = budget;
  if (const auto* f = std::get_if<RationalFn>(&mu)) {
    v.kind = RationalityKind::rational;
    v.rational = *f;
    return v;
  }
  const SeriesU& s = std::get<SeriesU>(mu);
  if (s.exact()) {
    v.kind = RationalityKind::rational;
    v.rational = polynomial_series_as_rational(s);
    return v;
  }
  try {
    auto w = detect_recurrence(series_tail(s), budget);
    if (w) {
      v.kind = RationalityKind::rational;
      v.rational = w->recovered;
      v.witness = std::move(w);
    } else {
      v.kind = RationalityKind::no_recurrence_up_to;
    }
  } catch (const insufficient_data& e) {
    v.kind = RationalityKind::insufficient_data;
    v.detail = e.what();
  }
  return v;
}

}  // namespace verma
