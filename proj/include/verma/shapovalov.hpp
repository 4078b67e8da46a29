#pragma once

// Weight-space dimensions of the irreducible quotient L(mu(u)) of Y(sl2).
//
// The contravariant pairing uses the anti-involution t12^(r) <-> t21^(r):
//   <m1, m2> = coefficient of 1 in t12^(rk) ... t12^(r1) m2,  m1 = t21^(r1)...t21^(rk) 1.
// Its radical is the maximal submodule, so dim L at level k is the rank of
// the Gram matrix on any set spanning L at that level. With canonical weights
// of degree p the monomials with all indices <= p span L.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "verma/errors.hpp"
#include "verma/exact.hpp"
#include "verma/gl2_verma.hpp"
#include "verma/linalg.hpp"
#include "verma/parallel.hpp"

namespace verma {

inline Rat contravariant_pairing(const Monomial& m1, const Monomial& m2, const VermaModule& mod) {
  if (m1.level() != m2.level()) throw invalid_input("pairing needs monomials of the same level");
  ModuleVector v(m2);
  for (unsigned r : m1.indices()) {
    v = mod.act(Gen::t12, r, v);
    if (v.is_zero()) return Rat(0);
  }
  return v.coeff(Monomial());
}

inline Rat contravariant_pairing(const Monomial& m1, const Monomial& m2, const HighestWeightGL2& hw) {
  return contravariant_pairing(m1, m2, VermaModule(hw));
}

struct GramReport {
  std::size_t level = 0;
  std::size_t spanning_size = 0;
  std::size_t rank = 0;
};

/// Gram matrix of the pairing on `span`; entries filled in parallel, one row per slot.
inline Matrix gram_matrix(const std::vector<Monomial>& span, const VermaModule& mod, unsigned workers = 1) {
  const std::size_t n = span.size();
  std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n));
  parallel_for(n, workers, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = contravariant_pairing(span[i], span[j], mod);
  });
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rows[i][j];
  return g;
}

inline std::vector<GramReport> l_weight_dims(const RationalFn& mu, std::size_t max_level, unsigned workers = 1) {
  const unsigned p = static_cast<unsigned>(mu.degree());
  VermaModule mod(canonical_polynomial_weights(mu), {.memoize = true});
  std::vector<GramReport> out;
  for (std::size_t k = 0; k <= max_level; ++k) {
    std::vector<Monomial> span = monomials_with_bounded_indices(k, p);
    GramReport rep{k, span.size(), 0};
    if (!span.empty()) rep.rank = rank(gram_matrix(span, mod, workers));
    out.push_back(rep);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rational roots

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  if (n > Integer("1000000000000")) throw unsupported_input("coefficient too large for rational root search");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// All roots of p in Q with multiplicity, ascending; unsupported_input unless p splits over Q.
inline std::vector<Rat> rational_roots(const PolyQ& p) {
  if (p.is_zero()) throw invalid_input("the zero polynomial has no root list");
  std::vector<Rat> roots;
  PolyQ rest = p.monic();
  while (rest.degree() > 0 && rest.coeff(0).is_zero()) {
    roots.emplace_back(0);
    rest = PolyQ::divmod(rest, PolyQ::u()).first;
  }
  while (rest.degree() > 0) {
    Integer l = 1;
    for (const Rat& c : rest.coeffs()) {
      Integer d = c.denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    const Integer a0 = (rest.coeff(0) * Rat(l)).numerator();
    const Integer an = (rest.lead() * Rat(l)).numerator();
    bool found = false;
    for (const Integer& num : detail::positive_divisors(a0)) {
      for (const Integer& den : detail::positive_divisors(an)) {
        for (int sgn : {1, -1}) {
          Rat x(sgn * num, den);
          if (!rest(x).is_zero()) continue;
          roots.push_back(x);
          rest = PolyQ::divmod(rest, PolyQ::linear(-x)).first;
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) throw unsupported_input("polynomial does not split into linear factors over Q");
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// Character

struct StringPairing {
  std::vector<std::pair<Rat, Rat>> pairs;  // (alpha_i, beta_i)
  std::size_t l = 0;                       // leading pairs with alpha - beta in Z_{>=0}
};

inline bool is_nonneg_integer(const Rat& x) { return x.is_integer() && x.sign() >= 0; }

/// Greedy renumbering: position i takes, among the remaining alphas and betas,
/// a pair whose difference is the least nonnegative integer; ties go to the
/// larger alpha. Once no remaining difference is a nonnegative integer the
/// leftover pairs keep their input order.
inline StringPairing reorder_strings(std::vector<Rat> alphas, std::vector<Rat> betas) {
  if (alphas.size() != betas.size()) throw invalid_input("alphas and betas must have equal length");
  StringPairing out;
  while (!alphas.empty()) {
    std::size_t bp = alphas.size(), bq = 0;
    for (std::size_t p = 0; p < alphas.size(); ++p)
      for (std::size_t q = 0; q < betas.size(); ++q) {
        Rat diff = alphas[p] - betas[q];
        if (!is_nonneg_integer(diff)) continue;
        if (bp == alphas.size()) {
          bp = p, bq = q;
          continue;
        }
        Rat best = alphas[bp] - betas[bq];
        if (diff < best || (diff == best && alphas[p] > alphas[bp])) bp = p, bq = q;
      }
    if (bp == alphas.size()) break;
    out.pairs.emplace_back(alphas[bp], betas[bq]);
    alphas.erase(alphas.begin() + static_cast<long>(bp));
    betas.erase(betas.begin() + static_cast<long>(bq));
    ++out.l;
  }
  for (std::size_t i = 0; i < alphas.size(); ++i) out.pairs.emplace_back(alphas[i], betas[i]);
  return out;
}

inline const char* reorder_tie_break() { return "least difference, then larger alpha"; }

struct CharacterResult {
  std::vector<Rat> alphas;  // after renumbering
  std::vector<Rat> betas;
  std::size_t l = 0;
  std::vector<Integer> dims;  // dims[k] = dim L at weight mu^(0) - 2k
};

/// dims[k] = [y^k] prod_{i<=l} (1 + y + ... + y^(alpha_i - beta_i)) * (1 - y)^-(p - l).
inline CharacterResult character_formula(const RationalFn& mu, std::size_t max_level) {
  CharacterResult res;
  std::vector<Rat> alphas, betas;
  for (const Rat& x : rational_roots(mu.P())) alphas.push_back(-x);
  for (const Rat& x : rational_roots(mu.Q())) betas.push_back(-x);
  StringPairing sp = reorder_strings(alphas, betas);
  res.l = sp.l;
  for (const auto& [a, b] : sp.pairs) {
    res.alphas.push_back(a);
    res.betas.push_back(b);
  }
  std::vector<Integer> c(max_level + 1);
  c[0] = 1;
  for (std::size_t i = 0; i < res.l; ++i) {
    const Integer n = (res.alphas[i] - res.betas[i]).numerator();
    std::vector<Integer> next(max_level + 1);
    for (std::size_t k = 0; k <= max_level; ++k)
      for (std::size_t j = 0; j <= k && Integer(static_cast<unsigned long>(j)) <= n; ++j) next[k] += c[k - j];
    c = std::move(next);
  }
  for (std::size_t i = res.l; i < res.alphas.size(); ++i)
    for (std::size_t k = 1; k <= max_level; ++k) c[k] += c[k - 1];
  res.dims = std::move(c);
  return res;
}

}  // namespace verma
