#pragma once

// Singular vectors (e(u) zeta = 0) in M(mu(u)) over Y(sl2).
//
// The module is realized as M(lambda1, lambda2) over Y(gl2) with
// lambda1 / lambda2 = mu: canonical polynomial weights for a rational mu,
// (mu, 1) for a series. Candidates are ordered products
// f^(r1) ... f^(rk) 1 with r1 <= ... <= rk and r1 + ... + rk <= D.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "verma/errors.hpp"
#include "verma/exact.hpp"
#include "verma/gl2_verma.hpp"
#include "verma/linalg.hpp"
#include "verma/parallel.hpp"
#include "verma/recurrence.hpp"
#include "verma/sl2_gauss.hpp"

namespace verma {

/// Non-decreasing Drinfeld indices of f^(r1) ... f^(rk) 1 (entries may be 0).
using FMonomial = std::vector<unsigned>;

/// A vector written as a combination of f-monomials applied to 1.
using FCombination = std::vector<std::pair<FMonomial, Rat>>;

inline std::vector<FMonomial> f_monomials(std::size_t level, unsigned max_sum) {
  std::vector<FMonomial> out;
  FMonomial cur;
  auto rec = [&](auto&& self, unsigned lo, unsigned budget) -> void {
    if (cur.size() == level) {
      out.push_back(cur);
      return;
    }
    const std::size_t left = level - cur.size();
    for (unsigned r = lo; static_cast<std::size_t>(r) * left <= budget; ++r) {
      cur.push_back(r);
      self(self, r, budget - r);
      cur.pop_back();
    }
  };
  rec(rec, 0, max_sum);
  return out;
}

/// Module realization used for mu: canonical weights for P/Q, (mu, 1) for a series.
inline HighestWeightGL2 realization(const WeightInput& mu) {
  if (const auto* f = std::get_if<RationalFn>(&mu)) return canonical_polynomial_weights(*f);
  return {std::get<SeriesU>(mu), SeriesU()};
}

struct SingularOptions {
  unsigned workers = 1;
  std::size_t candidate_cap = 5000;
  unsigned max_increments = 8;
};

struct SingularSearchResult {
  std::size_t level = 0;
  unsigned degree_bound = 0;
  unsigned relation_bound = 0;
  bool stabilized = false;
  std::vector<FMonomial> candidates;
  std::vector<FCombination> f_basis;  // in f-monomials
  std::vector<ModuleVector> basis;    // the same vectors in t21-monomials
};

namespace detail {

// e^(r) applied to each candidate, r = 0..R; slot c holds candidate c.
inline std::vector<std::vector<ModuleVector>> e_images(const VermaModule& mod,
                                                       const std::vector<ModuleVector>& cand, unsigned R,
                                                       unsigned workers) {
  std::vector<std::vector<ModuleVector>> out(cand.size());
  parallel_for(cand.size(), workers, [&](std::size_t c) { out[c] = e_coeffs(mod, cand[c], R); });
  return out;
}

inline std::vector<std::vector<Rat>> annihilator(const std::vector<std::vector<ModuleVector>>& images,
                                                 std::size_t ncand) {
  std::map<std::pair<unsigned, Monomial>, std::size_t> row_of;
  for (const auto& per_c : images)
    for (unsigned r = 0; r < per_c.size(); ++r)
      for (const auto& [m, x] : per_c[r].terms()) row_of.emplace(std::pair{r, m}, 0);
  std::size_t i = 0;
  for (auto& [key, idx] : row_of) idx = i++;
  Matrix a(row_of.size(), ncand);
  for (std::size_t c = 0; c < images.size(); ++c)
    for (unsigned r = 0; r < images[c].size(); ++r)
      for (const auto& [m, x] : images[c][r].terms()) a(row_of.at({r, m}), c) = x;
  return nullspace(a);
}

}  // namespace detail

/// Exact solution space of e^(r) zeta = 0, r = 0..R, over the level-`level`
/// candidates of f-degree <= D. R starts at D + level + 1 and grows until the
/// space is unchanged over two increments or is empty. Missing weight data at
/// the starting bound raises insufficient_data; at a later bound the search
/// stops with stabilized = false.
inline SingularSearchResult find_singular(const WeightInput& mu, std::size_t level, long degree_bound,
                                          const SingularOptions& opts = {}) {
  if (level == 0) throw invalid_input("singular vector search needs level >= 1");
  if (degree_bound < 0) throw invalid_input("degree bound must be nonnegative");
  SingularSearchResult res;
  res.level = level;
  res.degree_bound = static_cast<unsigned>(degree_bound);
  res.candidates = f_monomials(level, res.degree_bound);
  if (res.candidates.size() > opts.candidate_cap)
    throw unsupported_input("candidate space of " + std::to_string(res.candidates.size()) +
                            " monomials exceeds the cap of " + std::to_string(opts.candidate_cap));

  VermaModule mod(realization(mu), {.memoize = true});
  std::vector<ModuleVector> cand(res.candidates.size());
  try {
    parallel_for(cand.size(), opts.workers,
                 [&](std::size_t c) { cand[c] = f_monomial_vector(mod, res.candidates[c]); });
  } catch (const truncation_error& e) {
    throw insufficient_data(std::string("weight series too short for the candidate space: ") + e.what());
  }

  unsigned R = res.degree_bound + static_cast<unsigned>(level) + 1;
  std::vector<std::vector<Rat>> ns;
  try {
    ns = detail::annihilator(detail::e_images(mod, cand, R, opts.workers), cand.size());
  } catch (const truncation_error& e) {
    throw insufficient_data("weight series too short for relation bound " + std::to_string(R) + ": " +
                            e.what());
  }
  res.relation_bound = R;
  res.stabilized = ns.empty();
  unsigned unchanged = 0;
  for (unsigned inc = 0; !res.stabilized && inc < opts.max_increments; ++inc) {
    std::vector<std::vector<Rat>> next;
    try {
      next = detail::annihilator(detail::e_images(mod, cand, R + 1, opts.workers), cand.size());
    } catch (const truncation_error&) {
      break;
    }
    ++R;
    res.relation_bound = R;
    unchanged = next.size() == ns.size() ? unchanged + 1 : 0;
    ns = std::move(next);
    if (ns.empty() || unchanged == 2) res.stabilized = true;
  }

  for (const auto& x : ns) {
    FCombination fc;
    ModuleVector v;
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (x[c].is_zero()) continue;
      fc.emplace_back(res.candidates[c], x[c]);
      v.add_scaled(cand[c], x[c]);
    }
    res.f_basis.push_back(std::move(fc));
    res.basis.push_back(std::move(v));
  }
  return res;
}

/// True iff e^(r) zeta = 0 for 0 <= r <= rmax.
inline bool verify_singular(const ModuleVector& zeta, const VermaModule& mod, unsigned rmax) {
  if (zeta.is_zero()) return true;
  for (const auto& v : e_coeffs(mod, zeta, rmax))
    if (!v.is_zero()) return false;
  return true;
}

inline bool verify_singular(const ModuleVector& zeta, const WeightInput& mu, unsigned rmax) {
  return verify_singular(zeta, VermaModule(realization(mu)), rmax);
}

// ---------------------------------------------------------------------------
// Explicit singular vectors of a rational weight

struct TwistedSingular {
  std::vector<Rat> f_coeffs;  // c_0 .. c_s with c_s = 1: zeta = sum c_j f^(j) 1
  ModuleVector vector;        // zeta in t21-monomials of the chosen realization
};

/// Rewrites sum_b x_b t21^(b) 1 (b = 1..n) as sum_j c_j f^(j) 1 using
/// f^(j) 1 = sum_b psi_{j+1-b} t21^(b) 1 with psi = lambda2^-1.
inline std::vector<Rat> level_one_f_coeffs(const std::vector<Rat>& x, const SeriesU& lambda2) {
  const std::size_t n = x.size();
  SeriesU psi = series_inverse(lambda2, n);
  std::vector<Rat> rest = x, c(n);
  for (std::size_t j = n; j-- > 0;) {
    c[j] = rest[j];  // only f^(j') with j' >= j reach t21^(j+1); psi_0 = 1
    for (std::size_t b = 0; b <= j; ++b) rest[b] -= c[j] * psi[j - b];
  }
  return c;
}

/// zeta = twist of t21^(s+1) 1 into the realization hw of mu = P/Q, written in
/// f-monomials; its leading coefficient is 1.
inline TwistedSingular twisted_singular_vector(const RationalFn& mu, unsigned s, const HighestWeightGL2& hw) {
  const std::size_t p = mu.degree();
  if (s < p) throw invalid_input("explicit singular vector needs s >= deg P = " + std::to_string(p));
  // phi = lambda2^-1 u^-p Q, so phi lambda2 is the canonical polynomial weight.
  SeriesU phi = series_mul(series_inverse(hw.lambda2, s + 1), SeriesU(reversed_coeffs(mu.Q()), true));
  std::vector<Rat> x(s + 1);
  for (std::size_t j = 0; j <= s; ++j) x[s - j] = phi[j];  // phi_j t21^(s+1-j)
  TwistedSingular out;
  out.f_coeffs = level_one_f_coeffs(x, hw.lambda2);
  for (std::size_t b = 0; b <= s; ++b)
    if (!x[b].is_zero()) out.vector.add(Monomial({static_cast<unsigned>(b + 1)}), x[b]);
  return out;
}

inline TwistedSingular twisted_singular_vector(const RationalFn& mu, unsigned s) {
  return twisted_singular_vector(mu, s, canonical_polynomial_weights(mu));
}

}  // namespace verma
