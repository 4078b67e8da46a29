#pragma once

/**
 * @file gl2_verma.hpp
 * @brief The Verma module M(lambda1(u), lambda2(u)) over Y(gl2) on its monomial basis.
 *
 * Basis vectors are t21^(r1) ... t21^(rk) 1 with 1 <= r1 <= ... <= rk. The
 * t21 generators commute, so a basis vector is just the sorted index list.
 * The other generators act by peeling off the leftmost t21 factor:
 *
 *   X t21^(s) w = t21^(s) X w + [X, t21^(s)] w
 *
 * with the commutators taken from the RTT relation
 *
 *   [t_ij^(r), t_kl^(s)] = sum_{a=1}^{min(r,s)} ( t_kj^(a-1) t_il^(r+s-a) - t_kj^(r+s-a) t_il^(a-1) ),
 *   t_ij^(0) = delta_ij,
 *
 * written so that every product on the right either starts with a t21
 * (insertion) or only involves t11 and t22 acting on the shorter word w.
 * Recursion therefore always descends in level and ends at the highest
 * vector, where t11^(r) 1 = lambda1^(r) 1, t22^(r) 1 = lambda2^(r) 1 and
 * t12^(r) 1 = 0.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "verma/errors.hpp"
#include "verma/exact.hpp"

namespace verma {

// ---------------------------------------------------------------------------
// Monomial

/// t21^(r1) ... t21^(rk) 1_lambda, stored as the sorted index sequence.
class Monomial {
 public:
  Monomial() = default;
  /// Indices are sorted on construction; every index must be >= 1.
  explicit Monomial(std::vector<unsigned> indices) : idx_(std::move(indices)) {
    for (unsigned r : idx_)
      if (r == 0) throw invalid_input("t21 monomial indices must be positive");
    std::sort(idx_.begin(), idx_.end());
  }

  const std::vector<unsigned>& indices() const { return idx_; }
  std::size_t level() const { return idx_.size(); }
  unsigned degree() const {
    unsigned d = 0;
    for (unsigned r : idx_) d += r;
    return d;
  }
  bool is_highest() const { return idx_.empty(); }

  /// t21^(r) * this.
  Monomial inserted(unsigned r) const {
    Monomial m;
    m.idx_.reserve(idx_.size() + 1);
    auto pos = std::upper_bound(idx_.begin(), idx_.end(), r);
    m.idx_.insert(m.idx_.end(), idx_.begin(), pos);
    m.idx_.push_back(r);
    m.idx_.insert(m.idx_.end(), pos, idx_.end());
    return m;
  }

  /// Drops the leftmost (smallest) factor.
  Monomial tail() const {
    Monomial m;
    m.idx_.assign(idx_.begin() + 1, idx_.end());
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    if (a.idx_.size() != b.idx_.size()) return a.idx_.size() <=> b.idx_.size();
    return a.idx_ <=> b.idx_;
  }

 private:
  std::vector<unsigned> idx_;
};

/// All monomials of the given level with degree <= max_degree, in basis order.
inline std::vector<Monomial> monomials_of_level(std::size_t level, unsigned max_degree) {
  std::vector<Monomial> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned lo, unsigned budget) -> void {
    if (cur.size() == level) {
      out.emplace_back(cur);
      return;
    }
    std::size_t left = level - cur.size();
    for (unsigned r = lo; r * left <= budget; ++r) {
      cur.push_back(r);
      self(self, r, budget - r);
      cur.pop_back();
    }
  };
  rec(rec, 1, max_degree);
  return out;
}

/// Monomials of the given level whose indices all lie in {1..max_index}.
inline std::vector<Monomial> monomials_with_bounded_indices(std::size_t level, unsigned max_index) {
  std::vector<Monomial> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned lo) -> void {
    if (cur.size() == level) {
      out.emplace_back(cur);
      return;
    }
    for (unsigned r = lo; r <= max_index; ++r) {
      cur.push_back(r);
      self(self, r);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// ---------------------------------------------------------------------------
// ModuleVector

/// Finite linear combination of basis monomials with nonzero rational coefficients.
class ModuleVector {
 public:
  using Terms = std::map<Monomial, Rat>;

  ModuleVector() = default;
  ModuleVector(const Monomial& m, Rat c = Rat(1)) { add(m, std::move(c)); }  // NOLINT

  static ModuleVector highest() { return ModuleVector(Monomial()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rat coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add(const Monomial& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_scaled(const ModuleVector& v, const Rat& c) {
    if (c.is_zero()) return;
    for (const auto& [m, x] : v.terms_) add(m, x * c);
  }

  ModuleVector& operator+=(const ModuleVector& v) {
    for (const auto& [m, x] : v.terms_) add(m, x);
    return *this;
  }
  ModuleVector& operator-=(const ModuleVector& v) {
    for (const auto& [m, x] : v.terms_) add(m, -x);
    return *this;
  }
  ModuleVector& operator*=(const Rat& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
  }
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(ModuleVector a, const Rat& c) { return a *= c; }
  friend ModuleVector operator*(const Rat& c, ModuleVector a) { return a *= c; }

  /// Levels present in the vector.
  std::vector<std::size_t> levels() const {
    std::vector<std::size_t> out;
    for (const auto& [m, x] : terms_)
      if (out.empty() || out.back() != m.level()) out.push_back(m.level());
    return out;
  }

  unsigned max_degree() const {
    unsigned d = 0;
    for (const auto& [m, x] : terms_) d = std::max(d, m.degree());
    return d;
  }

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  Terms terms_;
};

// ---------------------------------------------------------------------------
// Highest weights and generators

struct HighestWeightGL2 {
  SeriesU lambda1;
  SeriesU lambda2;

  friend bool operator==(const HighestWeightGL2&, const HighestWeightGL2&) = default;
};

enum class Gen { t11, t12, t21, t22 };

inline Gen gen(int i, int j) {
  if (i == 1 && j == 1) return Gen::t11;
  if (i == 1 && j == 2) return Gen::t12;
  if (i == 2 && j == 1) return Gen::t21;
  if (i == 2 && j == 2) return Gen::t22;
  throw invalid_input("generator indices must be 1 or 2");
}

inline std::pair<int, int> gen_indices(Gen g) {
  switch (g) {
    case Gen::t11: return {1, 1};
    case Gen::t12: return {1, 2};
    case Gen::t21: return {2, 1};
    case Gen::t22: return {2, 2};
  }
  return {0, 0};
}

inline bool is_diagonal(Gen g) { return g == Gen::t11 || g == Gen::t22; }

inline std::string gen_name(Gen g) {
  auto [i, j] = gen_indices(g);
  return "t" + std::to_string(i) + std::to_string(j);
}

/// One factor t_ij^(r) of a word. r = 0 denotes the scalar delta_ij.
struct Letter {
  Gen g;
  unsigned r;
};

struct ActionOptions {
  bool memoize = false;
  /// Flips the sign of every commutator term. Only for mutation testing.
  bool inject_sign_flip = false;
};

// ---------------------------------------------------------------------------
// VermaModule

class VermaModule {
 public:
  explicit VermaModule(HighestWeightGL2 hw, ActionOptions opts = {})
      : hw_(std::move(hw)), opts_(opts) {}

  const HighestWeightGL2& weight() const { return hw_; }
  const ActionOptions& options() const { return opts_; }

  /// t_g^(r) applied to a basis monomial.
  ModuleVector act(Gen g, unsigned r, const Monomial& m) const {
    if (r == 0) return is_diagonal(g) ? ModuleVector(m) : ModuleVector();
    if (g == Gen::t21) return ModuleVector(m.inserted(r));
    if (!opts_.memoize) return compute(g, r, m);
    Key key{g, r, m};
    {
      std::lock_guard lock(cache_mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    ModuleVector out = compute(g, r, m);
    std::lock_guard lock(cache_mutex_);
    cache_.emplace(std::move(key), out);
    return out;
  }

  ModuleVector act(Gen g, unsigned r, const ModuleVector& v) const {
    if (r == 0) return is_diagonal(g) ? v : ModuleVector();
    ModuleVector out;
    for (const auto& [m, c] : v.terms()) out.add_scaled(act(g, r, m), c);
    return out;
  }

  /// Applies the word right to left (the last letter acts first).
  ModuleVector act_word(const std::vector<Letter>& word, ModuleVector v) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = act(it->g, it->r, v);
    return v;
  }

 private:
  using Key = std::tuple<Gen, unsigned, Monomial>;

  static ModuleVector insert_all(unsigned s, const ModuleVector& v) {
    ModuleVector out;
    for (const auto& [m, c] : v.terms()) out.add(m.inserted(s), c);
    return out;
  }

  ModuleVector compute(Gen g, unsigned r, const Monomial& m) const {
    if (m.is_highest()) {
      switch (g) {
        case Gen::t11: return ModuleVector(m, hw_.lambda1[r]);
        case Gen::t22: return ModuleVector(m, hw_.lambda2[r]);
        default: return {};
      }
    }
    const unsigned s = m.indices().front();
    const Monomial rest = m.tail();
    ModuleVector out = insert_all(s, act(g, r, rest));
    ModuleVector comm;
    for (unsigned a = 1; a <= std::min(r, s); ++a) {
      const unsigned hi = r + s - a;
      const unsigned lo = a - 1;
      switch (g) {
        case Gen::t11:
          // t21^(a-1) t11^(r+s-a) - t21^(r+s-a) t11^(a-1)
          if (lo > 0) comm += insert_all(lo, act(Gen::t11, hi, rest));
          comm -= insert_all(hi, act(Gen::t11, lo, rest));
          break;
        case Gen::t22:
          // t21^(r+s-a) t22^(a-1) - t21^(a-1) t22^(r+s-a)
          comm += insert_all(hi, act(Gen::t22, lo, rest));
          if (lo > 0) comm -= insert_all(lo, act(Gen::t22, hi, rest));
          break;
        case Gen::t12:
          // t22^(a-1) t11^(r+s-a) - t22^(r+s-a) t11^(a-1)
          comm += act(Gen::t22, lo, act(Gen::t11, hi, rest));
          comm -= act(Gen::t22, hi, act(Gen::t11, lo, rest));
          break;
        case Gen::t21:
          break;
      }
    }
    if (opts_.inject_sign_flip) out -= comm;
    else out += comm;
    return out;
  }

  HighestWeightGL2 hw_;
  ActionOptions opts_;
  mutable std::mutex cache_mutex_;
  mutable std::map<Key, ModuleVector> cache_;
};

// ---------------------------------------------------------------------------
// Free-function surface

inline ModuleVector act_generator(int i, int j, unsigned r, const ModuleVector& v,
                                  const HighestWeightGL2& hw) {
  return VermaModule(hw).act(gen(i, j), r, v);
}

inline ModuleVector act_word(const std::vector<Letter>& word, const ModuleVector& v,
                             const HighestWeightGL2& hw) {
  return VermaModule(hw).act_word(word, v);
}

/// Coefficient u^-m of t_g(u + shift), applied to v:
/// sum_{k=1..m} [u^-m](u+shift)^-k t_g^(k) v, plus delta_g v when m = 0.
inline ModuleVector act_shifted_coeff(const VermaModule& mod, Gen g, const Rat& shift, unsigned m,
                                      const ModuleVector& v) {
  if (m == 0) return is_diagonal(g) ? v : ModuleVector();
  if (shift.is_zero()) return mod.act(g, m, v);
  ModuleVector out;
  for (unsigned k = 1; k <= m; ++k) {
    Rat w = shifted_power_weights(k, shift, m)[m];
    if (!w.is_zero()) out.add_scaled(mod.act(g, k, v), w);
  }
  return out;
}

/// Coefficient of u^-r in the quantum determinant t11(u) t22(u-1) - t21(u) t12(u-1), applied to v.
inline ModuleVector quantum_det_apply(const VermaModule& mod, unsigned r, const ModuleVector& v) {
  const Rat minus_one(-1);
  ModuleVector out;
  for (unsigned b = 0; b <= r; ++b) {
    ModuleVector y = act_shifted_coeff(mod, Gen::t22, minus_one, b, v);
    out += mod.act(Gen::t11, r - b, y);
  }
  for (unsigned b = 1; b < r; ++b) {
    ModuleVector y = act_shifted_coeff(mod, Gen::t12, minus_one, b, v);
    out -= mod.act(Gen::t21, r - b, y);
  }
  return out;
}

inline ModuleVector quantum_det_apply(unsigned r, const ModuleVector& v, const HighestWeightGL2& hw) {
  return quantum_det_apply(VermaModule(hw), r, v);
}

/// True iff every monomial of v has some index exceeding p.
inline bool in_submodule_K(const ModuleVector& v, unsigned p) {
  for (const auto& [m, c] : v.terms()) {
    const auto& idx = m.indices();
    if (idx.empty() || idx.back() <= p) return false;
  }
  return true;
}

struct WeightData {
  Rat base;           // lambda1^(1) - lambda2^(1)
  std::size_t level;  // k
  Rat eigenvalue() const { return base - Rat(2 * static_cast<long>(level)); }
};

/// Eigenvalue data of t11^(1) - t22^(1) on a single-level vector.
inline WeightData weight_of(const ModuleVector& v, const HighestWeightGL2& hw) {
  auto lv = v.levels();
  if (lv.size() > 1) throw invalid_input("weight_of needs a vector with a single level");
  return {hw.lambda1[1] - hw.lambda2[1], lv.empty() ? 0 : lv.front()};
}

/// Highest weight of the module twisted by t_ij(u) -> phi(u) t_ij(u).
inline HighestWeightGL2 twist(const HighestWeightGL2& hw, const SeriesU& phi) {
  return {series_mul(phi, hw.lambda1), series_mul(phi, hw.lambda2)};
}

/// lambda1 = u^-p P(u), lambda2 = u^-p Q(u) for monic P, Q of common degree p
/// (no reduction is applied).
inline HighestWeightGL2 canonical_polynomial_weights(const PolyQ& P, const PolyQ& Q) {
  if (!P.is_monic() || !Q.is_monic() || P.degree() != Q.degree())
    throw invalid_input("canonical weights need monic polynomials of equal degree");
  return {SeriesU(reversed_coeffs(P), true), SeriesU(reversed_coeffs(Q), true)};
}

inline HighestWeightGL2 canonical_polynomial_weights(const RationalFn& mu) {
  return canonical_polynomial_weights(mu.P(), mu.Q());
}

}  // namespace verma
