#pragma once

/**
 * @file sl2_gauss.hpp
 * @brief Drinfeld generators e^(r), f^(r), h^(r) of Y(sl2) acting on M(lambda1, lambda2).
 *
 * Uses the Gauss decomposition
 *
 *   e(u) = t22(u)^-1 t12(u),   f(u) = t21(u) t22(u)^-1,
 *   h(u) = t11(u) t22(u)^-1 - t21(u) t22(u)^-1 t12(u) t22(u)^-1,
 *
 * with e(u) = sum e^(r) u^{-r-1}, f(u) = sum f^(r) u^{-r-1}, h(u) = 1 + sum h^(r) u^{-r-1}.
 * Operator series are applied to a "vector series" X = sum_m X_m u^-m; the
 * inverse t22(u)^-1 is applied by solving t22(u) Y = X coefficientwise
 * (the t22^(c) commute with each other, so left and right inverses agree).
 */

#include <cstddef>
#include <vector>

#include "verma/exact.hpp"
#include "verma/gl2_verma.hpp"

namespace verma {

/// Coefficients X_0 .. X_n of a formal series in u^-1 with values in the module.
using VectorSeries = std::vector<ModuleVector>;

inline VectorSeries constant_series(const ModuleVector& v, std::size_t n) {
  VectorSeries x(n + 1);
  x[0] = v;
  return x;
}

/// (T_g(u + shift) X)_m = sum_{b <= m} [u^-(m-b)] t_g(u + shift) X_b.
inline VectorSeries apply_series(const VermaModule& mod, Gen g, const VectorSeries& x,
                                 const Rat& shift = Rat(0)) {
  VectorSeries out(x.size());
  for (std::size_t m = 0; m < x.size(); ++m)
    for (std::size_t b = 0; b <= m; ++b)
      if (!x[b].is_zero())
        out[m] += act_shifted_coeff(mod, g, shift, static_cast<unsigned>(m - b), x[b]);
  return out;
}

/// Y with T_g(u + shift) Y = X for a diagonal generator g:
/// Y_m = X_m - sum_{c=1..m} [u^-c] t_g(u + shift) Y_{m-c}.
inline VectorSeries apply_inverse_series(const VermaModule& mod, Gen g, const VectorSeries& x,
                                         const Rat& shift = Rat(0)) {
  if (!is_diagonal(g)) throw invalid_input("only t11(u) and t22(u) are invertible series");
  VectorSeries y(x.size());
  for (std::size_t m = 0; m < x.size(); ++m) {
    y[m] = x[m];
    for (std::size_t c = 1; c <= m; ++c)
      if (!y[m - c].is_zero())
        y[m] -= act_shifted_coeff(mod, g, shift, static_cast<unsigned>(c), y[m - c]);
  }
  return y;
}

inline VectorSeries e_series(const VermaModule& mod, const ModuleVector& v, std::size_t max_r) {
  VectorSeries x = constant_series(v, max_r + 1);
  return apply_inverse_series(mod, Gen::t22, apply_series(mod, Gen::t12, x));
}

inline VectorSeries f_series(const VermaModule& mod, const ModuleVector& v, std::size_t max_r) {
  VectorSeries x = constant_series(v, max_r + 1);
  return apply_series(mod, Gen::t21, apply_inverse_series(mod, Gen::t22, x));
}

inline VectorSeries h_series(const VermaModule& mod, const ModuleVector& v, std::size_t max_r) {
  VectorSeries y = apply_inverse_series(mod, Gen::t22, constant_series(v, max_r + 1));
  VectorSeries a = apply_series(mod, Gen::t11, y);
  VectorSeries b = apply_series(
      mod, Gen::t21, apply_inverse_series(mod, Gen::t22, apply_series(mod, Gen::t12, y)));
  for (std::size_t m = 0; m < a.size(); ++m) a[m] -= b[m];
  return a;
}

/// h(u) through the quantum determinant: t22(u)^-1 t22(u-1)^-1 qdet(u).
inline VectorSeries h_series_via_qdet(const VermaModule& mod, const ModuleVector& v, std::size_t max_r) {
  const Rat minus_one(-1);
  VectorSeries x = constant_series(v, max_r + 1);
  VectorSeries qd = apply_series(mod, Gen::t11, apply_series(mod, Gen::t22, x, minus_one));
  VectorSeries second = apply_series(mod, Gen::t21, apply_series(mod, Gen::t12, x, minus_one));
  for (std::size_t m = 0; m < qd.size(); ++m) qd[m] -= second[m];
  return apply_inverse_series(mod, Gen::t22, apply_inverse_series(mod, Gen::t22, qd, minus_one));
}

/// e^(r) v for r = 0..max_r.
inline std::vector<ModuleVector> e_coeffs(const VermaModule& mod, const ModuleVector& v, std::size_t max_r) {
  VectorSeries s = e_series(mod, v, max_r);
  return {s.begin() + 1, s.end()};
}
inline std::vector<ModuleVector> f_coeffs(const VermaModule& mod, const ModuleVector& v, std::size_t max_r) {
  VectorSeries s = f_series(mod, v, max_r);
  return {s.begin() + 1, s.end()};
}
inline std::vector<ModuleVector> h_coeffs(const VermaModule& mod, const ModuleVector& v, std::size_t max_r) {
  VectorSeries s = h_series(mod, v, max_r);
  return {s.begin() + 1, s.end()};
}

inline ModuleVector act_e(const VermaModule& mod, unsigned r, const ModuleVector& v) {
  return e_series(mod, v, r)[r + 1];
}
inline ModuleVector act_f(const VermaModule& mod, unsigned r, const ModuleVector& v) {
  return f_series(mod, v, r)[r + 1];
}
inline ModuleVector act_h(const VermaModule& mod, unsigned r, const ModuleVector& v) {
  return h_series(mod, v, r)[r + 1];
}

inline ModuleVector act_e(unsigned r, const ModuleVector& v, const HighestWeightGL2& hw) {
  return act_e(VermaModule(hw), r, v);
}
inline ModuleVector act_f(unsigned r, const ModuleVector& v, const HighestWeightGL2& hw) {
  return act_f(VermaModule(hw), r, v);
}
inline ModuleVector act_h(unsigned r, const ModuleVector& v, const HighestWeightGL2& hw) {
  return act_h(VermaModule(hw), r, v);
}

/// f^(r1) f^(r2) ... f^(rk) 1, applied right to left.
inline ModuleVector f_monomial_vector(const VermaModule& mod, const std::vector<unsigned>& f_indices) {
  ModuleVector v = ModuleVector::highest();
  for (auto it = f_indices.rbegin(); it != f_indices.rend(); ++it) v = act_f(mod, *it, v);
  return v;
}

/// All basis monomials of level <= max_level and degree <= max_degree.
inline std::vector<Monomial> basis_up_to(std::size_t max_level, unsigned max_degree) {
  std::vector<Monomial> out;
  for (std::size_t k = 0; k <= max_level; ++k) {
    auto lv = monomials_of_level(k, max_degree);
    out.insert(out.end(), lv.begin(), lv.end());
  }
  return out;
}

/// Checks [e^(r), f^(s)] = h^(r+s) and [h^(r), h^(s)] = 0 for r, s <= maxr on
/// every basis monomial of level <= maxlevel and degree <= max_degree.
inline bool restriction_check(const HighestWeightGL2& hw, unsigned maxr, std::size_t maxlevel,
                              unsigned max_degree) {
  VermaModule mod(hw, {.memoize = true});
  for (const Monomial& m : basis_up_to(maxlevel, max_degree)) {
    ModuleVector v(m);
    auto e_v = e_coeffs(mod, v, maxr);
    auto f_v = f_coeffs(mod, v, maxr);
    auto h_v = h_coeffs(mod, v, 2 * maxr);
    for (unsigned s = 0; s <= maxr; ++s) {
      auto e_fv = e_coeffs(mod, f_v[s], maxr);
      for (unsigned r = 0; r <= maxr; ++r) {
        ModuleVector lhs = e_fv[r] - act_f(mod, s, e_v[r]);
        if (lhs != h_v[r + s]) return false;
      }
    }
    for (unsigned r = 0; r <= maxr; ++r) {
      auto h_hv = h_coeffs(mod, h_v[r], maxr);
      for (unsigned s = 0; s <= maxr; ++s)
        if (h_hv[s] != h_coeffs(mod, h_v[s], r)[r]) return false;
    }
  }
  return true;
}

inline bool restriction_check(const RationalFn& mu, unsigned maxr, std::size_t maxlevel) {
  return restriction_check(canonical_polynomial_weights(mu), maxr, maxlevel,
                           static_cast<unsigned>(maxr + maxlevel));
}

}  // namespace verma
