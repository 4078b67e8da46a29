#pragma once

// Exhaustive operator-identity checks over bounded sets of basis monomials.
// Each check evaluates both sides independently through the module action and
// compares exactly. Shared by the test suites and the `verma selftest` command.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "verma/gl2_verma.hpp"
#include "verma/sl2_gauss.hpp"

namespace verma {

struct CheckReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }

  void record(bool pass, const std::string& what) {
    ++checked;
    if (pass) return;
    if (failures++ == 0) first_failure = what;
  }
};

inline std::string describe(const Monomial& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.indices().size(); ++i) os << (i ? "," : "") << m.indices()[i];
  os << "]";
  return os.str();
}

inline const std::vector<Gen>& all_generators() {
  static const std::vector<Gen> g{Gen::t11, Gen::t12, Gen::t21, Gen::t22};
  return g;
}

/// [t_ij^(r), t_kl^(s)] v against the right-hand side of the RTT relation, with t^(0) = delta.
inline bool rtt_relation_holds(const VermaModule& mod, Gen x, unsigned r, Gen y, unsigned s,
                               const ModuleVector& v) {
  auto [i, j] = gen_indices(x);
  auto [k, l] = gen_indices(y);
  ModuleVector lhs = mod.act(x, r, mod.act(y, s, v)) - mod.act(y, s, mod.act(x, r, v));
  const Gen kj = gen(k, j);
  const Gen il = gen(i, l);
  ModuleVector rhs;
  for (unsigned a = 1; a <= std::min(r, s); ++a) {
    rhs += mod.act(kj, a - 1, mod.act(il, r + s - a, v));
    rhs -= mod.act(kj, r + s - a, mod.act(il, a - 1, v));
  }
  return lhs == rhs;
}

/// RTT relations for every generator pair with indices <= max_r on basis monomials
/// of level <= max_level and degree <= max_degree.
inline CheckReport relation_suite(const VermaModule& mod, unsigned max_r, std::size_t max_level,
                                  unsigned max_degree) {
  CheckReport rep;
  for (const Monomial& m : basis_up_to(max_level, max_degree)) {
    ModuleVector v(m);
    for (Gen x : all_generators())
      for (Gen y : all_generators())
        for (unsigned r = 1; r <= max_r; ++r)
          for (unsigned s = 1; s <= max_r; ++s)
            rep.record(rtt_relation_holds(mod, x, r, y, s, v),
                       "[" + gen_name(x) + "^(" + std::to_string(r) + ")," + gen_name(y) + "^(" +
                           std::to_string(s) + ")] on " + describe(m));
  }
  return rep;
}

/// [qdet_r, t_g^(s)] v = 0.
inline CheckReport centrality_suite(const VermaModule& mod, unsigned max_r, std::size_t max_level,
                                    unsigned max_degree) {
  CheckReport rep;
  for (const Monomial& m : basis_up_to(max_level, max_degree)) {
    ModuleVector v(m);
    for (unsigned r = 1; r <= max_r; ++r) {
      ModuleVector dv = quantum_det_apply(mod, r, v);
      for (Gen g : all_generators())
        for (unsigned s = 1; s <= max_r; ++s) {
          ModuleVector c = quantum_det_apply(mod, r, mod.act(g, s, v)) - mod.act(g, s, dv);
          rep.record(c.is_zero(), "[qdet_" + std::to_string(r) + "," + gen_name(g) + "^(" +
                                      std::to_string(s) + ")] on " + describe(m));
        }
    }
  }
  return rep;
}

/// With weights that are polynomials in u^-1 of degree <= p, the span of monomials
/// having some index > p is stable under every generator.
inline CheckReport k_stability_suite(const VermaModule& mod, unsigned p, unsigned max_r,
                                     std::size_t max_level, unsigned max_degree) {
  CheckReport rep;
  for (const Monomial& m : basis_up_to(max_level, max_degree)) {
    ModuleVector v(m);
    if (!in_submodule_K(v, p)) continue;
    for (Gen g : all_generators())
      for (unsigned r = 1; r <= max_r; ++r)
        rep.record(in_submodule_K(mod.act(g, r, v), p),
                   gen_name(g) + "^(" + std::to_string(r) + ") on " + describe(m));
  }
  return rep;
}

/// [e^(r), f^(s)] = h^(r+s) for r + s <= max_sum and [h^(r), h^(s)] = 0 for r, s <= max_sum.
inline CheckReport drinfeld_suite(const VermaModule& mod, unsigned max_sum, std::size_t max_level,
                                  unsigned max_degree) {
  CheckReport rep;
  for (const Monomial& m : basis_up_to(max_level, max_degree)) {
    ModuleVector v(m);
    auto e_v = e_coeffs(mod, v, max_sum);
    auto f_v = f_coeffs(mod, v, max_sum);
    auto h_v = h_coeffs(mod, v, max_sum);
    for (unsigned s = 0; s <= max_sum; ++s) {
      auto e_fv = e_coeffs(mod, f_v[s], max_sum - s);
      for (unsigned r = 0; r + s <= max_sum; ++r) {
        ModuleVector lhs = e_fv[r] - act_f(mod, s, e_v[r]);
        rep.record(lhs == h_v[r + s], "[e^(" + std::to_string(r) + "),f^(" + std::to_string(s) +
                                          ")] on " + describe(m));
      }
    }
    std::vector<std::vector<ModuleVector>> hh;
    for (unsigned r = 0; r <= max_sum; ++r) hh.push_back(h_coeffs(mod, h_v[r], max_sum));
    for (unsigned r = 0; r <= max_sum; ++r)
      for (unsigned s = r + 1; s <= max_sum; ++s)
        rep.record(hh[r][s] == hh[s][r], "[h^(" + std::to_string(r) + "),h^(" + std::to_string(s) +
                                             ")] on " + describe(m));
  }
  return rep;
}

/// h(u) evaluated through the Gauss decomposition and through the quantum determinant agree.
inline CheckReport h_route_suite(const VermaModule& mod, unsigned max_r, std::size_t max_level,
                                 unsigned max_degree) {
  CheckReport rep;
  for (const Monomial& m : basis_up_to(max_level, max_degree)) {
    ModuleVector v(m);
    VectorSeries a = h_series(mod, v, max_r);
    VectorSeries b = h_series_via_qdet(mod, v, max_r);
    for (unsigned r = 0; r <= max_r; ++r)
      rep.record(a[r + 1] == b[r + 1], "h^(" + std::to_string(r) + ") routes on " + describe(m));
  }
  return rep;
}

/// h(u) 1 = (lambda1 / lambda2)(u) 1 through u^-(max_r+1).
inline CheckReport h_highest_suite(const VermaModule& mod, unsigned max_r) {
  CheckReport rep;
  const auto& hw = mod.weight();
  SeriesU mu = series_mul(hw.lambda1, series_inverse(hw.lambda2, max_r + 1));
  auto h1 = h_coeffs(mod, ModuleVector::highest(), max_r);
  for (unsigned r = 0; r <= max_r; ++r)
    rep.record(h1[r] == ModuleVector(Monomial(), mu[r + 1]), "h^(" + std::to_string(r) + ") 1");
  return rep;
}

}  // namespace verma
