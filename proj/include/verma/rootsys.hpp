#pragma once

// Root-system data from a Cartan matrix and the rationality verdicts for
// highest weights of Yangians of simple Lie algebras.
//
// Convention: a_ij = <alpha_i^vee, alpha_j>, so <beta, alpha_i^vee> = sum_j a_ij beta_j
// and D A is symmetric for D = diag(d_1, ..., d_n).

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "verma/errors.hpp"
#include "verma/exact.hpp"
#include "verma/recurrence.hpp"

namespace verma {

using IntMatrix = std::vector<std::vector<long>>;
using RootVector = std::vector<long>;

/// Structural checks: square, a_ii = 2, a_ij <= 0 off the diagonal, a_ij = 0 iff a_ji = 0.
inline void validate_cartan(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw invalid_input("Cartan matrix must be nonempty");
  for (const auto& row : a)
    if (row.size() != n) throw invalid_input("Cartan matrix must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && a[i][j] != 2) throw invalid_input("Cartan matrix needs 2 on the diagonal");
      if (i != j && a[i][j] > 0) throw invalid_input("Cartan matrix needs nonpositive off-diagonal entries");
      if ((a[i][j] == 0) != (a[j][i] == 0)) throw invalid_input("Cartan matrix zero pattern must be symmetric");
    }
}

/// The coprime positive d with D A symmetric (indecomposable A).
inline std::vector<long> symmetrizers(const IntMatrix& a) {
  validate_cartan(a);
  const std::size_t n = a.size();
  std::vector<std::optional<Rat>> d(n);
  d[0] = Rat(1);
  std::queue<std::size_t> todo;
  todo.push(0);
  while (!todo.empty()) {
    std::size_t i = todo.front();
    todo.pop();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0) continue;
      Rat dj = *d[i] * Rat(a[i][j], a[j][i]);
      if (!d[j]) {
        d[j] = dj;
        todo.push(j);
      } else if (*d[j] != dj) {
        throw invalid_input("Cartan matrix is not symmetrizable");
      }
    }
  }
  Integer l = 1;
  for (const auto& x : d) {
    if (!x) throw invalid_input("Cartan matrix is decomposable");
    Integer den = x->denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  Integer g = 0;
  std::vector<Integer> num;
  for (const auto& x : d) {
    num.push_back(x->numerator() * (l / x->denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.back().get_mpz_t());
  }
  std::vector<long> out;
  for (const auto& x : num) out.push_back(Integer(x / g).get_si());
  return out;
}

struct CartanData {
  IntMatrix A;
  std::vector<long> d;

  explicit CartanData(IntMatrix a) : A(std::move(a)), d(symmetrizers(A)) {}
  std::size_t rank() const { return A.size(); }
};

// ---------------------------------------------------------------------------
// Type labels (Bourbaki numbering)

inline IntMatrix cartan_of_type(const std::string& label) {
  if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
    throw invalid_input("unknown Cartan type label '" + label + "'");
  const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  std::size_t n = 0;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(label[i])) || n > 1000)
      throw invalid_input("unknown Cartan type label '" + label + "'");
    n = n * 10 + static_cast<std::size_t>(label[i] - '0');
  }
  IntMatrix a(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
  auto chain = [&](std::size_t upto) {
    for (std::size_t i = 1; i < upto; ++i) link(i, i + 1);
  };
  switch (t) {
    case 'A':
      if (n < 1) break;
      chain(n);
      return a;
    case 'B':
      if (n < 2) break;
      chain(n);
      a[n - 1][n - 2] = -2;
      return a;
    case 'C':
      if (n < 2) break;
      chain(n);
      a[n - 2][n - 1] = -2;
      return a;
    case 'D':
      if (n < 4) break;
      chain(n - 1);
      link(n - 2, n);
      return a;
    case 'E':
      if (n < 6 || n > 8) break;
      link(1, 3);
      link(2, 4);
      for (std::size_t i = 3; i < n; ++i) link(i, i + 1);
      return a;
    case 'F':
      if (n != 4) break;
      chain(4);
      a[2][1] = -2;
      return a;
    case 'G':
      if (n != 2) break;
      a[0][1] = -1;
      a[1][0] = -3;
      return a;
    default:
      break;
  }
  throw invalid_input("unknown Cartan type label '" + label + "'");
}

// ---------------------------------------------------------------------------
// Positive roots

struct RootSystem {
  std::vector<RootVector> positive_roots;  // sorted by height, then lexicographically

  static long height(const RootVector& r) { return std::accumulate(r.begin(), r.end(), 0L); }
  const RootVector& highest() const { return positive_roots.back(); }
  long mult(std::size_t root, std::size_t i) const { return positive_roots[root][i]; }
};

/// Closure by root strings: beta + alpha_i is a root iff q > 0, where the
/// alpha_i-string through beta is beta - p alpha_i .. beta + q alpha_i and
/// p - q = <beta, alpha_i^vee>.
inline RootSystem positive_roots(const IntMatrix& a, long height_cap = 100) {
  validate_cartan(a);
  const std::size_t n = a.size();
  std::set<RootVector> known;
  std::vector<RootVector> layer;
  for (std::size_t i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  RootSystem rs;
  for (long h = 1; !layer.empty(); ++h) {
    if (h > height_cap)
      throw non_finite_type("root height exceeds " + std::to_string(height_cap) + "; Cartan matrix is not of finite type");
    std::sort(layer.begin(), layer.end());
    rs.positive_roots.insert(rs.positive_roots.end(), layer.begin(), layer.end());
    std::set<RootVector> next;
    for (const RootVector& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        long p = 0;
        RootVector down = beta;
        while (down[i] > 0) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        long pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += a[i][j] * beta[j];
        if (p - pairing <= 0) continue;
        RootVector up = beta;
        ++up[i];
        next.insert(up);
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }
  return rs;
}

// ---------------------------------------------------------------------------
// Spanning-set counts

/// Multisets of pairs (alpha, r), alpha positive, 0 <= r < sum_i [alpha:alpha_i] p_i,
/// whose simple-root content is k.
inline Integer spanning_count(const std::vector<long>& p, const std::vector<long>& k, const IntMatrix& a) {
  const std::size_t n = a.size();
  if (p.size() != n || k.size() != n) throw invalid_input("p and k must have one entry per simple root");
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] < 0 || k[i] < 0) throw invalid_input("p and k must be nonnegative");
  RootSystem rs = positive_roots(a);
  std::vector<std::size_t> stride(n);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    stride[i] = total;
    total *= static_cast<std::size_t>(k[i] + 1);
  }
  std::vector<Integer> dp(total);
  dp[0] = 1;
  for (const RootVector& alpha : rs.positive_roots) {
    bool fits = true;
    long labels = 0;
    std::size_t shift = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (alpha[i] > k[i]) fits = false;
      labels += alpha[i] * p[i];
      shift += static_cast<std::size_t>(alpha[i]) * stride[i];
    }
    if (!fits) continue;
    for (long copy = 0; copy < labels; ++copy) {
      for (std::size_t idx = 0; idx < total; ++idx) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
          ok = static_cast<long>((idx / stride[i]) % static_cast<std::size_t>(k[i] + 1)) >= alpha[i];
        if (ok) dp[idx] += dp[idx - shift];
      }
    }
  }
  return dp[total - 1];
}

// ---------------------------------------------------------------------------
// Verdicts

using HighestWeightTuple = std::vector<WeightInput>;

enum class Reducibility { reducible, irreducible_up_to_budget, undetermined };
enum class WeightFiniteness { finite, not_finite_up_to_budget, undetermined };
enum class Tristate { yes, no, undetermined };

inline std::string to_string(Reducibility r) {
  switch (r) {
    case Reducibility::reducible: return "reducible";
    case Reducibility::irreducible_up_to_budget: return "irreducible_up_to_budget";
    case Reducibility::undetermined: return "undetermined";
  }
  return "";
}
inline std::string to_string(WeightFiniteness w) {
  switch (w) {
    case WeightFiniteness::finite: return "finite";
    case WeightFiniteness::not_finite_up_to_budget: return "not_finite_up_to_budget";
    case WeightFiniteness::undetermined: return "undetermined";
  }
  return "";
}

struct ReducibilityVerdict {
  Reducibility overall = Reducibility::undetermined;
  std::size_t budget = 0;
  std::vector<RationalityVerdict> components;
};

inline std::vector<RationalityVerdict> component_verdicts(const HighestWeightTuple& mu, std::size_t budget) {
  std::vector<RationalityVerdict> out;
  for (const auto& c : mu) out.push_back(is_rational_verdict(c, budget));
  return out;
}

inline ReducibilityVerdict verdict_reducible(const HighestWeightTuple& mu, std::size_t budget) {
  ReducibilityVerdict v;
  v.budget = budget;
  v.components = component_verdicts(mu, budget);
  auto any = [&](RationalityKind k) {
    return std::any_of(v.components.begin(), v.components.end(), [&](const auto& c) { return c.kind == k; });
  };
  if (any(RationalityKind::rational))
    v.overall = Reducibility::reducible;
  else if (any(RationalityKind::insufficient_data))
    v.overall = Reducibility::undetermined;
  else
    v.overall = Reducibility::irreducible_up_to_budget;
  return v;
}

struct FinitenessVerdict {
  WeightFiniteness overall = WeightFiniteness::undetermined;
  std::size_t budget = 0;
  std::vector<RationalityVerdict> components;
};

inline FinitenessVerdict verdict_weight_finiteness(const HighestWeightTuple& mu, std::size_t budget) {
  FinitenessVerdict v;
  v.budget = budget;
  v.components = component_verdicts(mu, budget);
  auto all_rational = std::all_of(v.components.begin(), v.components.end(),
                                  [](const auto& c) { return c.kind == RationalityKind::rational; });
  auto any_none = std::any_of(v.components.begin(), v.components.end(),
                              [](const auto& c) { return c.kind == RationalityKind::no_recurrence_up_to; });
  if (all_rational)
    v.overall = WeightFiniteness::finite;
  else if (any_none)
    v.overall = WeightFiniteness::not_finite_up_to_budget;
  return v;
}

/// P_i(u) = Q_i(u + d_i) for every i. A rational component that fails decides
/// "no"; otherwise any series component leaves the answer undetermined.
inline Tristate verdict_finite_dimensional(const HighestWeightTuple& mu, const CartanData& cartan) {
  if (mu.size() != cartan.rank()) throw invalid_input("highest weight needs one component per simple root");
  bool series = false;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const auto* f = std::get_if<RationalFn>(&mu[i]);
    if (!f) {
      series = true;
      continue;
    }
    if (!(f->P() == f->Q().shifted(Rat(cartan.d[i])))) return Tristate::no;
  }
  return series ? Tristate::undetermined : Tristate::yes;
}

inline std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::yes: return "true";
    case Tristate::no: return "false";
    case Tristate::undetermined: return "undetermined";
  }
  return "";
}

}  // namespace verma
