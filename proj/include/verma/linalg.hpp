#pragma once

/**
 * @file linalg.hpp
 * @brief Exact rank and nullspace of rational matrices.
 *
 * Rows are scaled to integers and reduced with fraction-free (Bareiss)
 * elimination; every division performed during elimination is exact. The
 * nullspace basis is the canonical one: one vector per free column with
 * that column set to 1 and the other free columns set to 0.
 */

#include <cstddef>
#include <vector>

#include "verma/errors.hpp"
#include "verma/exact.hpp"

namespace verma {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void append_row(const std::vector<Rat>& row) {
    if (row.size() != cols_) throw invalid_input("row length does not match matrix width");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

struct Echelon {
  std::vector<std::vector<Integer>> rows;  // first `rank` rows are the pivot rows
  std::vector<std::size_t> pivots;         // pivot column of each pivot row
  std::size_t cols = 0;
  std::size_t rank() const { return pivots.size(); }
};

/// Fraction-free row echelon form.
inline Echelon echelon(const Matrix& m) {
  Echelon e;
  e.cols = m.cols();
  e.rows.resize(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer d = m(i, j).denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& x = m(i, j);
      e.rows[i][j] = x.numerator() * (l / x.denominator());
    }
  }
  auto& a = e.rows;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        if (mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()) == 0)
          throw invariant_breach("fraction-free elimination produced an inexact division");
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

inline std::size_t rank(const Matrix& m) { return echelon(m).rank(); }

/// Canonical basis of { x : m x = 0 }.
inline std::vector<std::vector<Rat>> nullspace(const Matrix& m) {
  Echelon e = echelon(m);
  std::vector<bool> is_pivot(e.cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < e.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> x(e.cols);
    x[f] = Rat(1);
    for (std::size_t k = e.rank(); k-- > 0;) {
      std::size_t pc = e.pivots[k];
      Rat acc(0);
      for (std::size_t j = pc + 1; j < e.cols; ++j)
        if (!x[j].is_zero() && e.rows[k][j] != 0) acc += Rat(e.rows[k][j]) * x[j];
      x[pc] = -acc / Rat(e.rows[k][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace verma
