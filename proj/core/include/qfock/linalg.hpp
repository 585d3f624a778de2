#pragma once

// Exact dense linear algebra: fraction-free elimination over Z[q, q^-1] and
// Gauss-Jordan elimination over exact fields (Q and Q(zeta)).

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qfock/cyclotomic.hpp"
#include "qfock/laurent.hpp"
#include "qfock/root_datum.hpp"

namespace qfock {

/// Bareiss determinant; every intermediate division is exact.
LaurentZ bareiss_determinant(Matrix<LaurentZ> m);
/// Rank over the fraction field Q(q), via Bareiss elimination.
int bareiss_rank(Matrix<LaurentZ> m);

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<BigRat> {
  static bool is_zero(const BigRat& x) { return sgn(x) == 0; }
  static BigRat inverse(const BigRat& x) { return 1 / x; }
  static BigRat zero_like(const BigRat&) { return BigRat(0); }
  static BigRat one_like(const BigRat&) { return BigRat(1); }
};

template <>
struct FieldTraits<CyclotomicNum> {
  static bool is_zero(const CyclotomicNum& x) { return x.is_zero(); }
  static CyclotomicNum inverse(const CyclotomicNum& x) { return x.inverse(); }
  static CyclotomicNum zero_like(const CyclotomicNum& x) { return CyclotomicNum(x.order()); }
  static CyclotomicNum one_like(const CyclotomicNum& x) { return CyclotomicNum(x.order(), BigRat(1)); }
};

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<int> rref(Matrix<F>& m) {
  using T = FieldTraits<F>;
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && T::is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const F inv = T::inverse(m[r][c]);
    for (int k = c; k < cols; ++k) {
      if (!T::is_zero(m[r][k])) m[r][k] *= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r || T::is_zero(m[i][c])) continue;
      const F f = m[i][c];
      for (int k = c; k < cols; ++k) {
        if (!T::is_zero(m[r][k])) m[i][k] -= f * m[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int rank(Matrix<F> m) {
  return static_cast<int>(rref(m).size());
}

/// Basis of the right kernel {x : m x = 0}; cols is needed when m has no rows.
template <class F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> m, int cols, const F& zero) {
  using T = FieldTraits<F>;
  std::vector<std::vector<F>> basis;
  const auto pivots = rref(m);
  std::vector<int> pivot_row(static_cast<std::size_t>(cols), -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<int>(r);
  for (int free = 0; free < cols; ++free) {
    if (pivot_row[free] >= 0) continue;
    std::vector<F> v(static_cast<std::size_t>(cols), T::zero_like(zero));
    v[free] = T::one_like(zero);
    for (int c = 0; c < cols; ++c) {
      if (pivot_row[c] >= 0) v[c] = -m[pivot_row[c]][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Inverse of a square matrix, or std::nullopt when singular.
template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a, const F& zero) {
  using T = FieldTraits<F>;
  const int n = static_cast<int>(a.size());
  Matrix<F> aug(static_cast<std::size_t>(n), std::vector<F>(static_cast<std::size_t>(2 * n), T::zero_like(zero)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = T::one_like(zero);
  }
  const auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix<F> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + n, aug[i].end());
  return inv;
}

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b, const F& zero) {
  using T = FieldTraits<F>;
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  Matrix<F> r(a.size(), std::vector<F>(cols, T::zero_like(zero)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (T::is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!T::is_zero(b[k][j])) r[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return r;
}

}  // namespace qfock
