#include "qfock/linalg.hpp"

namespace qfock {

namespace {

LaurentZ divide_or_throw(const LaurentZ& num, const LaurentZ& den) {
  auto q = exact_div(num, den);
  if (!q) throw std::logic_error("Bareiss elimination: inexact division");
  return *std::move(q);
}

// Fraction-free forward elimination. Returns the rank; sets sign to the
// parity of row swaps and leaves the last pivot in m[rank-1][...].
int bareiss_eliminate(Matrix<LaurentZ>& m, int& sign) {
  sign = 1;
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  LaurentZ prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int k = c + 1; k < cols; ++k) {
        m[i][k] = divide_or_throw(m[r][c] * m[i][k] - m[i][c] * m[r][k], prev);
      }
      m[i][c] = LaurentZ();
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace

LaurentZ bareiss_determinant(Matrix<LaurentZ> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentZ(1);
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("bareiss_determinant: matrix not square");
  }
  int sign = 1;
  if (bareiss_eliminate(m, sign) < n) return LaurentZ();
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

int bareiss_rank(Matrix<LaurentZ> m) {
  int sign = 1;
  return bareiss_eliminate(m, sign);
}

}  // namespace qfock
