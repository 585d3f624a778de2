#include "qfock/root_datum.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace qfock {

namespace {

std::vector<std::pair<int, int>> dynkin_edges(Family family, int n) {
  std::vector<std::pair<int, int>> e;
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki labelling: 1-3-4-5-...-n with 2 attached to 4.
      e = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
  }
  return e;
}

int coxeter_number(Family family, int n) {
  switch (family) {
    case Family::A:
      return n + 1;
    case Family::D:
      return 2 * n - 2;
    case Family::E:
      return n == 6 ? 12 : n == 7 ? 18 : 30;
  }
  return 0;
}

int height(const QElement& a) { return std::accumulate(a.begin(), a.end(), 0); }

}  // namespace

std::string RootDatum::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

char family_letter(Family f) {
  switch (f) {
    case Family::A:
      return 'A';
    case Family::D:
      return 'D';
    case Family::E:
      return 'E';
  }
  return '?';
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "D" || s == "d") return Family::D;
  if (s == "E" || s == "e") return Family::E;
  throw std::invalid_argument("unknown root system family '" + s + "' (expected A, D or E)");
}

RootDatum build_root_datum(Family family, int n) {
  const bool ok = (family == Family::A && n >= 1) || (family == Family::D && n >= 4) ||
                  (family == Family::E && n >= 6 && n <= 8);
  if (!ok) {
    throw std::invalid_argument(std::string("invalid ADE pair ") + family_letter(family) +
                                std::to_string(n) + ": need A_n (n>=1), D_n (n>=4) or E_6, E_7, E_8");
  }
  RootDatum d;
  d.family = family;
  d.rank = n;
  d.cartan.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) d.cartan[i][i] = 2;
  for (auto [i, j] : dynkin_edges(family, n)) d.cartan[i][j] = d.cartan[j][i] = -1;
  d.coxeter = coxeter_number(family, n);

  // Closure: beta + alpha_i is a root whenever (beta, alpha_i) = -1.
  std::set<QElement> seen;
  std::vector<QElement> frontier;
  for (int i = 0; i < n; ++i) {
    frontier.push_back(simple_root(d, i));
    seen.insert(frontier.back());
  }
  while (!frontier.empty()) {
    std::vector<QElement> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < n; ++i) {
        if (pairing_with_simple(d, beta, i) != -1) continue;
        QElement gamma = beta;
        ++gamma[i];
        if (seen.insert(gamma).second) next.push_back(std::move(gamma));
      }
    }
    frontier = std::move(next);
  }
  d.positive_roots.assign(seen.begin(), seen.end());
  std::stable_sort(d.positive_roots.begin(), d.positive_roots.end(),
                   [](const QElement& a, const QElement& b) { return height(a) < height(b); });
  d.theta = d.positive_roots.back();

  d.eps_table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) d.eps_table[i][j] = (d.cartan[i][j] % 2 == 0) ? 1 : -1;
  }
  return d;
}

QElement zero_element(const RootDatum& d) { return QElement(static_cast<std::size_t>(d.rank), 0); }

QElement simple_root(const RootDatum& d, int i) {
  QElement a = zero_element(d);
  a.at(static_cast<std::size_t>(i)) = 1;
  return a;
}

QElement operator+(const QElement& a, const QElement& b) {
  QElement r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

QElement operator-(const QElement& a, const QElement& b) {
  QElement r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

QElement operator-(const QElement& a) {
  QElement r = a;
  for (auto& x : r) x = -x;
  return r;
}

QElement operator*(int k, const QElement& a) {
  QElement r = a;
  for (auto& x : r) x *= k;
  return r;
}

int pairing(const RootDatum& d, const QElement& a, const QElement& b) {
  int s = 0;
  for (int i = 0; i < d.rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d.rank; ++j) s += a[i] * b[j] * d.cartan[i][j];
  }
  return s;
}

int pairing_with_simple(const RootDatum& d, const QElement& a, int i) {
  int s = 0;
  for (int j = 0; j < d.rank; ++j) s += a[j] * d.cartan[j][i];
  return s;
}

int norm(const RootDatum& d, const QElement& a) { return pairing(d, a, a) / 2; }

int cocycle(const RootDatum& d, const QElement& a, const QElement& b) {
  long s = 0;
  for (int i = 0; i < d.rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < i; ++j) s += static_cast<long>(a[i]) * b[j] * d.cartan[i][j];
  }
  return (s % 2 == 0) ? 1 : -1;
}

Matrix<LaurentZ> qcartan(const RootDatum& d) {
  Matrix<LaurentZ> m(static_cast<std::size_t>(d.rank), std::vector<LaurentZ>(static_cast<std::size_t>(d.rank)));
  for (int i = 0; i < d.rank; ++i) {
    for (int j = 0; j < d.rank; ++j) m[i][j] = qint(d.cartan[i][j]);
  }
  return m;
}

LaurentZ cofactor_determinant(const Matrix<LaurentZ>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentZ(1);
  if (n > 20) throw std::invalid_argument("cofactor_determinant: matrix too large");
  // minor(row, cols): determinant of rows row..n-1 restricted to the column set cols.
  std::unordered_map<unsigned, LaurentZ> memo;
  auto minor = [&](auto&& self, int row, unsigned cols) -> LaurentZ {
    if (row == n) return LaurentZ(1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    LaurentZ acc;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      if (!m[row][c].is_zero()) {
        LaurentZ term = m[row][c] * self(self, row + 1, cols & ~(1u << c));
        if (sign > 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return minor(minor, 0, (n == 32) ? ~0u : ((1u << n) - 1));
}

LaurentZ qcartan_det(const RootDatum& d) { return cofactor_determinant(qcartan(d)); }

DetScan detq_nonvanishing(const RootDatum& d, int l, int kmax) {
  if (l < 1) throw std::invalid_argument("detq_nonvanishing: l must be positive");
  DetScan scan;
  scan.l = l;
  scan.kmax = kmax;
  const LaurentZ det = qcartan_det(d);
  for (int k = 1; k <= kmax; ++k) {
    scan.values.push_back(specialize_at_power(det, l, k));
    if (scan.values.back().is_zero()) scan.zeros.push_back(k);
  }
  return scan;
}

std::vector<DetClosedForm> det_closed_forms(const RootDatum& d) {
  const int n = d.rank;
  auto q = [](int e) { return LaurentZ::monomial(e); };
  const std::string m = std::to_string(n - 1);
  switch (d.family) {
    case Family::A:
      return {{"A", "[" + std::to_string(n + 1) + "]", qint(n + 1)}};
    case Family::D:
      return {{"D printed", "[2](q^" + m + "+q^" + m + ")", qint(2) * (q(n - 1) + q(n - 1)), true},
              {"D symmetric", "[2](q^" + m + "+q^-" + m + ")", qint(2) * (q(n - 1) + q(1 - n))}};
    case Family::E:
      break;
  }
  switch (n) {
    case 6:
      return {{"E6", "(q^4+q^-4-1)(q^2+q^-2+1)", (q(4) + q(-4) - 1) * (q(2) + q(-2) + 1)}};
    case 7:
      return {{"E7", "[2](q^6+q^-6-1)", qint(2) * (q(6) + q(-6) - 1)}};
    default:
      return {{"E8", "q^8+q^6+q^-6+q^-8-q^2-1-q^-2", q(8) + q(6) + q(-6) + q(-8) - q(2) - 1 - q(-2)}};
  }
}

}  // namespace qfock
