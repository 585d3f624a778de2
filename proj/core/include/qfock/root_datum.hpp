#pragma once

// Simply-laced (ADE) root data: Cartan matrix, positive roots, highest root,
// Coxeter number, the sign cocycle on the root lattice, and q-Cartan matrices.

#include <string>
#include <vector>

#include "qfock/cyclotomic.hpp"
#include "qfock/laurent.hpp"

namespace qfock {

enum class Family { A, D, E };

/// Coordinates in the simple-root basis of the root lattice Q.
using QElement = std::vector<int>;

template <class T>
using Matrix = std::vector<std::vector<T>>;

struct RootDatum {
  Family family = Family::A;
  int rank = 0;
  Matrix<int> cartan;
  std::vector<QElement> positive_roots;  // sorted by height, then lexicographically
  QElement theta;
  int coxeter = 0;
  Matrix<int> eps_table;  // eps_table[i][j] = cocycle(alpha_i, alpha_j)

  std::string name() const;  // e.g. "A2", "E8"
};

/// Throws std::invalid_argument for pairs outside A (n>=1), D (n>=4), E (6,7,8).
RootDatum build_root_datum(Family family, int rank);
Family parse_family(const std::string& s);
char family_letter(Family f);

QElement zero_element(const RootDatum& d);
QElement simple_root(const RootDatum& d, int i);
QElement operator+(const QElement& a, const QElement& b);
QElement operator-(const QElement& a, const QElement& b);
QElement operator-(const QElement& a);
QElement operator*(int k, const QElement& a);

/// Symmetric bilinear form with (alpha_i, alpha_j) = a_ij.
int pairing(const RootDatum& d, const QElement& a, const QElement& b);
/// (alpha, alpha_i) for a single node, cheaper than the full pairing.
int pairing_with_simple(const RootDatum& d, const QElement& a, int i);
int norm(const RootDatum& d, const QElement& a);  // (a,a)/2

/// Bimultiplicative sign: (-1)^{sum_{i>j} a_i b_j a_ij}. Returns +1 or -1.
int cocycle(const RootDatum& d, const QElement& a, const QElement& b);

/// [A]_ij = [a_ij].
Matrix<LaurentZ> qcartan(const RootDatum& d);
/// Determinant of [A] by cofactor expansion along rows, memoized on column sets.
LaurentZ qcartan_det(const RootDatum& d);
LaurentZ cofactor_determinant(const Matrix<LaurentZ>& m);

struct DetScan {
  int l = 1;
  int kmax = 0;
  std::vector<CyclotomicNum> values;  // det[A] at zeta^k, k = 1..kmax
  std::vector<int> zeros;             // the k with vanishing value
};

DetScan detq_nonvanishing(const RootDatum& d, int l, int kmax);

/// A published closed form for det[A]. The D_n formula as printed repeats the
/// exponent n-1; it is kept as an informational entry next to the symmetric form.
struct DetClosedForm {
  std::string label;
  std::string formula;
  LaurentZ value;
  bool informational = false;
};
std::vector<DetClosedForm> det_closed_forms(const RootDatum& d);

}  // namespace qfock
