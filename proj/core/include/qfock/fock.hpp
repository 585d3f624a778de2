#pragma once

// The level-one Fock module V = U^-(0) (x) Q(q)[Q] and its lattice
// L = U_A^-(0) (x) A[Q], with vertex-operator modes, Heisenberg and torus
// actions. Basis labels are (colored partition in the Complete basis, eta).

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qfock/laurent.hpp"
#include "qfock/partition.hpp"
#include "qfock/root_datum.hpp"
#include "qfock/symfunc.hpp"

namespace qfock {

struct BasisLabel {
  ColoredPartition lambda;
  QElement eta;

  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// d(lambda, eta) = |lambda| + (eta, eta)/2.
int energy(const RootDatum& d, const BasisLabel& b);

struct WeightLabel {
  QElement eta;
  int energy = 0;

  friend auto operator<=>(const WeightLabel&, const WeightLabel&) = default;
  friend bool operator==(const WeightLabel&, const WeightLabel&) = default;
};

/// Exponent of q in the K_i eigenvalue: (eta, alpha_i).
std::vector<int> k_exponents(const RootDatum& d, const WeightLabel& w);

template <class C>
struct FockVector {
  std::map<BasisLabel, Laurent<C>> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const BasisLabel& b, const Laurent<C>& c) { accumulate(terms, b, c); }

  FockVector& operator+=(const FockVector& o) {
    for (const auto& [b, c] : o.terms) accumulate(terms, b, c);
    return *this;
  }
  FockVector& operator-=(const FockVector& o) {
    for (const auto& [b, c] : o.terms) accumulate(terms, b, Laurent<C>(-c));
    return *this;
  }
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms == b.terms; }

  FockVector scaled(const Laurent<C>& c) const {
    FockVector r;
    if (c.is_zero()) return r;
    for (const auto& [b, x] : terms) r.terms.emplace_hint(r.terms.end(), b, x * c);
    return r;
  }

  static FockVector basis(const BasisLabel& b, const Laurent<C>& c = Laurent<C>(1)) {
    FockVector v;
    v.add(b, c);
    return v;
  }
};

using FockZ = FockVector<BigInt>;
using FockQ = FockVector<BigRat>;

FockQ promote(const FockZ& v);
/// True when every coefficient lies in Z[q, q^-1].
bool in_lattice(const FockQ& v);
/// Throws std::domain_error when v is not in the lattice.
FockZ to_integral(const FockQ& v);

BasisLabel vacuum_label(const RootDatum& d);
FockZ vacuum(const RootDatum& d);

/// Energy of a homogeneous vector; throws if v mixes energies or is zero.
int homogeneous_energy(const RootDatum& d, const FockZ& v);

/// Coefficient of z^{-n-1} in X^{sign}_i(z) v. sign is +1 or -1.
FockZ apply_x(const RootDatum& d, int i, int sign, int n, const FockZ& v);
FockQ apply_x(const RootDatum& d, int i, int sign, int n, const FockQ& v);

class LatticeViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (x^{sign}_{i,n})^r / [r]!; throws LatticeViolation if the division fails.
FockZ apply_x_divided(const RootDatum& d, int i, int sign, int n, int r, const FockZ& v);

/// h_{i,k} for k != 0. Carries the rational factor [k]/k.
FockQ apply_h(const RootDatum& d, int i, int k, const FockQ& v);
/// h~_{i,k} = k h_{i,k} / [k], which preserves the lattice.
FockZ apply_htilde(const RootDatum& d, int i, int k, const FockZ& v);

enum class Torus { K, D, C };

/// gen^power; the node i is ignored except for K.
template <class C>
FockVector<C> apply_torus(const RootDatum& d, Torus gen, int i, int power, const FockVector<C>& v) {
  FockVector<C> r;
  for (const auto& [b, c] : v.terms) {
    int e = 0;
    switch (gen) {
      case Torus::K:
        e = pairing_with_simple(d, b.eta, i);
        break;
      case Torus::D:
        e = -energy(d, b);
        break;
      case Torus::C:
        e = 1;
        break;
    }
    r.terms.emplace_hint(r.terms.end(), b, c.shifted(e * power));
  }
  return r;
}

/// psi^+_{i,r} (r >= 0) or psi^-_{i,-r} (r >= 0), assembled from h and K.
FockQ apply_psi(const RootDatum& d, int i, int sign, int r, const FockQ& v);

/// Root-lattice points with (eta,eta)/2 <= max_norm, sorted.
std::vector<QElement> lattice_points(const RootDatum& d, int max_norm);
/// Every basis label of energy <= depth, ordered by (energy, eta, lambda).
std::vector<BasisLabel> enumerate_basis(const RootDatum& d, int depth);
/// Basis labels of exactly the given energy.
std::vector<BasisLabel> basis_of_energy(const RootDatum& d, int e);
/// Weight multiplicities (eta, d) for d <= depth.
std::map<WeightLabel, long> character(const RootDatum& d, int depth);

// Text forms. A state is a sum of terms "[coeff*]{partition} @ eta=[c1,...]",
// where coeff is a Laurent polynomial in parentheses or a bare integer.
std::string to_string(const BasisLabel& b);
std::string to_string(const FockZ& v);
std::string to_string(const FockQ& v);
FockQ parse_state(std::string_view text, const RootDatum& d);

}  // namespace qfock
