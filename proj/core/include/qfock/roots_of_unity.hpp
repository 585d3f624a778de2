#pragma once

// Specialization of the lattice at q = zeta (a primitive l-th root of unity),
// dual Heisenberg elements and finite-depth irreducibility certificates.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qfock/cyclotomic.hpp"
#include "qfock/fock.hpp"
#include "qfock/linalg.hpp"
#include "qfock/root_datum.hpp"

namespace qfock {

struct SpecializedVector {
  int l = 1;
  std::map<BasisLabel, CyclotomicNum> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const BasisLabel& b, const CyclotomicNum& c);
  friend bool operator==(const SpecializedVector& a, const SpecializedVector& b) {
    return a.l == b.l && a.terms == b.terms;
  }
};

/// Coefficientwise q -> zeta_l. Throws std::domain_error on non-lattice input.
SpecializedVector specialize_vector(const FockQ& v, int l);
SpecializedVector specialize_vector(const FockZ& v, int l);

/// The action on W_zeta of a lattice-preserving operator, by push-forward.
using LatticeOperator = std::function<FockZ(const FockZ&)>;
SpecializedVector push_forward(const LatticeOperator& op, const SpecializedVector& v);

/// mu_i = (eta, alpha_i) = mu'_i + l mu''_i with 0 <= mu'_i < l.
struct SplitWeight {
  std::vector<int> mu_prime;
  std::vector<int> mu_double_prime;
  int n_prime = 0;         // -d = n' + l n''
  int n_double_prime = 0;
};
SplitWeight split_weight(const RootDatum& d, const WeightLabel& w, int l);

class CoprimalityViolation : public std::runtime_error {
 public:
  CoprimalityViolation(const std::string& what, int k, CyclotomicNum det)
      : std::runtime_error(what), k_(k), det_(std::move(det)) {}
  int k() const { return k_; }
  const CyclotomicNum& det() const { return det_; }

 private:
  int k_;
  CyclotomicNum det_;
};

/// h^{i,k} = sum_j b_ij(k) h~_{j,k}.
struct DualHeisenberg {
  int i = 0;
  int k = 1;
  int l = 1;
  std::vector<CyclotomicNum> coeffs;
};

/// The matrix M(k)_{ij} = [pi(h~_{i,k}), h~_{j,-k}] at q = zeta_l.
Matrix<CyclotomicNum> heisenberg_pairing_matrix(const RootDatum& d, int k, int l);
/// Throws CoprimalityViolation when M(k) is singular at zeta_l.
DualHeisenberg dual_heisenberg(const RootDatum& d, int i, int k, int l);
/// Action of h^{i,k} on a specialized vector.
SpecializedVector apply_dual(const RootDatum& d, const DualHeisenberg& h, const SpecializedVector& v);

/// Matrix of a lattice operator between two label lists (rows = target).
Matrix<LaurentZ> operator_matrix(const LatticeOperator& op, const std::vector<BasisLabel>& source,
                                 const std::vector<BasisLabel>& target);
Matrix<CyclotomicNum> specialize_matrix(const Matrix<LaurentZ>& m, int l);

struct HeisenbergKernel {
  std::vector<int> kernel_dims;   // index e-1 holds the dimension at energy e
  std::vector<int> singular_k;    // k <= depth whose dual construction failed
};

/// Joint kernel of {h~_{i,k} : k <= e} on the energy-e part of U^-(0).
/// l = 0 means generic q (rank over Q(q) by fraction-free elimination).
HeisenbergKernel heisenberg_kernel(const RootDatum& d, int l, int depth);

struct SingularSearch {
  int depth = 0;
  std::vector<int> stable_dims;                // index e-1: dimension at energy e
  std::vector<SpecializedVector> candidates;   // basis of the surviving subspaces
  bool found() const { return !candidates.empty(); }
};

/// For each energy 1 <= e <= depth: the largest subspace of the joint kernel of
/// every energy-lowering generator (x+-_{i,m}, h~_{i,m}, m >= 1) that is stable
/// under the zero modes x+-_{i,0}. Any proper graded submodule whose lowest
/// energy is e meets it nontrivially, so empty output certifies that no such
/// submodule starts within the window.
SingularSearch singular_vector_search(const RootDatum& d, int l, int depth);

struct IrreducibilityReport {
  int l = 0;
  int depth = 0;
  bool coprime = true;
  DetScan det_checks;
  HeisenbergKernel heisenberg;
  bool dual_delta_ok = true;     // [h^{i,k}, h~_{j,-k}] = delta_ij for all k <= depth
  bool weight_dims_ok = true;    // specialized dims equal generic multiplicities
  std::optional<SingularSearch> search;  // absent for generic q (l = 0)
  bool irreducible_to_depth() const;
};

IrreducibilityReport certify_irreducible(const RootDatum& d, int l, int depth);

/// [h^{i,k}, h~_{j,-k}] evaluated on v.
SpecializedVector dual_commutator(const RootDatum& d, const DualHeisenberg& h, int j, const SpecializedVector& v);

}  // namespace qfock
