#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_l) = Q[x] / Phi_l(x).

#include <string>
#include <vector>

#include "qfock/laurent.hpp"

namespace qfock {

/// Integer coefficients of the l-th cyclotomic polynomial, ascending degree.
const std::vector<BigInt>& cyclotomic_polynomial(int l);
int euler_phi(int l);

/// An element of Q(zeta_l), stored as the reduced residue modulo Phi_l
/// (exactly euler_phi(l) rational coefficients).
class CyclotomicNum {
 public:
  explicit CyclotomicNum(int l = 1);
  CyclotomicNum(int l, const BigRat& c);
  /// Residue class of sum_k coeffs[k] x^k; any length is accepted.
  static CyclotomicNum from_polynomial(int l, const std::vector<BigRat>& coeffs);
  /// zeta^e for any integer e.
  static CyclotomicNum zeta_power(int l, int e);

  int order() const { return order_; }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;

  CyclotomicNum operator-() const;
  CyclotomicNum& operator+=(const CyclotomicNum& o);
  CyclotomicNum& operator-=(const CyclotomicNum& o);
  CyclotomicNum& operator*=(const CyclotomicNum& o);
  friend CyclotomicNum operator+(CyclotomicNum a, const CyclotomicNum& b) { return a += b; }
  friend CyclotomicNum operator-(CyclotomicNum a, const CyclotomicNum& b) { return a -= b; }
  friend CyclotomicNum operator*(CyclotomicNum a, const CyclotomicNum& b) { return a *= b; }
  friend bool operator==(const CyclotomicNum& a, const CyclotomicNum& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplicative inverse; throws std::domain_error on zero.
  CyclotomicNum inverse() const;

 private:
  void check_compatible(const CyclotomicNum& o) const;

  int order_;
  std::vector<BigRat> coeffs_;
};

/// Ring homomorphism q -> zeta_l.
CyclotomicNum specialize(const LaurentZ& p, int l);
CyclotomicNum specialize(const LaurentQ& p, int l);
/// q -> zeta_l^k, computed inside Q(zeta_l).
CyclotomicNum specialize_at_power(const LaurentZ& p, int l, int k);

/// Text form "a0+a1*z+a2*z^2" in the power basis of zeta.
std::string to_string(const CyclotomicNum& c);

}  // namespace qfock
