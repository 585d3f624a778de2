#include "qfock/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qfock {

namespace {

using RatPoly = std::vector<BigRat>;

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::vector<BigInt> int_poly_divexact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  // den is monic; the division is exact for cyclotomic factors of x^l - 1.
  const std::size_t dn = den.size() - 1;
  std::vector<BigInt> quot(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    const BigInt c = num[k];
    quot[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (const auto& r : num) {
    if (r != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
  }
  return quot;
}

std::vector<BigInt> compute_cyclotomic(int l) {
  std::vector<BigInt> p(static_cast<std::size_t>(l) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(l)] = 1;
  for (int d = 1; d < l; ++d) {
    if (l % d == 0) p = int_poly_divexact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

/// Reduces modulo the monic polynomial phi (integer coefficients).
RatPoly reduce_mod(RatPoly p, const std::vector<BigInt>& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = p.size(); k-- > deg;) {
    if (sgn(p[k]) == 0) continue;
    const BigRat c = p[k];
    for (std::size_t j = 0; j <= deg; ++j) p[k - deg + j] -= c * phi[j];
  }
  p.resize(deg);
  return p;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// (quotient, remainder) over Q[x]; b must be nonzero and trimmed.
std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  RatPoly q(a.size() - b.size() + 1);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    const BigRat c = a[k] / b.back();
    q[k - (b.size() - 1)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k - (b.size() - 1) + j] -= c * b[j];
    if (k == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(int l) {
  if (l < 1) throw std::invalid_argument("cyclotomic_polynomial: l must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<BigInt>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;
  }
  auto p = compute_cyclotomic(l);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(l, std::move(p)).first->second;
}

int euler_phi(int l) { return static_cast<int>(cyclotomic_polynomial(l).size()) - 1; }

CyclotomicNum::CyclotomicNum(int l) : order_(l), coeffs_(static_cast<std::size_t>(euler_phi(l))) {}

CyclotomicNum::CyclotomicNum(int l, const BigRat& c) : CyclotomicNum(l) { coeffs_[0] = c; }

CyclotomicNum CyclotomicNum::from_polynomial(int l, const std::vector<BigRat>& coeffs) {
  CyclotomicNum r(l);
  r.coeffs_ = reduce_mod(coeffs, cyclotomic_polynomial(l));
  return r;
}

CyclotomicNum CyclotomicNum::zeta_power(int l, int e) {
  int r = e % l;
  if (r < 0) r += l;
  RatPoly p(static_cast<std::size_t>(r) + 1);
  p[static_cast<std::size_t>(r)] = 1;
  return from_polynomial(l, p);
}

bool CyclotomicNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool CyclotomicNum::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return false;
  }
  return true;
}

void CyclotomicNum::check_compatible(const CyclotomicNum& o) const {
  if (o.order_ != order_) throw std::invalid_argument("CyclotomicNum: mixed orders of zeta");
}

CyclotomicNum CyclotomicNum::operator-() const {
  CyclotomicNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNum& CyclotomicNum::operator+=(const CyclotomicNum& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

CyclotomicNum& CyclotomicNum::operator-=(const CyclotomicNum& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

CyclotomicNum& CyclotomicNum::operator*=(const CyclotomicNum& o) {
  check_compatible(o);
  coeffs_ = reduce_mod(poly_mul(coeffs_, o.coeffs_), cyclotomic_polynomial(order_));
  return *this;
}

CyclotomicNum CyclotomicNum::inverse() const {
  if (is_zero()) throw std::domain_error("CyclotomicNum::inverse: zero has no inverse");
  // Extended Euclid on (phi, a): track s with s*a = r (mod phi).
  const auto& phi_int = cyclotomic_polynomial(order_);
  RatPoly r0(phi_int.begin(), phi_int.end());
  RatPoly r1 = coeffs_;
  trim(r1);
  RatPoly s0;
  RatPoly s1{BigRat(1)};
  while (!(r1.size() == 1)) {
    auto [quot, rem] = poly_divmod(r0, r1);
    RatPoly s2 = poly_sub(s0, poly_mul(quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw std::logic_error("CyclotomicNum::inverse: non-unit residue");
  }
  for (auto& c : s1) c /= r1[0];
  return from_polynomial(order_, s1);
}

namespace {

template <class C>
CyclotomicNum specialize_impl(const Laurent<C>& p, int l, int k) {
  if (l < 1) throw std::invalid_argument("specialize: l must be positive");
  RatPoly folded(static_cast<std::size_t>(l));
  for (const auto& [e, c] : p.terms()) {
    long r = (static_cast<long>(e) * k) % l;
    if (r < 0) r += l;
    folded[static_cast<std::size_t>(r)] += c;
  }
  return CyclotomicNum::from_polynomial(l, folded);
}

}  // namespace

CyclotomicNum specialize(const LaurentZ& p, int l) { return specialize_impl(p, l, 1); }
CyclotomicNum specialize(const LaurentQ& p, int l) { return specialize_impl(p, l, 1); }
CyclotomicNum specialize_at_power(const LaurentZ& p, int l, int k) {
  return specialize_impl(p, l, k);
}

std::string to_string(const CyclotomicNum& c) {
  std::string out;
  for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
    const BigRat& a = c.coeffs()[k];
    if (sgn(a) == 0) continue;
    const bool negative = sgn(a) < 0;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const BigRat mag = negative ? BigRat(-a) : a;
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "z";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace qfock
