#pragma once

// Sparse Laurent polynomials in one variable q with exact coefficients.
//
// Two coefficient rings are supported: BigInt (the ring Z[q, q^-1]) and
// BigRat (Q[q, q^-1]). The coefficient type is the ring flag; moving between
// the two is explicit through promote() / to_integral().

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qfock {

using BigInt = mpz_class;
using BigRat = mpq_class;

template <class Coeff>
class Laurent {
 public:
  using coeff_type = Coeff;
  using Term = std::pair<int, Coeff>;

  Laurent() = default;
  Laurent(long c) {  // NOLINT: constants embed implicitly
    if (c != 0) terms_.emplace_back(0, Coeff(c));
  }
  explicit Laurent(const Coeff& c) {
    if (sgn(c) != 0) terms_.emplace_back(0, c);
  }

  static Laurent monomial(int exponent, const Coeff& c = Coeff(1)) {
    Laurent p;
    if (sgn(c) != 0) p.terms_.emplace_back(exponent, c);
    return p;
  }

  /// Builds from arbitrary (exponent, coefficient) pairs; repeated exponents
  /// are summed and zeros dropped.
  static Laurent from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Laurent p;
    for (auto& [e, c] : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == e) {
        p.terms_.back().second += c;
        if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
      } else if (sgn(c) != 0) {
        p.terms_.emplace_back(e, std::move(c));
      }
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }

  Coeff coeff(int exponent) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), exponent,
        [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return Coeff(0);
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  Laurent& operator+=(const Laurent& o) { return *this = add(*this, o, false); }
  Laurent& operator-=(const Laurent& o) { return *this = add(*this, o, true); }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    return add(a, b, false);
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) {
    return add(a, b, true);
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1) return a.scaled(b.terms_[0].second).shifted(b.terms_[0].first);
    if (a.terms_.size() == 1) return b.scaled(a.terms_[0].second).shifted(a.terms_[0].first);
    const int lo = a.min_exponent() + b.min_exponent();
    const int hi = a.max_exponent() + b.max_exponent();
    std::vector<Coeff> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        auto& slot = acc[static_cast<std::size_t>(ea + eb - lo)];
        slot += ca * cb;
      }
    }
    Laurent r;
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (sgn(acc[k]) != 0) r.terms_.emplace_back(lo + static_cast<int>(k), std::move(acc[k]));
    }
    return r;
  }

  Laurent scaled(const Coeff& c) const {
    if (sgn(c) == 0) return {};
    Laurent r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  /// Multiplication by q^e.
  Laurent shifted(int e) const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.first += e;
    return r;
  }

  /// The bar involution q -> q^-1.
  Laurent bar() const {
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      r.terms_.emplace_back(-it->first, it->second);
    }
    return r;
  }

  /// Substitution q -> q^k for k != 0.
  Laurent substitute_power(int k) const {
    if (k == 0) throw std::invalid_argument("substitute_power: k must be nonzero");
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& [e, c] : terms_) t.emplace_back(e * k, c);
    return from_terms(std::move(t));
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.terms_ == b.terms_;
  }

 private:
  static Laurent add(const Laurent& a, const Laurent& b, bool subtract) {
    Laurent r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->first < ia->first) {
        r.terms_.emplace_back(ib->first, subtract ? Coeff(-ib->second) : ib->second);
        ++ib;
      } else {
        Coeff c = subtract ? Coeff(ia->second - ib->second) : Coeff(ia->second + ib->second);
        if (sgn(c) != 0) r.terms_.emplace_back(ia->first, std::move(c));
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

using LaurentZ = Laurent<BigInt>;
using LaurentQ = Laurent<BigRat>;

LaurentQ promote(const LaurentZ& p);
bool is_integral(const LaurentQ& p);
/// Demotion to Z[q, q^-1]; throws std::domain_error on a non-unit denominator.
LaurentZ to_integral(const LaurentQ& p);
std::optional<LaurentZ> try_integral(const LaurentQ& p);

// Balanced q-numbers.
LaurentZ qint(int m);
LaurentZ qfact(int m);
LaurentZ qbinom(int m, int r);

/// Quotient of num by den when den divides num exactly in the coefficient
/// ring, std::nullopt otherwise. Throws std::domain_error if den is zero.
std::optional<LaurentZ> exact_div(const LaurentZ& num, const LaurentZ& den);
std::optional<LaurentQ> exact_div(const LaurentQ& num, const LaurentQ& den);

// Canonical text form: ascending exponents, explicit signs, e.g.
// "q^-2+1+q^2", "-3/2*q", "0".
std::string to_string(const LaurentZ& p);
std::string to_string(const LaurentQ& p);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

LaurentQ parse_laurent(std::string_view text);
LaurentZ parse_laurent_z(std::string_view text);

}  // namespace qfock
