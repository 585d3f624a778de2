#pragma once

// Colored symmetric functions modelling U^-(0) and its Heisenberg action.
//
// Complete basis: monomials in the generators P~_{i,c} (complete homogeneous
// functions h_c in color i). This is the integral basis of the lattice.
// PowerSum basis: monomials in h~_{i,-k} (power sums p_k in color i).

#include <map>
#include <stdexcept>
#include <vector>

#include "qfock/laurent.hpp"
#include "qfock/partition.hpp"
#include "qfock/root_datum.hpp"

namespace qfock {

enum class SymBasis { Complete, PowerSum };

template <class C>
using TermMap = std::map<ColoredPartition, Laurent<C>>;

template <class K, class C>
void accumulate(std::map<K, Laurent<C>>& terms, const K& key, const Laurent<C>& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms.erase(it);
  }
}

template <class C>
struct SymVector {
  SymBasis basis = SymBasis::Complete;
  int colors = 0;
  TermMap<C> terms;

  SymVector() = default;
  SymVector(SymBasis b, int n) : basis(b), colors(n) {}

  static SymVector unit(SymBasis b, int n) {
    SymVector v(b, n);
    v.terms.emplace(ColoredPartition(n), Laurent<C>(1));
    return v;
  }
  static SymVector monomial(SymBasis b, const ColoredPartition& p, const Laurent<C>& c = Laurent<C>(1)) {
    SymVector v(b, p.colors());
    accumulate(v.terms, p, c);
    return v;
  }

  bool is_zero() const { return terms.empty(); }
  void add(const ColoredPartition& p, const Laurent<C>& c) { accumulate(terms, p, c); }

  SymVector& operator+=(const SymVector& o) {
    check(o);
    for (const auto& [p, c] : o.terms) accumulate(terms, p, c);
    return *this;
  }
  SymVector& operator-=(const SymVector& o) {
    check(o);
    for (const auto& [p, c] : o.terms) accumulate(terms, p, Laurent<C>(-c));
    return *this;
  }
  friend SymVector operator+(SymVector a, const SymVector& b) { return a += b; }
  friend SymVector operator-(SymVector a, const SymVector& b) { return a -= b; }
  friend bool operator==(const SymVector& a, const SymVector& b) {
    return a.basis == b.basis && a.terms == b.terms;
  }

  SymVector scaled(const Laurent<C>& c) const {
    SymVector r(basis, colors);
    if (c.is_zero()) return r;
    for (const auto& [p, x] : terms) r.terms.emplace(p, x * c);
    return r;
  }

  SymVector component(int energy) const {
    SymVector r(basis, colors);
    for (const auto& [p, c] : terms) {
      if (p.total() == energy) r.terms.emplace(p, c);
    }
    return r;
  }

 private:
  void check(const SymVector& o) const {
    if (o.basis != basis) throw std::invalid_argument("SymVector: mixed bases");
  }
};

using SymVectorZ = SymVector<BigInt>;
using SymVectorQ = SymVector<BigRat>;

SymVectorQ promote(const SymVectorZ& v);
/// Throws std::domain_error when a coefficient is not in Z[q, q^-1].
SymVectorZ to_integral(const SymVectorQ& v);

/// Monomial concatenation; both factors must share a basis.
template <class C>
SymVector<C> multiply(const SymVector<C>& a, const SymVector<C>& b) {
  if (a.basis != b.basis) throw std::invalid_argument("multiply: mixed bases");
  SymVector<C> r(a.basis, a.colors);
  for (const auto& [pa, ca] : a.terms) {
    for (const auto& [pb, cb] : b.terms) {
      ColoredPartition p = pa;
      for (int j = 0; j < pb.colors(); ++j) {
        for (int part : pb.parts(j)) p.add_part(j, part);
      }
      r.add(p, ca * cb);
    }
  }
  return r;
}

/// [pi(h~_{i,k}), h~_{j,-k}]: k(q^k + q^-k), -k or 0 according to a_ij.
LaurentZ pair_ht(const RootDatum& d, int i, int j, int k);
/// pair_ht / k, which is always integral.
LaurentZ pair_ht_over_k(const RootDatum& d, int i, int j, int k);

/// Newton transitions between the two bases.
SymVectorQ to_power_sums(const SymVectorQ& v);
SymVectorQ to_h_basis(const SymVectorQ& v);

/// p_k of one color written in the Complete basis (integral).
const SymVectorZ& power_sum_in_h(int colors, int color, int k);
/// P^-_{i,c} = coefficient of u^c in exp(-sum_k h~_{i,-k} u^k / k), Complete basis.
const SymVectorZ& elementary_in_h(int colors, int color, int c);

/// The derivation pi(h~_{i,k}) for k >= 1, in either basis.
template <class C>
SymVector<C> act_annihilate(const RootDatum& d, int i, int k, const SymVector<C>& v);

/// Multiplication by the degree-k generator of color i (h~_{i,-k} or P~_{i,k}).
template <class C>
SymVector<C> act_create(int i, int k, const SymVector<C>& v) {
  if (k < 1) throw std::invalid_argument("act_create: k must be positive");
  SymVector<C> r(v.basis, v.colors);
  for (const auto& [p, c] : v.terms) {
    ColoredPartition q = p;
    q.add_part(i, k);
    r.add(q, c);
  }
  return r;
}

/// Coefficients of (uv)^m, m = 0..order, in f_{i,j}(u, v).
std::vector<LaurentZ> f_series(const RootDatum& d, int i, int j, int order);

namespace detail {

template <class C>
Laurent<C> lift(const LaurentZ& p) {
  if constexpr (std::is_same_v<C, BigInt>) {
    return p;
  } else {
    return promote(p);
  }
}

}  // namespace detail

template <class C>
SymVector<C> act_annihilate(const RootDatum& d, int i, int k, const SymVector<C>& v) {
  if (k < 1) throw std::invalid_argument("act_annihilate: k must be positive");
  SymVector<C> r(v.basis, v.colors);
  for (const auto& [p, c] : v.terms) {
    for (int j = 0; j < p.colors(); ++j) {
      if (d.cartan[i][j] == 0) continue;
      if (v.basis == SymBasis::PowerSum) {
        const int mult = p.multiplicity(j, k);
        if (mult == 0) continue;
        ColoredPartition q = p;
        q.remove_part(j, k);
        r.add(q, c * detail::lift<C>(pair_ht(d, i, j, k).scaled(BigInt(mult))));
      } else {
        const LaurentZ w = pair_ht_over_k(d, i, j, k);
        for (const auto& [part, mult] : multiplicities(p.parts(j))) {
          if (part < k) continue;
          ColoredPartition q = p;
          q.remove_part(j, part);
          q.add_part(j, part - k);
          r.add(q, c * detail::lift<C>(w.scaled(BigInt(mult))));
        }
      }
    }
  }
  return r;
}

}  // namespace qfock
