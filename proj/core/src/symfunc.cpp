#include "qfock/symfunc.hpp"

#include <mutex>
#include <tuple>

namespace qfock {

SymVectorQ promote(const SymVectorZ& v) {
  SymVectorQ r(v.basis, v.colors);
  for (const auto& [p, c] : v.terms) r.terms.emplace(p, promote(c));
  return r;
}

SymVectorZ to_integral(const SymVectorQ& v) {
  SymVectorZ r(v.basis, v.colors);
  for (const auto& [p, c] : v.terms) r.terms.emplace(p, to_integral(c));
  return r;
}

LaurentZ pair_ht(const RootDatum& d, int i, int j, int k) {
  return pair_ht_over_k(d, i, j, k).scaled(BigInt(k));
}

LaurentZ pair_ht_over_k(const RootDatum& d, int i, int j, int k) {
  if (k < 1) throw std::invalid_argument("pair_ht: k must be positive");
  switch (d.cartan[i][j]) {
    case 2:
      return LaurentZ::monomial(k) + LaurentZ::monomial(-k);
    case -1:
      return LaurentZ(-1);
    default:
      return LaurentZ();
  }
}

namespace {

using Key = std::tuple<int, int, int>;

// h_c of a single color in the power-sum basis: c h_c = sum_{m=1}^{c} p_m h_{c-m}.
const SymVectorQ& complete_in_p(int colors, int color, int c) {
  static std::mutex mu;
  static std::map<Key, SymVectorQ> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({colors, color, c});
    if (it != cache.end()) return it->second;
  }
  SymVectorQ r = SymVectorQ::unit(SymBasis::PowerSum, colors);
  if (c > 0) {
    r = SymVectorQ(SymBasis::PowerSum, colors);
    for (int m = 1; m <= c; ++m) r += act_create(color, m, complete_in_p(colors, color, c - m));
    r = r.scaled(LaurentQ(BigRat(1, c)));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(Key{colors, color, c}, std::move(r)).first->second;
}

}  // namespace

const SymVectorZ& power_sum_in_h(int colors, int color, int k) {
  if (k < 1) throw std::invalid_argument("power_sum_in_h: k must be positive");
  static std::mutex mu;
  static std::map<Key, SymVectorZ> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({colors, color, k});
    if (it != cache.end()) return it->second;
  }
  // p_k = k h_k - sum_{m=1}^{k-1} h_{k-m} p_m.
  ColoredPartition hk(colors);
  hk.add_part(color, k);
  SymVectorZ r = SymVectorZ::monomial(SymBasis::Complete, hk, LaurentZ(k));
  for (int m = 1; m < k; ++m) r -= act_create(color, k - m, power_sum_in_h(colors, color, m));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(Key{colors, color, k}, std::move(r)).first->second;
}

const SymVectorZ& elementary_in_h(int colors, int color, int c) {
  if (c < 0) throw std::invalid_argument("elementary_in_h: negative degree");
  static std::mutex mu;
  static std::map<Key, SymVectorZ> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({colors, color, c});
    if (it != cache.end()) return it->second;
  }
  // P^-(u) = 1 / P~^-(u), so P^-_c = -sum_{t=1}^{c} P~_t P^-_{c-t}.
  SymVectorZ r = SymVectorZ::unit(SymBasis::Complete, colors);
  if (c > 0) {
    r = SymVectorZ(SymBasis::Complete, colors);
    for (int t = 1; t <= c; ++t) r -= act_create(color, t, elementary_in_h(colors, color, c - t));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(Key{colors, color, c}, std::move(r)).first->second;
}

SymVectorQ to_power_sums(const SymVectorQ& v) {
  if (v.basis != SymBasis::Complete) throw std::invalid_argument("to_power_sums: input must be in the Complete basis");
  SymVectorQ r(SymBasis::PowerSum, v.colors);
  for (const auto& [p, c] : v.terms) {
    SymVectorQ acc = SymVectorQ::unit(SymBasis::PowerSum, v.colors);
    for (int j = 0; j < p.colors(); ++j) {
      for (int part : p.parts(j)) acc = multiply(acc, complete_in_p(v.colors, j, part));
    }
    r += acc.scaled(c);
  }
  return r;
}

SymVectorQ to_h_basis(const SymVectorQ& v) {
  if (v.basis != SymBasis::PowerSum) throw std::invalid_argument("to_h_basis: input must be in the PowerSum basis");
  SymVectorQ r(SymBasis::Complete, v.colors);
  for (const auto& [p, c] : v.terms) {
    SymVectorZ acc = SymVectorZ::unit(SymBasis::Complete, v.colors);
    for (int j = 0; j < p.colors(); ++j) {
      for (int part : p.parts(j)) acc = multiply(acc, power_sum_in_h(v.colors, j, part));
    }
    r += promote(acc).scaled(c);
  }
  return r;
}

std::vector<LaurentZ> f_series(const RootDatum& d, int i, int j, int order) {
  std::vector<LaurentZ> f(static_cast<std::size_t>(order) + 1);
  switch (d.cartan[i][j]) {
    case 2:
      for (int m = 0; m <= order; ++m) f[m] = qint(m + 1);
      break;
    case -1:
      f[0] = LaurentZ(1);
      if (order >= 1) f[1] = LaurentZ(-1);
      break;
    default:
      f[0] = LaurentZ(1);
  }
  return f;
}

}  // namespace qfock
