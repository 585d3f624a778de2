#include "qfock/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qfock/linalg.hpp"
#include "qfock/parallel.hpp"
#include "qfock/symfunc.hpp"

namespace qfock {

// ---------------------------------------------------------------------------
// MultivarLaurent

MultivarLaurent MultivarLaurent::constant(int nvars, const BigInt& c) {
  MultivarLaurent p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultivarLaurent MultivarLaurent::variable(int nvars, int var, int power) {
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e.at(static_cast<std::size_t>(var)) = power;
  return monomial(std::move(e), BigInt(1));
}

MultivarLaurent MultivarLaurent::monomial(Exponents e, const BigInt& c) {
  MultivarLaurent p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

MultivarLaurent MultivarLaurent::from_laurent(const LaurentZ& poly, int nvars, int var) {
  MultivarLaurent p(nvars);
  for (const auto& [e, c] : poly.terms()) {
    Exponents x(static_cast<std::size_t>(nvars), 0);
    x.at(static_cast<std::size_t>(var)) = e;
    p.add_term(x, c);
  }
  return p;
}

void MultivarLaurent::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt MultivarLaurent::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

MultivarLaurent MultivarLaurent::operator-() const {
  MultivarLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultivarLaurent& MultivarLaurent::operator+=(const MultivarLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultivarLaurent& MultivarLaurent::operator-=(const MultivarLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, BigInt(-c));
  return *this;
}

MultivarLaurent operator*(const MultivarLaurent& a, const MultivarLaurent& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultivarLaurent: variable count mismatch");
  MultivarLaurent r(a.nvars_);
  MultivarLaurent::Exponents e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultivarLaurent MultivarLaurent::permuted(const std::vector<int>& perm) const {
  MultivarLaurent r(nvars_);
  Exponents x(static_cast<std::size_t>(nvars_));
  for (const auto& [e, c] : terms_) {
    for (std::size_t k = 0; k < e.size(); ++k) x[static_cast<std::size_t>(perm[k])] = e[k];
    r.add_term(x, c);
  }
  return r;
}

LaurentZ MultivarLaurent::collapse(int var) const {
  std::vector<LaurentZ::Term> t;
  for (const auto& [e, c] : terms_) {
    for (int k = 0; k < nvars_; ++k) {
      if (k != var && e[k] != 0) throw std::invalid_argument("MultivarLaurent::collapse: other variables occur");
    }
    t.emplace_back(e[var], c);
  }
  return LaurentZ::from_terms(std::move(t));
}

// ---------------------------------------------------------------------------
// Reports

bool SuiteReport::passed() const { return failures() == 0; }

long SuiteReport::failures() const {
  return std::count_if(results.begin(), results.end(),
                       [](const CheckResult& c) { return !c.passed && !c.informational; });
}

namespace {

int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) inv += p[a] > p[b];
  }
  return inv % 2 ? -1 : 1;
}

BigInt factorial(int r) {
  BigInt f = 1;
  for (int k = 2; k <= r; ++k) f *= k;
  return f;
}

// z_a - c * z_b in nvars variables, c a monomial coefficient q^qe.
MultivarLaurent linear_difference(int nvars, int a, int b, int qvar, int qe) {
  MultivarLaurent za = MultivarLaurent::variable(nvars, a);
  MultivarLaurent::Exponents e(static_cast<std::size_t>(nvars), 0);
  e[b] = 1;
  if (qvar >= 0) e[qvar] = qe;
  return za - MultivarLaurent::monomial(e, BigInt(1));
}

}  // namespace

CheckResult verify_lemma_id(int r) {
  if (r < 1) throw std::invalid_argument("verify_lemma_id: r must be positive");
  const int nv = r + 1;  // z_0..z_{r-1}, q
  const int qv = r;
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  MultivarLaurent lhs(nv);
  long perms = 0;
  do {
    MultivarLaurent prod = MultivarLaurent::constant(nv, BigInt(permutation_sign(perm)));
    for (int k = 0; k < r; ++k) {
      for (int s = k + 1; s < r; ++s) prod = prod * linear_difference(nv, perm[k], perm[s], qv, -2);
    }
    lhs += prod;
    ++perms;
  } while (std::next_permutation(perm.begin(), perm.end()));

  MultivarLaurent rhs = MultivarLaurent::from_laurent(qfact(r).shifted(-r * (r - 1) / 2), nv, qv);
  for (int k = 0; k < r; ++k) {
    for (int s = k + 1; s < r; ++s) rhs = rhs * linear_difference(nv, k, s, -1, 0);
  }
  const MultivarLaurent residual = lhs - rhs;
  CheckResult c;
  c.suite = "id";
  c.name = "r=" + std::to_string(r);
  c.checks = perms;
  c.residual_terms = static_cast<long>(residual.size());
  c.passed = residual.is_zero();
  c.detail = std::to_string(perms) + " permutations, " + std::to_string(lhs.size()) + " terms per side";
  return c;
}

std::vector<CheckResult> verify_rfact(int r, int max_degree) {
  if (r < 1) throw std::invalid_argument("verify_rfact: r must be positive");
  std::vector<CheckResult> out;
  MultivarLaurent v2 = MultivarLaurent::constant(r, BigInt(1));
  for (int k = 0; k < r; ++k) {
    for (int s = k + 1; s < r; ++s) {
      const auto diff = linear_difference(r, k, s, -1, 0);
      v2 = v2 * diff * diff;
    }
  }

  // (i) sum over tau of sgn(tau) sum over rho of z^{(delta + tau delta) o rho}.
  MultivarLaurent expansion(r);
  std::vector<int> tau(static_cast<std::size_t>(r));
  std::iota(tau.begin(), tau.end(), 0);
  do {
    std::vector<int> mu(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) mu[j] = (r - 1 - j) + (r - 1 - tau[j]);
    const int a = permutation_sign(tau);
    std::vector<int> rho(static_cast<std::size_t>(r));
    std::iota(rho.begin(), rho.end(), 0);
    do {
      MultivarLaurent::Exponents e(static_cast<std::size_t>(r));
      for (int j = 0; j < r; ++j) e[j] = mu[rho[j]];
      expansion += MultivarLaurent::monomial(e, BigInt(a));
    } while (std::next_permutation(rho.begin(), rho.end()));
  } while (std::next_permutation(tau.begin(), tau.end()));
  CheckResult part1;
  part1.suite = "rfact";
  part1.name = "r=" + std::to_string(r) + " expansion";
  part1.checks = 1;
  part1.residual_terms = static_cast<long>((v2 - expansion).size());
  part1.passed = part1.residual_terms == 0;
  out.push_back(part1);

  // (ii) products of elementary symmetric polynomials e_1..e_r of degree <= max_degree.
  std::vector<MultivarLaurent> elementary(static_cast<std::size_t>(r) + 1, MultivarLaurent(r));
  for (int k = 1; k <= r; ++k) {
    std::vector<bool> pick(static_cast<std::size_t>(r), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      MultivarLaurent::Exponents e(static_cast<std::size_t>(r), 0);
      for (int j = 0; j < r; ++j) e[j] = pick[j] ? 1 : 0;
      elementary[k] += MultivarLaurent::monomial(e, BigInt(1));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  const BigInt rf = factorial(r);
  CheckResult part2;
  part2.suite = "rfact";
  part2.name = "r=" + std::to_string(r) + " divisibility";
  long diagonal = 0;
  for (int deg = 0; deg <= max_degree; ++deg) {
    for (const auto& lam : partitions(deg)) {
      if (!lam.empty() && lam.front() > r) continue;
      MultivarLaurent g = MultivarLaurent::constant(r, BigInt(1));
      for (int part : lam) g = g * elementary[part];
      ++part2.checks;
      const MultivarLaurent product = v2 * g;
      for (const auto& [e, c] : product.terms()) {
        if (std::adjacent_find(e.begin(), e.end(), std::not_equal_to<int>()) != e.end()) continue;
        ++diagonal;
        if (!mpz_divisible_p(c.get_mpz_t(), rf.get_mpz_t())) {
          part2.passed = false;
          ++part2.residual_terms;
        }
      }
    }
  }
  part2.detail = std::to_string(part2.checks) + " symmetric G, " + std::to_string(diagonal) + " diagonal coefficients";
  out.push_back(part2);
  return out;
}

// ---------------------------------------------------------------------------
// Operator relations

namespace {

using Op = std::function<FockQ(const FockQ&)>;

// Memoized x-modes on basis labels.
class XCache {
 public:
  explicit XCache(const RootDatum& d) : d_(d) {}

  FockQ apply(int i, int sign, int n, const FockQ& v) {
    FockQ r;
    for (const auto& [b, c] : v.terms) {
      for (const auto& [nb, x] : image(i, sign, n, b).terms) r.add(nb, x * c);
    }
    return r;
  }

  FockZ apply(int i, int sign, int n, const FockZ& v) {
    FockZ r;
    for (const auto& [b, c] : v.terms) {
      for (const auto& [nb, x] : image_z(i, sign, n, b).terms) r.add(nb, x * c);
    }
    return r;
  }

 private:
  using Key = std::tuple<int, int, int, BasisLabel>;

  const FockZ& image_z(int i, int sign, int n, const BasisLabel& b) {
    Key key{i, sign, n, b};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = zcache_.find(key);
      if (it != zcache_.end()) return it->second;
    }
    FockZ img = apply_x(d_, i, sign, n, FockZ::basis(b));
    std::lock_guard<std::mutex> lock(mu_);
    return zcache_.emplace(std::move(key), std::move(img)).first->second;
  }

  const FockQ& image(int i, int sign, int n, const BasisLabel& b) {
    Key key{i, sign, n, b};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = qcache_.find(key);
      if (it != qcache_.end()) return it->second;
    }
    FockQ img = promote(image_z(i, sign, n, b));
    std::lock_guard<std::mutex> lock(mu_);
    return qcache_.emplace(std::move(key), std::move(img)).first->second;
  }

  const RootDatum& d_;
  std::mutex mu_;
  std::map<Key, FockZ> zcache_;
  std::map<Key, FockQ> qcache_;
};

LaurentQ lq(const LaurentZ& p) { return promote(p); }

LaurentQ rat(long num, long den) {
  BigRat x(num, den);
  x.canonicalize();
  return LaurentQ(x);
}

struct Tally {
  long checks = 0;
  long failures = 0;
  long residual_terms = 0;
  std::string witness;

  void record(const FockQ& residual, const std::string& what, const BasisLabel& v) {
    ++checks;
    if (residual.is_zero()) return;
    ++failures;
    residual_terms += static_cast<long>(residual.terms.size());
    if (witness.empty()) witness = what + " on " + to_string(v);
  }
  void merge(const Tally& o) {
    checks += o.checks;
    failures += o.failures;
    residual_terms += o.residual_terms;
    if (witness.empty()) witness = o.witness;
  }
};

std::string idx(const std::string& name, std::initializer_list<int> values) {
  std::ostringstream os;
  os << name << "(";
  bool first = true;
  for (int v : values) {
    if (!first) os << ",";
    first = false;
    os << v;
  }
  os << ")";
  return os.str();
}

const std::vector<std::string> kRelationNames = {
    "hh",           "hx_line1", "hx_line2", "hx_line2_printed", "torus_K", "torus_D",
    "xx_psi",       "quadratic", "serre",
};

}  // namespace

SuiteReport verify_drinfeld(const RootDatum& d, const DrinfeldOptions& opt) {
  XCache xc(d);
  const auto basis = enumerate_basis(d, opt.depth);
  const int n = d.rank;
  const LaurentQ qdiff = lq(LaurentZ::monomial(1) - LaurentZ::monomial(-1));

  std::vector<std::map<std::string, Tally>> per_vector(basis.size());
  parallel_for(basis.size(), [&](std::size_t idx_v) {
    const BasisLabel& label = basis[idx_v];
    const FockQ v = FockQ::basis(label);
    auto& t = per_vector[idx_v];
    auto X = [&](int i, int sign, int s, const FockQ& w) { return xc.apply(i, sign, s, w); };
    auto H = [&](int i, int k, const FockQ& w) { return apply_h(d, i, k, w); };

    // Heisenberg modes on v, shared across relations.
    std::map<std::pair<int, int>, FockQ> hv;
    for (int i = 0; i < n; ++i) {
      for (int r = 1; r <= opt.rmax; ++r) {
        hv[{i, r}] = H(i, r, v);
        hv[{i, -r}] = H(i, -r, v);
      }
    }

    // [h_{i,r}, h_{j,s}] = delta_{r,-s} (1/r) [r a_ij] [r]  (C = q).
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int r = -opt.rmax; r <= opt.rmax; ++r) {
          for (int s = -opt.rmax; s <= opt.rmax; ++s) {
            if (r == 0 || s == 0) continue;
            FockQ res = H(i, r, hv[{j, s}]) - H(j, s, hv[{i, r}]);
            if (r == -s) res -= v.scaled(lq(qint(r * d.cartan[i][j]) * qint(r)) * rat(1, r));
            t["hh"].record(res, idx("hh", {i + 1, j + 1, r, s}), label);
          }
        }
      }
    }

    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int r = 1; r <= opt.rmax; ++r) {
          const LaurentQ c = lq(qint(r * d.cartan[i][j])) * rat(1, r);
          for (int s = -opt.smax; s <= opt.smax; ++s) {
            // line 1: [h_{i,r}, x+_{j,s}] = c x+_{j,s+r}; [h_{i,-r}, x-_{j,s}] = -c x-_{j,s-r}.
            {
              FockQ res = H(i, r, X(j, 1, s, v)) - X(j, 1, s, hv[{i, r}]) - X(j, 1, s + r, v).scaled(c);
              t["hx_line1"].record(res, idx("hx_line1+", {i + 1, j + 1, r, s}), label);
              FockQ res2 = H(i, -r, X(j, -1, s, v)) - X(j, -1, s, hv[{i, -r}]) + X(j, -1, s - r, v).scaled(c);
              t["hx_line1"].record(res2, idx("hx_line1-", {i + 1, j + 1, r, s}), label);
            }
            // line 2 with C^{-+r} and index s -+ r.
            const FockQ hmx = H(i, -r, X(j, 1, s, v)) - X(j, 1, s, hv[{i, -r}]);
            const FockQ hpx = H(i, r, X(j, -1, s, v)) - X(j, -1, s, hv[{i, r}]);
            {
              FockQ res = hmx - X(j, 1, s - r, v).scaled(c.shifted(-r));
              t["hx_line2"].record(res, idx("hx_line2+", {i + 1, j + 1, r, s}), label);
              FockQ res2 = hpx + X(j, -1, s + r, v).scaled(c.shifted(r));
              t["hx_line2"].record(res2, idx("hx_line2-", {i + 1, j + 1, r, s}), label);
            }
            // line 2 as printed: C^{r} and index s +- r.
            {
              FockQ res = hmx - X(j, 1, s + r, v).scaled(c.shifted(r));
              t["hx_line2_printed"].record(res, idx("hx_line2_printed+", {i + 1, j + 1, r, s}), label);
              FockQ res2 = hpx + X(j, -1, s - r, v).scaled(c.shifted(r));
              t["hx_line2_printed"].record(res2, idx("hx_line2_printed-", {i + 1, j + 1, r, s}), label);
            }
          }
        }
      }
    }

    // K_i x+-_{j,s} K_i^-1 = q^{+-a_ij} x; D x_{j,s} D^-1 = q^s x; D h_{j,r} D^-1 = q^r h.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int sign : {1, -1}) {
          for (int s = -opt.smax; s <= opt.smax; ++s) {
            FockQ res = apply_torus(d, Torus::K, i, 1, X(j, sign, s, apply_torus(d, Torus::K, i, -1, v))) -
                        X(j, sign, s, v).scaled(LaurentQ::monomial(sign * d.cartan[i][j], BigRat(1)));
            t["torus_K"].record(res, idx(sign > 0 ? "K x+" : "K x-", {i + 1, j + 1, s}), label);
          }
        }
      }
      for (int sign : {1, -1}) {
        for (int s = -opt.smax; s <= opt.smax; ++s) {
          FockQ res = apply_torus(d, Torus::D, 0, 1, X(i, sign, s, apply_torus(d, Torus::D, 0, -1, v))) -
                      X(i, sign, s, v).scaled(LaurentQ::monomial(s, BigRat(1)));
          t["torus_D"].record(res, idx(sign > 0 ? "D x+" : "D x-", {i + 1, s}), label);
        }
      }
      for (int r = -opt.rmax; r <= opt.rmax; ++r) {
        if (r == 0) continue;
        FockQ res = apply_torus(d, Torus::D, 0, 1, H(i, r, apply_torus(d, Torus::D, 0, -1, v))) -
                    hv[{i, r}].scaled(LaurentQ::monomial(r, BigRat(1)));
        t["torus_D"].record(res, idx("D h", {i + 1, r}), label);
      }
    }

    // [x+_{i,r}, x-_{j,s}] (q - q^-1) = delta_ij (q^-s psi+_{r+s} - q^-r psi-_{r+s}).
    std::map<std::pair<int, int>, FockQ> psi;
    auto psi_v = [&](int i, int sign, int m) -> const FockQ& {
      auto it = psi.find({i * 2 + (sign > 0), m});
      if (it != psi.end()) return it->second;
      return psi.emplace(std::make_pair(i * 2 + (sign > 0), m), apply_psi(d, i, sign, m, v)).first->second;
    };
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int r = -opt.smax; r <= opt.smax; ++r) {
          for (int s = -opt.smax; s <= opt.smax; ++s) {
            FockQ res = (X(i, 1, r, X(j, -1, s, v)) - X(j, -1, s, X(i, 1, r, v))).scaled(qdiff);
            if (i == j) {
              const int m = r + s;
              if (m >= 0) res -= psi_v(i, 1, m).scaled(LaurentQ::monomial(-s, BigRat(1)));
              if (m <= 0) res += psi_v(i, -1, -m).scaled(LaurentQ::monomial(-r, BigRat(1)));
            }
            t["xx_psi"].record(res, idx("x+x-", {i + 1, j + 1, r, s}), label);
          }
        }
      }
    }

    // x_{i,r+1} x_{j,s} - q^{+-a} x_{j,s} x_{i,r+1} = q^{+-a} x_{i,r} x_{j,s+1} - x_{j,s+1} x_{i,r}.
    for (int sign : {1, -1}) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const LaurentQ qa = LaurentQ::monomial(sign * d.cartan[i][j], BigRat(1));
          for (int r = -opt.smax; r < opt.smax; ++r) {
            for (int s = -opt.smax; s < opt.smax; ++s) {
              FockQ res = X(i, sign, r + 1, X(j, sign, s, v)) - X(j, sign, s, X(i, sign, r + 1, v)).scaled(qa) -
                          X(i, sign, r, X(j, sign, s + 1, v)).scaled(qa) + X(j, sign, s + 1, X(i, sign, r, v));
              t["quadratic"].record(res, idx(sign > 0 ? "quad+" : "quad-", {i + 1, j + 1, r, s}), label);
            }
          }
        }
      }
    }

    // Serre: m = 1 - a_ij.
    const int sm = opt.serre_max;
    for (int sign : {1, -1}) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          const int a = d.cartan[i][j];
          for (int s = -sm; s <= sm; ++s) {
            if (a == 0) {
              for (int r1 = -sm; r1 <= sm; ++r1) {
                FockQ res = X(i, sign, r1, X(j, sign, s, v)) - X(j, sign, s, X(i, sign, r1, v));
                t["serre"].record(res, idx(sign > 0 ? "serre0+" : "serre0-", {i + 1, j + 1, r1, s}), label);
              }
              continue;
            }
            for (int r1 = -sm; r1 <= sm; ++r1) {
              for (int r2 = -sm; r2 <= sm; ++r2) {
                FockQ res;
                for (const auto& rr : {std::make_pair(r1, r2), std::make_pair(r2, r1)}) {
                  // k = 0: x_j x_i x_i; k = 1: x_i x_j x_i; k = 2: x_i x_i x_j (rightmost acts first).
                  const FockQ k0 = X(j, sign, s, X(i, sign, rr.first, X(i, sign, rr.second, v)));
                  const FockQ k1 = X(i, sign, rr.first, X(j, sign, s, X(i, sign, rr.second, v)));
                  const FockQ k2 = X(i, sign, rr.first, X(i, sign, rr.second, X(j, sign, s, v)));
                  res += k0;
                  res -= k1.scaled(lq(qint(2)));
                  res += k2;
                }
                t["serre"].record(res, idx(sign > 0 ? "serre+" : "serre-", {i + 1, j + 1, r1, r2, s}), label);
              }
            }
          }
        }
      }
    }
  });

  std::map<std::string, Tally> total;
  for (const auto& t : per_vector) {
    for (const auto& [name, tally] : t) total[name].merge(tally);
  }
  SuiteReport rep;
  rep.suite = "drinfeld";
  for (const auto& name : kRelationNames) {
    const Tally& t = total[name];
    CheckResult c;
    c.suite = "drinfeld";
    c.name = name;
    c.checks = t.checks;
    c.residual_terms = t.residual_terms;
    c.passed = t.failures == 0;
    c.informational = name == "hx_line2_printed";
    c.detail = std::to_string(basis.size()) + " basis vectors, " + std::to_string(t.failures) + " nonzero residuals";
    if (!t.witness.empty()) c.detail += "; first: " + t.witness;
    rep.results.push_back(std::move(c));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Product formula

namespace {

// Power-series inverse of f_{i,j}(u,v) in the variable uv, to the given order.
std::vector<LaurentZ> inverse_f(const RootDatum& d, int i, int j, int order) {
  const auto f = f_series(d, i, j, order);
  std::vector<LaurentZ> g(static_cast<std::size_t>(order) + 1);
  g[0] = LaurentZ(1);
  for (int m = 1; m <= order; ++m) {
    LaurentZ acc;
    for (int k = 1; k <= m; ++k) acc -= f[k] * g[m - k];
    g[m] = acc;
  }
  return g;
}

struct AnnTerm {
  std::vector<int> shift;  // z_k^{-shift_k}
  ColoredPartition lambda;
  LaurentZ coeff;
};

// Composite of the annihilation halves of X^+_i(z_1) ... X^+_i(z_r) on a monomial.
std::vector<AnnTerm> annihilate_all(const RootDatum& d, int i, int r, const ColoredPartition& lambda) {
  std::vector<AnnTerm> terms{{std::vector<int>(static_cast<std::size_t>(r), 0), ColoredPartition(d.rank), LaurentZ(1)}};
  for (int j = 0; j < d.rank; ++j) {
    if (d.cartan[i][j] == 0) {
      for (auto& t : terms) t.lambda.set_parts(j, lambda.parts(j));
      continue;
    }
    for (int part : lambda.parts(j)) {
      // u = q^-1 z_k^-1, v the color-j variable: weight of (z_k^-1)^t is g_t q^-t.
      const auto g = inverse_f(d, i, j, part);
      std::vector<AnnTerm> next;
      for (const auto& t : terms) {
        // Distribute a total removal among the r variables.
        std::function<void(int, int, AnnTerm)> rec = [&](int k, int left, AnnTerm cur) {
          if (k == r) {
            cur.lambda.add_part(j, left);
            next.push_back(std::move(cur));
            return;
          }
          for (int s = 0; s <= left; ++s) {
            if (g[s].is_zero()) continue;
            AnnTerm nxt = cur;
            nxt.shift[k] += s;
            nxt.coeff = nxt.coeff * g[s].shifted(-s);
            rec(k + 1, left - s, std::move(nxt));
          }
        };
        rec(0, part, t);
      }
      terms = std::move(next);
    }
  }
  return terms;
}

FockZ closed_form(const RootDatum& d, int i, const BasisLabel& state, const std::vector<int>& modes) {
  const int r = static_cast<int>(modes.size());
  const QElement alpha = simple_root(d, i);
  const int m = pairing_with_simple(d, state.eta, i);
  int eps = cocycle(d, r * alpha, state.eta);
  for (int k = 1; k < r; ++k) eps *= cocycle(d, alpha, k * alpha);

  // q^{-r(r-1)/2} [r]! prod_{k<s} (z_k - z_s)^2 (z_1...z_r)^m; variable r is q.
  const int nv = r + 1;
  MultivarLaurent pre = MultivarLaurent::from_laurent(qfact(r).shifted(-r * (r - 1) / 2), nv, r);
  for (int k = 0; k < r; ++k) {
    for (int s = k + 1; s < r; ++s) {
      MultivarLaurent diff = MultivarLaurent::variable(nv, k) - MultivarLaurent::variable(nv, s);
      pre = pre * diff * diff;
    }
  }
  FockZ out;
  const QElement eta = state.eta + r * alpha;
  for (const auto& a : annihilate_all(d, i, r, state.lambda)) {
    for (const auto& [e, c] : pre.terms()) {
      ColoredPartition lam = a.lambda;
      bool ok = true;
      for (int k = 0; k < r && ok; ++k) {
        const int created = -modes[k] - 1 - m - e[k] + a.shift[k];
        if (created < 0) ok = false;
        else lam.add_part(i, created);
      }
      if (!ok) continue;
      out.add(BasisLabel{lam, eta}, (a.coeff * LaurentZ::monomial(e[r], c)).scaled(BigInt(eps)));
    }
  }
  return out;
}

}  // namespace

CheckResult verify_product_formula(const RootDatum& d, int i, int r, const BasisLabel& state, int nmax) {
  if (r < 1) throw std::invalid_argument("verify_product_formula: r must be positive");
  CheckResult c;
  c.suite = "product";
  c.name = d.name() + " i=" + std::to_string(i + 1) + " r=" + std::to_string(r) + " " + to_string(state);
  const FockZ v = FockZ::basis(state);
  std::vector<int> modes(static_cast<std::size_t>(r), -nmax);
  // Nondecreasing mode tuples; both routes are symmetric in the modes.
  while (true) {
    const FockZ closed = closed_form(d, i, state, modes);
    FockZ iterated;
    std::vector<int> perm = modes;
    std::sort(perm.begin(), perm.end());
    std::vector<int> order(static_cast<std::size_t>(r));
    std::iota(order.begin(), order.end(), 0);
    do {
      FockZ w = v;
      for (int k = r - 1; k >= 0; --k) w = apply_x(d, i, 1, modes[order[k]], w);
      iterated += w;
    } while (std::next_permutation(order.begin(), order.end()));
    ++c.checks;
    const FockZ residual = closed - iterated;
    if (!residual.is_zero()) {
      c.passed = false;
      c.residual_terms += static_cast<long>(residual.terms.size());
      if (c.detail.empty()) {
        c.detail = "modes (";
        for (int k = 0; k < r; ++k) c.detail += (k ? "," : "") + std::to_string(modes[k]);
        c.detail += "): first differing term " + to_string(residual.terms.begin()->first);
      }
    }
    if (std::adjacent_find(modes.begin(), modes.end(), std::not_equal_to<int>()) == modes.end()) {
      // Diagonal: closed form = r! [r]! x^{(r)}.
      const FockZ divided = apply_x_divided(d, i, 1, modes[0], r, v);
      const FockZ expect = divided.scaled(qfact(r).scaled(factorial(r)));
      ++c.checks;
      if (!(expect == closed)) {
        c.passed = false;
        c.residual_terms += static_cast<long>((expect - closed).terms.size());
        if (c.detail.empty()) c.detail = "diagonal mode " + std::to_string(modes[0]) + " disagrees with the divided power";
      }
    }
    int k = r - 1;
    while (k >= 0 && modes[k] == nmax) --k;
    if (k < 0) break;
    ++modes[k];
    for (int t = k + 1; t < r; ++t) modes[t] = modes[k];
  }
  return c;
}

SuiteReport verify_product_suite(const RootDatum& d, int rmax, int depth, int nmax) {
  const auto basis = enumerate_basis(d, depth);
  std::vector<std::tuple<int, int, std::size_t>> jobs;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (int i = 0; i < d.rank; ++i) {
      for (int r = 1; r <= rmax; ++r) jobs.emplace_back(i, r, b);
    }
  }
  std::vector<CheckResult> results(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t k) {
    auto [i, r, b] = jobs[k];
    results[k] = verify_product_formula(d, i, r, basis[b], nmax);
  });
  return SuiteReport{"product", std::move(results)};
}

// ---------------------------------------------------------------------------
// Lattice, r=1 action, character

SuiteReport verify_lattice(const RootDatum& d, int depth, int nmax, int rmax) {
  const auto basis = enumerate_basis(d, depth);
  struct Job {
    int i, sign, n;
  };
  std::vector<Job> jobs;
  for (int i = 0; i < d.rank; ++i) {
    for (int sign : {1, -1}) {
      for (int n = -nmax; n <= nmax; ++n) jobs.push_back({i, sign, n});
    }
  }
  XCache xc(d);
  // failures[job][r-1]
  std::vector<std::vector<long>> fails(jobs.size(), std::vector<long>(static_cast<std::size_t>(rmax), 0));
  std::vector<std::string> witness(jobs.size());
  std::mutex mu;
  parallel_for(jobs.size() * basis.size(), [&](std::size_t k) {
    const Job& job = jobs[k / basis.size()];
    const BasisLabel& b = basis[k % basis.size()];
    FockZ w = FockZ::basis(b);
    for (int r = 1; r <= rmax; ++r) {
      w = xc.apply(job.i, job.sign, job.n, w);
      if (r == 1) continue;
      const LaurentZ f = qfact(r);
      for (const auto& [nb, c] : w.terms) {
        if (!exact_div(c, f)) {
          std::lock_guard<std::mutex> lock(mu);
          ++fails[k / basis.size()][r - 1];
          if (witness[k / basis.size()].empty()) witness[k / basis.size()] = "r=" + std::to_string(r) + " on " + to_string(b);
          break;
        }
      }
    }
  });
  SuiteReport rep;
  rep.suite = "lattice";
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    for (int r = 1; r <= rmax; ++r) {
      CheckResult c;
      c.suite = "lattice";
      c.name = std::string(jobs[j].sign > 0 ? "x+" : "x-") + " i=" + std::to_string(jobs[j].i + 1) +
               " n=" + std::to_string(jobs[j].n) + " r=" + std::to_string(r);
      c.checks = static_cast<long>(basis.size());
      c.residual_terms = fails[j][r - 1];
      c.passed = fails[j][r - 1] == 0;
      c.detail = std::to_string(basis.size()) + " basis vectors of energy <= " + std::to_string(depth);
      if (!c.passed) c.detail += "; first failure " + witness[j];
      rep.results.push_back(std::move(c));
    }
  }
  return rep;
}

SuiteReport verify_r1(const RootDatum& d, int range) {
  std::vector<QElement> etas;
  QElement cur(static_cast<std::size_t>(d.rank), -range);
  while (true) {
    etas.push_back(cur);
    int k = d.rank - 1;
    while (k >= 0 && cur[k] == range) cur[k--] = -range;
    if (k < 0) break;
    ++cur[k];
  }
  SuiteReport rep;
  rep.suite = "r1";
  for (int i = 0; i < d.rank; ++i) {
    for (int sign : {1, -1}) {
      CheckResult c;
      c.suite = "r1";
      c.name = std::string(sign > 0 ? "x+" : "x-") + " i=" + std::to_string(i + 1);
      const QElement alpha = simple_root(d, i);
      for (const auto& eta : etas) {
        const int m = pairing_with_simple(d, eta, i);
        const int n = sign > 0 ? -m - 1 : m - 1;
        const FockZ got = apply_x(d, i, sign, n, FockZ::basis({ColoredPartition(d.rank), eta}));
        const FockZ expect = FockZ::basis({ColoredPartition(d.rank), sign > 0 ? eta + alpha : eta - alpha},
                                          LaurentZ(cocycle(d, sign > 0 ? alpha : -alpha, eta)));
        ++c.checks;
        if (!(got == expect)) {
          c.passed = false;
          ++c.residual_terms;
          if (c.detail.empty()) c.detail = "first mismatch at " + to_string(BasisLabel{ColoredPartition(d.rank), eta});
        }
      }
      if (c.passed) c.detail = std::to_string(etas.size()) + " lattice points";
      rep.results.push_back(std::move(c));
    }
  }
  return rep;
}

std::vector<BigInt> colored_partition_counts(int colors, int kmax) {
  std::vector<BigInt> c(static_cast<std::size_t>(kmax) + 1, 0);
  c[0] = 1;
  // Multiply by 1/(1 - x^m) once per color and part size.
  for (int col = 0; col < colors; ++col) {
    for (int m = 1; m <= kmax; ++m) {
      for (int k = m; k <= kmax; ++k) c[k] += c[k - m];
    }
  }
  return c;
}

SuiteReport verify_character(const RootDatum& d, int depth) {
  SuiteReport rep;
  rep.suite = "character";
  const auto counts = colored_partition_counts(d.rank, depth);

  // Coordinates of eta are bounded by sqrt((eta,eta) (A^-1)_ii) (Cauchy-Schwarz with fundamental weights).
  Matrix<BigRat> a(static_cast<std::size_t>(d.rank), std::vector<BigRat>(static_cast<std::size_t>(d.rank)));
  for (int i = 0; i < d.rank; ++i) {
    for (int j = 0; j < d.rank; ++j) a[i][j] = d.cartan[i][j];
  }
  const auto ainv = inverse(a, BigRat(0));
  std::vector<int> bound(static_cast<std::size_t>(d.rank));
  for (int i = 0; i < d.rank; ++i) {
    const double x = 2.0 * depth * (*ainv)[i][i].get_d();
    bound[i] = static_cast<int>(std::floor(std::sqrt(x) + 1e-9));
  }
  std::map<WeightLabel, long> oracle;
  QElement eta(static_cast<std::size_t>(d.rank));
  std::function<void(int)> rec = [&](int k) {
    if (k == d.rank) {
      const int nrm = norm(d, eta);
      if (pairing(d, eta, eta) < 0) throw std::logic_error("non-positive form");
      for (int e = nrm; e <= depth; ++e) oracle[WeightLabel{eta, e}] = counts[e - nrm].get_si();
      return;
    }
    for (int c = -bound[k]; c <= bound[k]; ++c) {
      eta[k] = c;
      rec(k + 1);
    }
  };
  rec(0);
  std::erase_if(oracle, [](const auto& kv) { return kv.second == 0; });

  const auto ch = character(d, depth);
  CheckResult weights;
  weights.suite = "character";
  weights.name = d.name() + " weights depth=" + std::to_string(depth);
  weights.checks = static_cast<long>(oracle.size());
  for (const auto& [w, mult] : oracle) {
    auto it = ch.find(w);
    if (it == ch.end() || it->second != mult) {
      weights.passed = false;
      ++weights.residual_terms;
    }
  }
  for (const auto& [w, mult] : ch) {
    if (!oracle.count(w)) {
      weights.passed = false;
      ++weights.residual_terms;
    }
  }
  weights.detail = std::to_string(oracle.size()) + " weights";
  rep.results.push_back(weights);

  CheckResult totals;
  totals.suite = "character";
  totals.name = d.name() + " totals by energy";
  std::vector<long> by_energy(static_cast<std::size_t>(depth) + 1, 0);
  for (const auto& [w, mult] : ch) by_energy[w.energy] += mult;
  std::vector<long> expect(static_cast<std::size_t>(depth) + 1, 0);
  for (const auto& [w, mult] : oracle) expect[w.energy] += mult;
  totals.checks = depth + 1;
  totals.passed = by_energy == expect;
  for (std::size_t e = 0; e < by_energy.size(); ++e) totals.detail += (e ? "," : "") + std::to_string(by_energy[e]);
  rep.results.push_back(totals);
  return rep;
}

// ---------------------------------------------------------------------------
// Power-sum route for vertex operators

FockQ apply_x_via_power_sums(const RootDatum& d, int i, int sign, int n, const FockQ& v) {
  const int colors = d.rank;
  FockQ out;
  for (const auto& [label, coeff] : v.terms) {
    const int m = pairing_with_simple(d, label.eta, i);
    const QElement alpha = simple_root(d, i);
    const int eps = cocycle(d, sign > 0 ? alpha : -alpha, label.eta);
    const QElement eta = sign > 0 ? label.eta + alpha : label.eta - alpha;
    const int base = sign > 0 ? -n - 1 - m : -n - 1 + m;
    const SymVectorQ start = to_power_sums(SymVectorQ::monomial(SymBasis::Complete, label.lambda, coeff));

    for (int total = 0; total <= label.lambda.total(); ++total) {
      const int c = base + total;
      if (c < 0) continue;
      // Coefficient of z^-total in exp(sum_k a_k D_k z^-k), a_k = -q^-k/k (X+) or 1/k (X-).
      SymVectorQ ann(SymBasis::PowerSum, colors);
      for (const auto& mu : partitions(total)) {
        SymVectorQ w = start;
        LaurentQ weight(1);
        for (const auto& [part, mult] : multiplicities(mu)) {
          const LaurentQ ak = sign > 0 ? LaurentQ::monomial(-part, BigRat(-1, part)) : LaurentQ(BigRat(1, part));
          for (int t = 0; t < mult; ++t) {
            w = act_annihilate(d, i, part, w);
            weight *= ak;
          }
          weight = weight.scaled(BigRat(1) / BigRat(factorial(mult)));
        }
        ann += w.scaled(weight);
      }
      if (ann.is_zero()) continue;
      // Coefficient of z^c in exp(sum_k b_k p_{i,k} z^k), b_k = 1/k (X+) or -q^k/k (X-).
      SymVectorQ create(SymBasis::PowerSum, colors);
      for (const auto& mu : partitions(c)) {
        ColoredPartition p(colors);
        LaurentQ weight(1);
        for (const auto& [part, mult] : multiplicities(mu)) {
          const LaurentQ bk = sign > 0 ? LaurentQ(BigRat(1, part)) : LaurentQ::monomial(part, BigRat(-1, part));
          for (int t = 0; t < mult; ++t) {
            p.add_part(i, part);
            weight *= bk;
          }
          weight = weight.scaled(BigRat(1) / BigRat(factorial(mult)));
        }
        create.add(p, weight);
      }
      const SymVectorQ result = to_h_basis(multiply(ann, create));
      for (const auto& [p, x] : result.terms) out.add(BasisLabel{p, eta}, x.scaled(BigRat(eps)));
    }
  }
  return out;
}

}  // namespace qfock
