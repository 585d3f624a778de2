#include "qfock/roots_of_unity.hpp"

#include <numeric>

#include "qfock/parallel.hpp"

namespace qfock {

void SpecializedVector::add(const BasisLabel& b, const CyclotomicNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

SpecializedVector specialize_vector(const FockZ& v, int l) {
  SpecializedVector r;
  r.l = l;
  for (const auto& [b, c] : v.terms) r.add(b, specialize(c, l));
  return r;
}

SpecializedVector specialize_vector(const FockQ& v, int l) {
  if (!in_lattice(v)) throw std::domain_error("specialize_vector: input is not a lattice vector");
  return specialize_vector(to_integral(v), l);
}

SpecializedVector push_forward(const LatticeOperator& op, const SpecializedVector& v) {
  SpecializedVector r;
  r.l = v.l;
  for (const auto& [b, c] : v.terms) {
    const FockZ image = op(FockZ::basis(b));
    for (const auto& [nb, x] : image.terms) r.add(nb, specialize(x, v.l) * c);
  }
  return r;
}

namespace {

std::pair<int, int> floor_split(int value, int l) {
  int r = value % l;
  if (r < 0) r += l;
  return {r, (value - r) / l};
}

}  // namespace

SplitWeight split_weight(const RootDatum& d, const WeightLabel& w, int l) {
  if (l < 1) throw std::invalid_argument("split_weight: l must be positive");
  SplitWeight s;
  for (int mu : k_exponents(d, w)) {
    auto [a, b] = floor_split(mu, l);
    s.mu_prime.push_back(a);
    s.mu_double_prime.push_back(b);
  }
  std::tie(s.n_prime, s.n_double_prime) = floor_split(-w.energy, l);
  return s;
}

Matrix<CyclotomicNum> heisenberg_pairing_matrix(const RootDatum& d, int k, int l) {
  Matrix<CyclotomicNum> m(static_cast<std::size_t>(d.rank));
  for (int i = 0; i < d.rank; ++i) {
    for (int j = 0; j < d.rank; ++j) m[i].push_back(specialize(pair_ht(d, i, j, k), l));
  }
  return m;
}

DualHeisenberg dual_heisenberg(const RootDatum& d, int i, int k, int l) {
  if (l < 1) throw std::invalid_argument("dual_heisenberg: l must be positive");
  if (k < 1) throw std::invalid_argument("dual_heisenberg: k must be positive");
  const auto m = heisenberg_pairing_matrix(d, k, l);
  const CyclotomicNum zero(l);
  auto inv = inverse(m, zero);
  if (!inv) {
    const CyclotomicNum det = specialize_at_power(qcartan_det(d), l, k);
    throw CoprimalityViolation("coprimality violated: the Heisenberg pairing matrix of " + d.name() + " at level k=" +
                                   std::to_string(k) + " is singular at a primitive root of unity of order " +
                                   std::to_string(l) + " (det[A] at zeta^k = " + to_string(det) + ")",
                               k, det);
  }
  DualHeisenberg h;
  h.i = i;
  h.k = k;
  h.l = l;
  h.coeffs = (*inv)[i];
  return h;
}

SpecializedVector apply_dual(const RootDatum& d, const DualHeisenberg& h, const SpecializedVector& v) {
  SpecializedVector r;
  r.l = v.l;
  for (int j = 0; j < d.rank; ++j) {
    if (h.coeffs[j].is_zero()) continue;
    auto part = push_forward([&](const FockZ& w) { return apply_htilde(d, j, h.k, w); }, v);
    for (const auto& [b, c] : part.terms) r.add(b, c * h.coeffs[j]);
  }
  return r;
}

SpecializedVector dual_commutator(const RootDatum& d, const DualHeisenberg& h, int j, const SpecializedVector& v) {
  const LatticeOperator create = [&](const FockZ& w) { return apply_htilde(d, j, -h.k, w); };
  SpecializedVector r = apply_dual(d, h, push_forward(create, v));
  const SpecializedVector reversed = push_forward(create, apply_dual(d, h, v));
  for (const auto& [b, c] : reversed.terms) r.add(b, -c);
  return r;
}

Matrix<LaurentZ> operator_matrix(const LatticeOperator& op, const std::vector<BasisLabel>& source,
                                 const std::vector<BasisLabel>& target) {
  std::map<BasisLabel, std::size_t> index;
  for (std::size_t r = 0; r < target.size(); ++r) index.emplace(target[r], r);
  Matrix<LaurentZ> m(target.size(), std::vector<LaurentZ>(source.size()));
  std::vector<FockZ> images(source.size());
  parallel_for(source.size(), [&](std::size_t c) { images[c] = op(FockZ::basis(source[c])); });
  for (std::size_t c = 0; c < source.size(); ++c) {
    for (const auto& [b, x] : images[c].terms) {
      auto it = index.find(b);
      if (it == index.end()) throw std::logic_error("operator_matrix: image leaves the target basis at " + to_string(b));
      m[it->second][c] = x;
    }
  }
  return m;
}

Matrix<CyclotomicNum> specialize_matrix(const Matrix<LaurentZ>& m, int l) {
  Matrix<CyclotomicNum> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    r[i].reserve(m[i].size());
    for (const auto& x : m[i]) r[i].push_back(specialize(x, l));
  }
  return r;
}

namespace {

std::vector<BasisLabel> sym_labels(const RootDatum& d, int e) {
  std::vector<BasisLabel> out;
  for (auto& lam : colored_partitions(d.rank, e)) out.push_back({std::move(lam), zero_element(d)});
  return out;
}

template <class T>
void append_rows(Matrix<T>& dst, Matrix<T>&& src) {
  for (auto& row : src) dst.push_back(std::move(row));
}

template <class T>
void drop_zero_rows(Matrix<T>& m) {
  std::erase_if(m, [](const std::vector<T>& row) {
    return std::all_of(row.begin(), row.end(), [](const T& x) { return x.is_zero(); });
  });
}

}  // namespace

HeisenbergKernel heisenberg_kernel(const RootDatum& d, int l, int depth) {
  if (l < 0) throw std::invalid_argument("heisenberg_kernel: l must be nonnegative");
  HeisenbergKernel out;
  for (int e = 1; e <= depth; ++e) {
    const auto source = sym_labels(d, e);
    Matrix<LaurentZ> stacked;
    for (int k = 1; k <= e; ++k) {
      const auto target = sym_labels(d, e - k);
      for (int i = 0; i < d.rank; ++i) {
        append_rows(stacked, operator_matrix([&](const FockZ& w) { return apply_htilde(d, i, k, w); }, source, target));
      }
    }
    drop_zero_rows(stacked);
    const int cols = static_cast<int>(source.size());
    const int rk = l == 0 ? bareiss_rank(stacked) : rank(specialize_matrix(stacked, l));
    out.kernel_dims.push_back(cols - rk);
  }
  if (l >= 1) {
    const CyclotomicNum zero(l);
    for (int k = 1; k <= depth; ++k) {
      if (!inverse(heisenberg_pairing_matrix(d, k, l), zero)) out.singular_k.push_back(k);
    }
  }
  return out;
}

namespace {

Matrix<CyclotomicNum> transpose(const Matrix<CyclotomicNum>& m, int cols, int l) {
  Matrix<CyclotomicNum> t(static_cast<std::size_t>(cols), std::vector<CyclotomicNum>(m.size(), CyclotomicNum(l)));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (int j = 0; j < cols; ++j) t[j][i] = m[i][j];
  }
  return t;
}

// Columns of the returned matrix span the subspace; rows index the basis.
Matrix<CyclotomicNum> columns_to_matrix(const std::vector<std::vector<CyclotomicNum>>& vecs, int n, int l) {
  Matrix<CyclotomicNum> m(static_cast<std::size_t>(n), std::vector<CyclotomicNum>(vecs.size(), CyclotomicNum(l)));
  for (std::size_t c = 0; c < vecs.size(); ++c) {
    for (int r = 0; r < n; ++r) m[r][c] = vecs[c][r];
  }
  return m;
}

}  // namespace

SingularSearch singular_vector_search(const RootDatum& d, int l, int depth) {
  if (l < 1) throw std::invalid_argument("singular_vector_search: l must be positive");
  SingularSearch out;
  out.depth = depth;
  const CyclotomicNum zero(l);
  for (int e = 1; e <= depth; ++e) {
    const auto source = basis_of_energy(d, e);
    const int n = static_cast<int>(source.size());

    Matrix<LaurentZ> lowering;
    for (int m = 1; m <= e; ++m) {
      const auto target = basis_of_energy(d, e - m);
      for (int i = 0; i < d.rank; ++i) {
        for (int sign : {1, -1}) {
          append_rows(lowering,
                      operator_matrix([&](const FockZ& w) { return apply_x(d, i, sign, m, w); }, source, target));
        }
        append_rows(lowering, operator_matrix([&](const FockZ& w) { return apply_htilde(d, i, m, w); }, source, target));
      }
    }
    drop_zero_rows(lowering);
    auto kernel = kernel_basis(specialize_matrix(lowering, l), n, zero);

    std::vector<Matrix<CyclotomicNum>> zero_modes;
    for (int i = 0; i < d.rank; ++i) {
      for (int sign : {1, -1}) {
        zero_modes.push_back(specialize_matrix(
            operator_matrix([&](const FockZ& w) { return apply_x(d, i, sign, 0, w); }, source, source), l));
      }
    }

    // Shrink to the largest zero-mode-stable subspace.
    while (!kernel.empty()) {
      const auto basis = columns_to_matrix(kernel, n, l);
      const int dim = static_cast<int>(kernel.size());
      const auto annihilator = kernel_basis(transpose(basis, dim, l), n, zero);  // rows y with y.B = 0
      if (annihilator.empty()) break;
      Matrix<CyclotomicNum> constraints;
      for (const auto& t : zero_modes) append_rows(constraints, multiply(multiply(annihilator, t, zero), basis, zero));
      const auto coeffs = kernel_basis(constraints, dim, zero);
      if (static_cast<int>(coeffs.size()) == dim) break;
      std::vector<std::vector<CyclotomicNum>> next;
      for (const auto& c : coeffs) {
        std::vector<CyclotomicNum> v(static_cast<std::size_t>(n), zero);
        for (int r = 0; r < n; ++r) {
          for (int k = 0; k < dim; ++k) {
            if (!c[k].is_zero() && !basis[r][k].is_zero()) v[r] += basis[r][k] * c[k];
          }
        }
        next.push_back(std::move(v));
      }
      kernel = std::move(next);
    }

    out.stable_dims.push_back(static_cast<int>(kernel.size()));
    for (const auto& v : kernel) {
      SpecializedVector sv;
      sv.l = l;
      for (int r = 0; r < n; ++r) sv.add(source[r], v[r]);
      out.candidates.push_back(std::move(sv));
    }
  }
  return out;
}

bool IrreducibilityReport::irreducible_to_depth() const {
  const bool kernels_zero =
      std::all_of(heisenberg.kernel_dims.begin(), heisenberg.kernel_dims.end(), [](int k) { return k == 0; });
  return kernels_zero && heisenberg.singular_k.empty() && dual_delta_ok && weight_dims_ok && search &&
         !search->found();
}

IrreducibilityReport certify_irreducible(const RootDatum& d, int l, int depth) {
  IrreducibilityReport rep;
  rep.l = l;
  rep.depth = depth;
  rep.coprime = l >= 1 && std::gcd(l, d.coxeter) == 1;
  rep.heisenberg = heisenberg_kernel(d, l, depth);
  if (l == 0) return rep;

  rep.det_checks = detq_nonvanishing(d, l, 2 * l);

  // Duals at every level k <= depth that admits them.
  for (int k = 1; k <= depth; ++k) {
    if (std::find(rep.heisenberg.singular_k.begin(), rep.heisenberg.singular_k.end(), k) !=
        rep.heisenberg.singular_k.end()) {
      rep.dual_delta_ok = false;
      continue;
    }
    for (int i = 0; i < d.rank; ++i) {
      const auto h = dual_heisenberg(d, i, k, l);
      for (int j = 0; j < d.rank; ++j) {
        for (int e = 0; e <= std::min(depth, 2); ++e) {
          for (const auto& b : sym_labels(d, e)) {
            const auto v = specialize_vector(FockZ::basis(b), l);
            SpecializedVector expect;
            expect.l = l;
            if (i == j) expect = v;
            if (!(dual_commutator(d, h, j, v) == expect)) rep.dual_delta_ok = false;
          }
        }
      }
    }
  }

  // Specialized weight spaces: the images of the lattice basis stay independent.
  std::map<WeightLabel, long> dims;
  for (const auto& b : enumerate_basis(d, depth)) {
    const auto v = specialize_vector(FockZ::basis(b), l);
    if (v.terms.size() == 1 && v.terms.begin()->first == b) ++dims[WeightLabel{b.eta, energy(d, b)}];
  }
  rep.weight_dims_ok = dims == character(d, depth);

  rep.search = singular_vector_search(d, l, depth);
  return rep;
}

}  // namespace qfock
