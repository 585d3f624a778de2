#include "qfock/fock.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <set>

namespace qfock {

int energy(const RootDatum& d, const BasisLabel& b) { return b.lambda.total() + norm(d, b.eta); }

std::vector<int> k_exponents(const RootDatum& d, const WeightLabel& w) {
  std::vector<int> e(static_cast<std::size_t>(d.rank));
  for (int i = 0; i < d.rank; ++i) e[i] = pairing_with_simple(d, w.eta, i);
  return e;
}

FockQ promote(const FockZ& v) {
  FockQ r;
  for (const auto& [b, c] : v.terms) r.terms.emplace_hint(r.terms.end(), b, promote(c));
  return r;
}

bool in_lattice(const FockQ& v) {
  for (const auto& [b, c] : v.terms) {
    if (!is_integral(c)) return false;
  }
  return true;
}

FockZ to_integral(const FockQ& v) {
  FockZ r;
  for (const auto& [b, c] : v.terms) {
    auto z = try_integral(c);
    if (!z) throw std::domain_error("vector is not in the lattice: coefficient " + to_string(c) + " at " + to_string(b));
    r.terms.emplace_hint(r.terms.end(), b, *std::move(z));
  }
  return r;
}

BasisLabel vacuum_label(const RootDatum& d) { return {ColoredPartition(d.rank), zero_element(d)}; }

FockZ vacuum(const RootDatum& d) { return FockZ::basis(vacuum_label(d)); }

int homogeneous_energy(const RootDatum& d, const FockZ& v) {
  if (v.is_zero()) throw std::invalid_argument("homogeneous_energy: zero vector");
  const int e = energy(d, v.terms.begin()->first);
  for (const auto& [b, c] : v.terms) {
    if (energy(d, b) != e) throw std::invalid_argument("homogeneous_energy: vector mixes energies");
  }
  return e;
}

namespace {

struct Partial {
  int shift;  // total energy removed by the annihilation factor
  ColoredPartition lambda;
  LaurentZ coeff;
};

// Weights g_t of the substitution P~_{j,c} -> sum_t g_t P~_{j,c-t} induced by
// the annihilation half of X^{sign}_i, with the z-power z^{-t} stripped.
LaurentZ annihilation_weight(int sign, int a, int t) {
  if (t == 0) return LaurentZ(1);
  if (sign > 0) {
    if (a == 2) {
      if (t == 1) return -qint(2).shifted(-1);
      if (t == 2) return LaurentZ::monomial(-2);
      return {};
    }
    return LaurentZ::monomial(-t);
  }
  if (a == 2) return qint(t + 1);
  return t == 1 ? LaurentZ(-1) : LaurentZ();
}

int annihilation_length(int sign, int a, int part) {
  if (a == 2 && sign > 0) return std::min(part, 2);
  if (a == -1 && sign < 0) return std::min(part, 1);
  return part;
}

void x_on_label(const RootDatum& d, int i, int sign, int n, const BasisLabel& b, std::map<BasisLabel, LaurentZ>& out,
                const LaurentZ& scale) {
  const int m = pairing_with_simple(d, b.eta, i);
  const QElement alpha = simple_root(d, i);
  const int eps = cocycle(d, sign > 0 ? alpha : -alpha, b.eta);
  const QElement eta = sign > 0 ? b.eta + alpha : b.eta - alpha;
  // Created degree is c = base + T, T the annihilated energy.
  const int base = sign > 0 ? -n - 1 - m : -n - 1 + m;
  if (base + b.lambda.total() < 0) return;

  std::vector<Partial> partial{{0, ColoredPartition(d.rank), LaurentZ(eps)}};
  for (int j = 0; j < d.rank; ++j) {
    const int a = d.cartan[i][j];
    if (a == 0) {
      for (auto& p : partial) p.lambda.set_parts(j, b.lambda.parts(j));
      continue;
    }
    for (int part : b.lambda.parts(j)) {
      std::vector<Partial> next;
      const int tmax = annihilation_length(sign, a, part);
      for (const auto& p : partial) {
        for (int t = 0; t <= tmax; ++t) {
          LaurentZ w = annihilation_weight(sign, a, t);
          if (w.is_zero()) continue;
          Partial q{p.shift + t, p.lambda, p.coeff * w};
          q.lambda.add_part(j, part - t);
          next.push_back(std::move(q));
        }
      }
      partial = std::move(next);
    }
  }

  for (const auto& p : partial) {
    const int c = base + p.shift;
    if (c < 0) continue;
    const LaurentZ coeff = p.coeff * scale;
    if (sign > 0) {
      BasisLabel nb{p.lambda, eta};
      nb.lambda.add_part(i, c);
      accumulate(out, nb, coeff);
    } else {
      // Creation factor P^-_{i,c} q^c.
      for (const auto& [mono, e] : elementary_in_h(d.rank, i, c).terms) {
        BasisLabel nb{p.lambda, eta};
        for (int part : mono.parts(i)) nb.lambda.add_part(i, part);
        accumulate(out, nb, (coeff * e).shifted(c));
      }
    }
  }
}

template <class C>
FockVector<C> apply_x_impl(const RootDatum& d, int i, int sign, int n, const FockVector<C>& v) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("apply_x: sign must be +1 or -1");
  if (i < 0 || i >= d.rank) throw std::invalid_argument("apply_x: node out of range");
  FockVector<C> r;
  for (const auto& [b, c] : v.terms) {
    std::map<BasisLabel, LaurentZ> img;
    x_on_label(d, i, sign, n, b, img, LaurentZ(1));
    const int target = energy(d, b) - n;
    for (const auto& [nb, x] : img) {
      if (energy(d, nb) != target) throw std::logic_error("apply_x: output is not of energy d - n");
      if constexpr (std::is_same_v<C, BigInt>) {
        r.add(nb, x * c);
      } else {
        r.add(nb, promote(x) * c);
      }
    }
  }
  return r;
}

}  // namespace

FockZ apply_x(const RootDatum& d, int i, int sign, int n, const FockZ& v) { return apply_x_impl(d, i, sign, n, v); }
FockQ apply_x(const RootDatum& d, int i, int sign, int n, const FockQ& v) { return apply_x_impl(d, i, sign, n, v); }

FockZ apply_x_divided(const RootDatum& d, int i, int sign, int n, int r, const FockZ& v) {
  if (r < 1) throw std::invalid_argument("apply_x_divided: r must be positive");
  FockZ w = v;
  for (int k = 0; k < r; ++k) w = apply_x(d, i, sign, n, w);
  if (r == 1) return w;
  const LaurentZ f = qfact(r);
  FockZ out;
  for (const auto& [b, c] : w.terms) {
    auto q = exact_div(c, f);
    if (!q) {
      throw LatticeViolation("divided power x" + std::string(sign > 0 ? "+" : "-") + " i=" + std::to_string(i + 1) +
                             " n=" + std::to_string(n) + " r=" + std::to_string(r) + ": coefficient " + to_string(c) +
                             " at " + to_string(b) + " is not divisible by [" + std::to_string(r) + "]!");
    }
    out.terms.emplace_hint(out.terms.end(), b, *std::move(q));
  }
  return out;
}

namespace {

// Action on the symmetric factor only, eta untouched.
template <class C, class F>
FockVector<C> act_on_sym(const FockVector<C>& v, int colors, F&& sym_op) {
  FockVector<C> r;
  for (const auto& [b, c] : v.terms) {
    auto s = sym_op(SymVector<C>::monomial(SymBasis::Complete, b.lambda, c));
    (void)colors;
    for (const auto& [p, x] : s.terms) r.add(BasisLabel{p, b.eta}, x);
  }
  return r;
}

}  // namespace

FockZ apply_htilde(const RootDatum& d, int i, int k, const FockZ& v) {
  if (k == 0) throw std::invalid_argument("apply_htilde: k must be nonzero");
  if (k > 0) {
    return act_on_sym(v, d.rank, [&](const SymVectorZ& s) { return act_annihilate(d, i, k, s); });
  }
  const SymVectorZ& p = power_sum_in_h(d.rank, i, -k);
  return act_on_sym(v, d.rank, [&](const SymVectorZ& s) { return multiply(s, p); });
}

FockQ apply_h(const RootDatum& d, int i, int k, const FockQ& v) {
  if (k == 0) throw std::invalid_argument("apply_h: k must be nonzero");
  const int a = k > 0 ? k : -k;
  const LaurentQ factor = promote(qint(a)).scaled(BigRat(1, a));
  if (k > 0) {
    return act_on_sym(v, d.rank, [&](const SymVectorQ& s) { return act_annihilate(d, i, k, s).scaled(factor); });
  }
  const SymVectorQ p = promote(power_sum_in_h(d.rank, i, a)).scaled(factor);
  return act_on_sym(v, d.rank, [&](const SymVectorQ& s) { return multiply(s, p); });
}

FockQ apply_psi(const RootDatum& d, int i, int sign, int r, const FockQ& v) {
  if (r < 0) throw std::invalid_argument("apply_psi: r must be nonnegative");
  if (sign != 1 && sign != -1) throw std::invalid_argument("apply_psi: sign must be +1 or -1");
  // Phi_r = (1/r) sum_{s=1}^{r} s * (+-(q - q^-1)) h_{i,+-s} Phi_{r-s}.
  const LaurentQ qq = promote(LaurentZ::monomial(1) - LaurentZ::monomial(-1)).scaled(BigRat(sign));
  std::vector<FockQ> phi{v};
  for (int m = 1; m <= r; ++m) {
    FockQ acc;
    for (int s = 1; s <= m; ++s) {
      acc += apply_h(d, i, sign * s, phi[m - s]).scaled(qq.scaled(BigRat(s)));
    }
    phi.push_back(acc.scaled(LaurentQ(BigRat(1, m))));
  }
  return apply_torus(d, Torus::K, i, sign, phi[r]);
}

std::vector<QElement> lattice_points(const RootDatum& d, int max_norm) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::vector<QElement>> cache;
  const auto key = std::make_pair(d.name(), max_norm);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  // Every point of norm <= N is reachable from 0 through points of norm <= N
  // by simple-root steps, so a bounded search is complete.
  std::set<QElement> seen;
  std::deque<QElement> queue;
  if (max_norm >= 0) {
    seen.insert(zero_element(d));
    queue.push_back(zero_element(d));
  }
  while (!queue.empty()) {
    QElement cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < d.rank; ++i) {
      for (int s : {1, -1}) {
        QElement nxt = cur;
        nxt[i] += s;
        if (norm(d, nxt) > max_norm || seen.count(nxt)) continue;
        seen.insert(nxt);
        queue.push_back(std::move(nxt));
      }
    }
  }
  std::vector<QElement> pts(seen.begin(), seen.end());
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, pts);
  return pts;
}

std::vector<BasisLabel> basis_of_energy(const RootDatum& d, int e) {
  std::vector<BasisLabel> out;
  for (const auto& eta : lattice_points(d, e)) {
    const int rest = e - norm(d, eta);
    for (auto& lam : colored_partitions(d.rank, rest)) out.push_back({std::move(lam), eta});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BasisLabel> enumerate_basis(const RootDatum& d, int depth) {
  std::vector<BasisLabel> out;
  for (int e = 0; e <= depth; ++e) {
    auto level = basis_of_energy(d, e);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

std::map<WeightLabel, long> character(const RootDatum& d, int depth) {
  std::map<WeightLabel, long> ch;
  for (const auto& b : enumerate_basis(d, depth)) ++ch[WeightLabel{b.eta, energy(d, b)}];
  return ch;
}

std::string to_string(const BasisLabel& b) {
  std::string out = to_string(b.lambda) + " @ eta=[";
  for (std::size_t k = 0; k < b.eta.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(b.eta[k]);
  }
  return out + "]";
}

namespace {

template <class C>
std::string fock_to_string(const FockVector<C>& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : v.terms) {
    if (!out.empty()) out += " + ";
    if (!(c == Laurent<C>(1))) out += "(" + to_string(c) + ")*";
    out += to_string(b);
  }
  return out;
}

class StateParser {
 public:
  StateParser(std::string_view s, const RootDatum& d) : s_(s), d_(d) {}

  FockQ parse() {
    FockQ v;
    skip_ws();
    if (s_.substr(pos_) == "0") return v;
    while (true) {
      skip_ws();
      LaurentQ coeff(1);
      if (peek() == '-') {
        ++pos_;
        coeff = LaurentQ(-1);
        skip_ws();
      }
      if (peek() == '(') {
        const std::size_t close = s_.find(')', pos_);
        if (close == std::string_view::npos) throw ParseError("unbalanced '('", pos_);
        try {
          coeff *= parse_laurent(s_.substr(pos_ + 1, close - pos_ - 1));
        } catch (const ParseError& e) {
          throw ParseError(std::string("coefficient: ") + e.what(), pos_ + 1 + e.position());
        }
        pos_ = close + 1;
        skip_ws();
        expect('*');
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        coeff *= LaurentQ(BigRat(BigInt(std::string(s_.substr(start, pos_ - start)))));
        skip_ws();
        expect('*');
      }
      skip_ws();
      if (peek() != '{') throw ParseError("expected '{'", pos_);
      const std::size_t close = s_.find('}', pos_);
      if (close == std::string_view::npos) throw ParseError("unbalanced '{'", pos_);
      ColoredPartition lam(d_.rank);
      try {
        lam = parse_colored_partition(s_.substr(pos_, close - pos_ + 1), d_.rank);
      } catch (const ParseError& e) {
        throw ParseError(std::string("partition: ") + e.what(), pos_ + e.position());
      }
      pos_ = close + 1;
      expect('@');
      skip_ws();
      if (s_.substr(pos_, 4) != "eta=") throw ParseError("expected 'eta='", pos_);
      pos_ += 4;
      expect('[');
      QElement eta;
      while (true) {
        skip_ws();
        int sign = 1;
        if (peek() == '-') {
          sign = -1;
          ++pos_;
        }
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer", pos_);
        eta.push_back(sign * std::stoi(std::string(s_.substr(start, pos_ - start))));
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
      expect(']');
      if (static_cast<int>(eta.size()) != d_.rank) throw ParseError("eta must have one entry per node", pos_);
      v.add(BasisLabel{std::move(lam), std::move(eta)}, coeff);
      skip_ws();
      if (pos_ == s_.size()) break;
      if (peek() == '+') {
        ++pos_;
        continue;
      }
      if (peek() == '-') continue;
      throw ParseError("expected '+' or end of input", pos_);
    }
    return v;
  }

 private:
  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  std::string_view s_;
  const RootDatum& d_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const FockZ& v) { return fock_to_string(v); }
std::string to_string(const FockQ& v) { return fock_to_string(v); }

FockQ parse_state(std::string_view text, const RootDatum& d) { return StateParser(text, d).parse(); }

}  // namespace qfock
