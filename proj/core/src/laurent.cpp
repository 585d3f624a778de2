#include "qfock/laurent.hpp"

#include <cctype>

namespace qfock {

LaurentQ promote(const LaurentZ& p) {
  std::vector<LaurentQ::Term> t;
  t.reserve(p.size());
  for (const auto& [e, c] : p.terms()) t.emplace_back(e, BigRat(c));
  return LaurentQ::from_terms(std::move(t));
}

bool is_integral(const LaurentQ& p) {
  for (const auto& [e, c] : p.terms()) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

std::optional<LaurentZ> try_integral(const LaurentQ& p) {
  std::vector<LaurentZ::Term> t;
  t.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    if (c.get_den() != 1) return std::nullopt;
    t.emplace_back(e, c.get_num());
  }
  return LaurentZ::from_terms(std::move(t));
}

LaurentZ to_integral(const LaurentQ& p) {
  auto r = try_integral(p);
  if (!r) throw std::domain_error("to_integral: coefficient with non-unit denominator in " + to_string(p));
  return *std::move(r);
}

LaurentZ qint(int m) {
  // [m] = q^{m-1} + q^{m-3} + ... + q^{1-m}; [-m] = -[m].
  if (m == 0) return {};
  const int a = m < 0 ? -m : m;
  std::vector<LaurentZ::Term> t;
  for (int e = a - 1; e >= 1 - a; e -= 2) t.emplace_back(e, BigInt(m < 0 ? -1 : 1));
  return LaurentZ::from_terms(std::move(t));
}

LaurentZ qfact(int m) {
  if (m < 0) throw std::invalid_argument("qfact: negative argument");
  LaurentZ r(1);
  for (int k = 2; k <= m; ++k) r *= qint(k);
  return r;
}

LaurentZ qbinom(int m, int r) {
  if (r < 0 || m < r) throw std::invalid_argument("qbinom: need m >= r >= 0");
  LaurentZ num(1);
  for (int k = m - r + 1; k <= m; ++k) num *= qint(k);
  auto q = exact_div(num, qfact(r));
  if (!q) throw std::logic_error("qbinom: [m]!/([r]![m-r]!) is not integral");
  return *std::move(q);
}

namespace {

bool divides_exactly(const BigInt& num, const BigInt& den, BigInt& out) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return true;
}

bool divides_exactly(const BigRat& num, const BigRat& den, BigRat& out) {
  out = num / den;
  return true;
}

template <class C>
std::optional<Laurent<C>> exact_div_impl(const Laurent<C>& num, const Laurent<C>& den) {
  if (den.is_zero()) throw std::domain_error("exact_div: division by zero");
  if (num.is_zero()) return Laurent<C>{};

  const int lo = num.min_exponent();
  const int hi = num.max_exponent();
  std::vector<C> rem(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, c] : num.terms()) rem[static_cast<std::size_t>(e - lo)] = c;

  const int qlo = lo - den.min_exponent();
  const C& lead = den.terms().back().second;
  const int dmax = den.max_exponent();
  std::vector<typename Laurent<C>::Term> quot;

  int top = hi;
  while (true) {
    while (top >= lo && sgn(rem[static_cast<std::size_t>(top - lo)]) == 0) --top;
    if (top < lo) break;
    const int e = top - dmax;
    if (e < qlo) return std::nullopt;
    C c;
    if (!divides_exactly(rem[static_cast<std::size_t>(top - lo)], lead, c)) return std::nullopt;
    for (const auto& [de, dc] : den.terms()) {
      const int idx = de + e - lo;
      if (idx < 0) return std::nullopt;
      rem[static_cast<std::size_t>(idx)] -= c * dc;
    }
    quot.emplace_back(e, std::move(c));
  }
  return Laurent<C>::from_terms(std::move(quot));
}

template <class C>
std::string coeff_text(const C& c) {
  return c.get_str();
}

template <class C>
std::string to_string_impl(const Laurent<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (negative) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    const C mag = negative ? C(-c) : c;
    if (e == 0) {
      out += coeff_text(mag);
      continue;
    }
    if (mag != 1) out += coeff_text(mag) + "*";
    out += 'q';
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view s) : s_(s) {}

  LaurentQ parse() {
    std::vector<LaurentQ::Term> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      terms.push_back(term(sign));
      skip_ws();
    }
    return LaurentQ::from_terms(std::move(terms));
  }

 private:
  LaurentQ::Term term(int sign) {
    BigRat c(sign);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigInt num(digits());
      BigInt den(1);
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        den = BigInt(digits());
        if (den == 0) throw ParseError("zero denominator", pos_);
      }
      c *= BigRat(num, den);
      c.canonicalize();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'q') throw ParseError("expected 'q' after '*'", pos_);
      }
    }
    int e = 0;
    if (peek() == 'q') {
      ++pos_;
      e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        bool paren = false;
        if (peek() == '(') {
          paren = true;
          ++pos_;
          skip_ws();
        }
        int esign = 1;
        if (peek() == '-' || peek() == '+') {
          esign = peek() == '-' ? -1 : 1;
          ++pos_;
        }
        e = esign * std::stoi(digits());
        if (paren) {
          skip_ws();
          if (peek() != ')') throw ParseError("expected ')'", pos_);
          ++pos_;
        }
      }
    } else if (!have_coeff) {
      throw ParseError("expected a coefficient or 'q'", pos_);
    }
    return {e, c};
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::optional<LaurentZ> exact_div(const LaurentZ& num, const LaurentZ& den) {
  return exact_div_impl(num, den);
}

std::optional<LaurentQ> exact_div(const LaurentQ& num, const LaurentQ& den) {
  return exact_div_impl(num, den);
}

std::string to_string(const LaurentZ& p) { return to_string_impl(p); }
std::string to_string(const LaurentQ& p) { return to_string_impl(p); }

LaurentQ parse_laurent(std::string_view text) { return LaurentParser(text).parse(); }

LaurentZ parse_laurent_z(std::string_view text) {
  auto p = parse_laurent(text);
  auto z = try_integral(p);
  if (!z) throw ParseError("non-integral coefficient", 0);
  return *std::move(z);
}

}  // namespace qfock
