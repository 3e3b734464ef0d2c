#ifndef SUPERCONG_POLY_HPP
#define SUPERCONG_POLY_HPP

#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "supercong/arith.hpp"

namespace supercong {

/// Exponent vector of fixed arity (2 for z1,z2; 4 for z11,z12,z21,z22).
template <std::size_t Arity>
struct Monomial {
  std::array<unsigned, Arity> e{};

  unsigned total_degree() const {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
  }
  bool operator==(const Monomial&) const = default;
};

// Graded-lex, highest first: larger total degree wins, ties broken by the
// lexicographically larger exponent vector. Map iteration order doubles as
// the canonical serialization order.
template <std::size_t Arity>
struct GradedLexGreater {
  bool operator()(const Monomial<Arity>& x, const Monomial<Arity>& y) const {
    unsigned dx = x.total_degree(), dy = y.total_degree();
    if (dx != dy) return dx > dy;
    return x.e > y.e;
  }
};

template <std::size_t Arity>
const std::array<const char*, Arity>& variable_names();

/// Sparse multivariate polynomial with exact Rational coefficients.
/// Canonical form: no stored zero coefficients. Immutable value semantics;
/// every operation returns a new polynomial.
template <std::size_t Arity>
class MultiPoly {
 public:
  using Mono = Monomial<Arity>;
  using TermMap = std::map<Mono, Rational, GradedLexGreater<Arity>>;

  MultiPoly() = default;

  static MultiPoly constant(const Rational& c) {
    MultiPoly p;
    p.add_term(Mono{}, c);
    return p;
  }
  static MultiPoly monomial(const Mono& m, const Rational& c) {
    MultiPoly p;
    p.add_term(m, c);
    return p;
  }
  static MultiPoly variable(std::size_t idx) {
    if (idx >= Arity) throw std::invalid_argument("MultiPoly::variable: bad index");
    Mono m;
    m.e[idx] = 1;
    return monomial(m, Rational(1));
  }

  void add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  long long total_degree() const {  // -1 for the zero polynomial
    long long d = -1;
    for (const auto& [m, c] : terms_) d = std::max<long long>(d, m.total_degree());
    return d;
  }

  Rational coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }

  MultiPoly operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) {
        Mono m;
        for (std::size_t v = 0; v < Arity; ++v) m.e[v] = m1.e[v] + m2.e[v];
        r.add_term(m, c1 * c2);
      }
    return r;
  }

  MultiPoly operator*(const Rational& c) const {
    MultiPoly r;
    if (c == 0) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
    return r;
  }

  MultiPoly pow(long long e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
    MultiPoly acc = constant(Rational(1));
    MultiPoly base(*this);
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  MultiPoly derivative(std::size_t var) const {
    if (var >= Arity) throw std::invalid_argument("MultiPoly::derivative: bad index");
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
      if (m.e[var] == 0) continue;
      Mono d = m;
      d.e[var] -= 1;
      r.add_term(d, c * Rational(static_cast<long>(m.e[var])));
    }
    return r;
  }

  PAdicVal min_vp(long long p) const {
    PAdicVal best = PAdicVal::infinity();
    for (const auto& [m, c] : terms_) {
      PAdicVal v = vp(c, p);
      if (v < best) best = v;
    }
    return best;
  }

  bool coeffs_in_z_half() const {
    for (const auto& [m, c] : terms_)
      if (!den_is_power_of_two(c)) return false;
    return true;
  }

  std::string str(const char* sep = " + ") const {
    if (terms_.empty()) return "0";
    const auto& names = variable_names<Arity>();
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) out += sep;
      first = false;
      out += to_string(c);
      out += " *";
      for (std::size_t v = 0; v < Arity; ++v) {
        out += ' ';
        out += names[v];
        out += '^';
        out += std::to_string(m.e[v]);
      }
    }
    return out;
  }
  std::string str_multiline() const { return str("\n") + "\n"; }

 private:
  TermMap terms_;
};

using Poly2 = MultiPoly<2>;
using Poly4 = MultiPoly<4>;

/// 2x2 integer matrix acting by substitution z -> z*alpha.
struct Mat2 {
  Integer a11, a12, a21, a22;
  Integer det() const { return a11 * a22 - a12 * a21; }
};

inline Mat2 mat2(long long a11, long long a12, long long a21, long long a22) {
  return Mat2{Integer(static_cast<long>(a11)), Integer(static_cast<long>(a12)),
              Integer(static_cast<long>(a21)), Integer(static_cast<long>(a22))};
}

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return Mat2{x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
              x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

/// (alpha f)(z) = f(z alpha) with z a row vector (arity 2) or 2x2 matrix
/// (arity 4). Rejects det alpha = 0. Composition satisfies
/// matrix_substitute(matrix_substitute(f, alpha), beta)
///   == matrix_substitute(f, mat_mul(beta, alpha)).
Poly2 matrix_substitute(const Poly2& f, const Mat2& alpha);
Poly4 matrix_substitute(const Poly4& f, const Mat2& alpha);

/// min coefficient valuation >= n, i.e. membership in p^n * Z[1/2][z...].
/// Requires every coefficient in Z[1/2] and p odd.
template <std::size_t Arity>
bool is_divisible(const MultiPoly<Arity>& f, long long p, long long n) {
  if (p == 2) throw std::invalid_argument("is_divisible: p must be odd");
  if (!is_prime(p)) throw std::invalid_argument("is_divisible: p must be prime");
  if (!f.coeffs_in_z_half())
    throw std::invalid_argument("is_divisible: coefficient outside Z[1/2]");
  return f.min_vp(p).at_least(n);
}

/// Dense univariate polynomial in t with exact Rational coefficients.
/// Trailing zero coefficients are trimmed; degree() is -1 for zero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly variable() { return UniPoly({Rational(0), Rational(1)}); }

  long long degree() const { return static_cast<long long>(c_.size()) - 1; }
  Rational coeff(long long i) const {
    return (i < 0 || i > degree()) ? Rational(0) : c_[static_cast<std::size_t>(i)];
  }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& s) const;
  UniPoly pow(long long e) const;
  UniPoly shifted(long long e) const;  // multiply by t^e

  Rational eval(const Rational& x) const;
  PAdicVal min_vp(long long p) const;
  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Exact composition f(c0 + c1 t); requires c1 != 0.
UniPoly compose_affine(const UniPoly& f, const Rational& c0, const Rational& c1);

}  // namespace supercong

#endif
