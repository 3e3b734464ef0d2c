#include "supercong/poly.hpp"

namespace supercong {

template <>
const std::array<const char*, 2>& variable_names<2>() {
  static const std::array<const char*, 2> names{"z1", "z2"};
  return names;
}

template <>
const std::array<const char*, 4>& variable_names<4>() {
  static const std::array<const char*, 4> names{"z11", "z12", "z21", "z22"};
  return names;
}

namespace {

// substitute each variable by its image polynomial
template <std::size_t Arity>
MultiPoly<Arity> substitute_images(const MultiPoly<Arity>& f,
                                   const std::array<MultiPoly<Arity>, Arity>& images) {
  // cache powers of each image up to the max exponent used
  std::array<unsigned, Arity> max_e{};
  for (const auto& [m, c] : f.terms())
    for (std::size_t v = 0; v < Arity; ++v) max_e[v] = std::max(max_e[v], m.e[v]);
  std::array<std::vector<MultiPoly<Arity>>, Arity> powers;
  for (std::size_t v = 0; v < Arity; ++v) {
    powers[v].push_back(MultiPoly<Arity>::constant(Rational(1)));
    for (unsigned e = 1; e <= max_e[v]; ++e)
      powers[v].push_back(powers[v].back() * images[v]);
  }
  MultiPoly<Arity> out;
  for (const auto& [m, c] : f.terms()) {
    MultiPoly<Arity> term = MultiPoly<Arity>::constant(c);
    for (std::size_t v = 0; v < Arity; ++v)
      if (m.e[v] > 0) term = term * powers[v][m.e[v]];
    out = out + term;
  }
  return out;
}

void require_invertible(const Mat2& alpha) {
  if (alpha.det() == 0)
    throw std::invalid_argument("matrix_substitute: det alpha = 0");
}

Poly2 linear2(const Integer& c1, const Integer& c2) {
  Poly2 p;
  p.add_term(Monomial<2>{{1, 0}}, Rational(c1));
  p.add_term(Monomial<2>{{0, 1}}, Rational(c2));
  return p;
}

Poly4 linear4(std::size_t v1, const Integer& c1, std::size_t v2, const Integer& c2) {
  Poly4 p;
  Monomial<4> m1, m2;
  m1.e[v1] = 1;
  m2.e[v2] = 1;
  p.add_term(m1, Rational(c1));
  p.add_term(m2, Rational(c2));
  return p;
}

}  // namespace

Poly2 matrix_substitute(const Poly2& f, const Mat2& alpha) {
  require_invertible(alpha);
  // (z1, z2) alpha = (z1 a11 + z2 a21, z1 a12 + z2 a22)
  std::array<Poly2, 2> images{linear2(alpha.a11, alpha.a21), linear2(alpha.a12, alpha.a22)};
  return substitute_images(f, images);
}

Poly4 matrix_substitute(const Poly4& f, const Mat2& alpha) {
  require_invertible(alpha);
  // (z alpha)_{11} = z11 a11 + z12 a21, (z alpha)_{12} = z11 a12 + z12 a22,
  // (z alpha)_{21} = z21 a11 + z22 a21, (z alpha)_{22} = z21 a12 + z22 a22
  std::array<Poly4, 4> images{
      linear4(0, alpha.a11, 1, alpha.a21), linear4(0, alpha.a12, 1, alpha.a22),
      linear4(2, alpha.a11, 3, alpha.a21), linear4(2, alpha.a12, 3, alpha.a22)};
  return substitute_images(f, images);
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(-c);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UniPoly();
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const Rational& s) const {
  std::vector<Rational> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c * s);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(long long e) const {
  if (e < 0) throw std::invalid_argument("UniPoly::pow: negative exponent");
  UniPoly acc = constant(Rational(1));
  UniPoly base(*this);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

UniPoly UniPoly::shifted(long long e) const {
  if (e < 0) throw std::invalid_argument("UniPoly::shifted: negative shift");
  if (c_.empty()) return UniPoly();
  std::vector<Rational> out(static_cast<std::size_t>(e), Rational(0));
  out.insert(out.end(), c_.begin(), c_.end());
  return UniPoly(std::move(out));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PAdicVal UniPoly::min_vp(long long p) const {
  PAdicVal best = PAdicVal::infinity();
  for (const auto& c : c_) {
    PAdicVal v = vp(c, p);
    if (v < best) best = v;
  }
  return best;
}

std::string UniPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (long long i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(c) + " * t^" + std::to_string(i);
  }
  return out;
}

UniPoly compose_affine(const UniPoly& f, const Rational& c0, const Rational& c1) {
  if (c1 == 0) throw std::invalid_argument("compose_affine: c1 must be nonzero");
  UniPoly lin({c0, c1});
  UniPoly acc;
  for (long long i = f.degree(); i >= 0; --i)
    acc = acc * lin + UniPoly::constant(f.coeff(i));
  return acc;
}

}  // namespace supercong
