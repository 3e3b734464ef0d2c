#include "supercong/gl2.hpp"

#include <map>
#include <optional>
#include <random>

#include "supercong/parallel.hpp"

namespace supercong {

namespace {

Poly4 var4(std::size_t v) { return Poly4::variable(v); }

Poly4 build_phi() { return var4(0) * var4(0) + var4(2) * var4(2); }
Poly4 build_nu() { return var4(0) * var4(3) - var4(1) * var4(2); }
Poly4 build_chi() { return var4(0) * var4(1) + var4(2) * var4(3); }
Poly4 build_second_quadric() { return var4(1) * var4(1) + var4(3) * var4(3); }

}  // namespace

const BasePolys& BasePolys::get() {
  static const BasePolys base = [] {
    BasePolys b;
    b.phi = build_phi();
    b.nu = build_nu();
    b.chi = build_chi();
    b.second_quadric = build_second_quadric();
    b.xi = b.phi * b.second_quadric;
    b.eta = b.chi * b.chi;
    return b;
  }();
  return base;
}

Poly4 op_D(const Poly4& f) {
  return var4(1) * f.derivative(0) + var4(3) * f.derivative(2);
}

Poly4 op_E(const Poly4& f) {
  return var4(0) * f.derivative(1) + var4(2) * f.derivative(3);
}

Poly4 op_H(const Poly4& f) { return op_E(op_D(f)) - op_D(op_E(f)); }

Poly4 phi_kl(long long k, long long l) {
  if (k < 0 || l < 0) throw std::invalid_argument("phi_kl: negative argument");
  Poly4 acc;
  for (long long i = 0; i <= l; ++i)
    for (long long j = 0; j <= k; ++j) {
      Integer c = binom_int(2 * k - 2 * j, l - i);
      if (c == 0) continue;
      c *= binom_int(2 * j, i);
      if (c == 0) continue;
      c *= binom_int(k, j);
      Monomial<4> m;
      m.e[0] = static_cast<unsigned>(2 * k - 2 * j - l + i);
      m.e[1] = static_cast<unsigned>(l - i);
      m.e[2] = static_cast<unsigned>(2 * j - i);
      m.e[3] = static_cast<unsigned>(i);
      acc.add_term(m, Rational(c));
    }
  return acc;
}

Poly4 phi_kl_derivative_form(long long k, long long l) {
  if (k < 0 || l < 0) throw std::invalid_argument("phi_kl_derivative_form: negative argument");
  Poly4 g = BasePolys::get().phi.pow(k);
  for (long long q = 0; q < l; ++q) g = op_D(g);
  return g * make_rational(Integer(1), factorial(l));
}

bool verify_phi_kl_forms(long long k_max) {
  for (long long k = 0; k <= k_max; ++k)
    for (long long l = 0; l <= 2 * k + 1; ++l) {
      Poly4 closed = phi_kl(k, l);
      if (closed != phi_kl_derivative_form(k, l)) return false;
      for (const auto& [m, c] : closed.terms())
        if (c.get_den() != 1) return false;
      if (l >= 2 * k + 1 && !closed.is_zero()) return false;
    }
  return true;
}

bool verify_ladder(long long k_max) {
  for (long long k = 0; k <= k_max; ++k)
    for (long long l = 0; l <= 2 * k; ++l) {
      Poly4 pkl = phi_kl(k, l);
      if (op_D(pkl) != phi_kl(k, l + 1) * rational_of(l + 1)) return false;
      Poly4 below = l == 0 ? Poly4() : phi_kl(k, l - 1);
      if (op_E(pkl) != below * rational_of(2 * k - l + 1)) return false;
      if (op_H(pkl) != pkl * rational_of(2 * k - 2 * l)) return false;
    }
  return true;
}

bool verify_unipotent_action(long long k_max) {
  const Mat2 lower = mat2(1, 0, 1, 1);
  const Mat2 upper = mat2(1, 1, 0, 1);
  for (long long k = 0; k <= k_max; ++k)
    for (long long l = 0; l <= 2 * k; ++l) {
      Poly4 pkl = phi_kl(k, l);
      Poly4 lo, up;
      for (long long i = 0; i <= 2 * k - l; ++i)
        lo = lo + phi_kl(k, l + i) * Rational(binom_int(l + i, i));
      for (long long i = 0; i <= l; ++i)
        up = up + phi_kl(k, l - i) * Rational(binom_int(2 * k - l + i, i));
      if (matrix_substitute(pkl, lower) != lo) return false;
      if (matrix_substitute(pkl, upper) != up) return false;
    }
  return true;
}

LatticeBasis LatticeBasis::make(long long k, long long m) {
  if (k < 0 || m < 0) throw std::invalid_argument("LatticeBasis: negative argument");
  LatticeBasis out;
  out.k = k;
  out.m = m;
  Poly4 nu_m = BasePolys::get().nu.pow(m);
  for (long long l = 0; l <= 2 * k; ++l) out.basis.push_back(phi_kl(k, l) * nu_m);
  return out;
}

Rational pairing_Lk(const Poly2& f, const Poly2& g, long long k) {
  if (k < 0) throw std::invalid_argument("pairing_Lk: negative k");
  auto homogeneous = [&](const Poly2& h) {
    for (const auto& [m, c] : h.terms())
      if (m.total_degree() != static_cast<unsigned>(k)) return false;
    return true;
  };
  if (!homogeneous(f) || !homogeneous(g))
    throw std::invalid_argument("pairing_Lk: arguments must be homogeneous of degree k");
  Rational acc(0);
  for (long long i = 0; i <= k; ++i) {
    Monomial<2> mi{{static_cast<unsigned>(k - i), static_cast<unsigned>(i)}};
    Monomial<2> mj{{static_cast<unsigned>(i), static_cast<unsigned>(k - i)}};
    Rational ci = f.coefficient(mi);
    Rational dj = g.coefficient(mj);
    if (ci == 0 || dj == 0) continue;
    Rational term = ci * dj / Rational(binom_int(k, i));
    if (i % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

bool verify_pairing_equivariance(long long k, const std::vector<Mat2>& samples) {
  std::vector<Poly2> u(static_cast<std::size_t>(k + 1)), v(static_cast<std::size_t>(k + 1));
  for (long long i = 0; i <= k; ++i) {
    Monomial<2> m{{static_cast<unsigned>(k - i), static_cast<unsigned>(i)}};
    u[i] = Poly2::monomial(m, Rational(binom_int(k, i)));
    v[i] = Poly2::monomial(m, Rational(1));
  }
  for (long long i = 0; i <= k; ++i)
    for (long long j = 0; j <= k; ++j) {
      Rational base = pairing_Lk(u[i], v[j], k);
      Rational expect(0);
      if (i + j == k) expect = i % 2 == 0 ? Rational(1) : Rational(-1);
      if (base != expect) return false;
    }
  for (const Mat2& alpha : samples) {
    if (alpha.det() == 0) throw std::invalid_argument("verify_pairing_equivariance: det 0");
    Rational det_k = Rational(alpha.det());
    Rational scale(1);
    for (long long q = 0; q < k; ++q) scale *= det_k;
    for (long long i = 0; i <= k; ++i)
      for (long long j = 0; j <= k; ++j) {
        Rational lhs = pairing_Lk(matrix_substitute(u[i], alpha),
                                  matrix_substitute(v[j], alpha), k);
        if (lhs != scale * pairing_Lk(u[i], v[j], k)) return false;
      }
  }
  return true;
}

namespace {

// Exact coordinates of target in the span of basis (Gauss-Jordan over
// Rational); nullopt when target is outside the span.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<Poly4>& basis,
                                                   const Poly4& target) {
  std::map<Monomial<4>, std::size_t, GradedLexGreater<4>> row_of;
  auto note = [&](const Poly4& f) {
    for (const auto& [m, c] : f.terms())
      row_of.emplace(m, row_of.size());
  };
  for (const auto& b : basis) note(b);
  note(target);

  std::size_t rows = row_of.size(), cols = basis.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [m, coef] : basis[c].terms()) a[row_of[m]][c] = coef;
  for (const auto& [m, coef] : target.terms()) a[row_of[m]][cols] = coef;

  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = SIZE_MAX;
    for (std::size_t r = pivot_row; r < rows; ++r)
      if (a[r][c] != 0) {
        sel = r;
        break;
      }
    if (sel == SIZE_MAX) continue;
    std::swap(a[pivot_row], a[sel]);
    Rational inv = Rational(1) / a[pivot_row][c];
    for (auto& x : a[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t cc = c; cc <= cols; ++cc) a[r][cc] -= f * a[pivot_row][cc];
    }
    pivot_of_col[c] = pivot_row;
    ++pivot_row;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_of_col[c] != SIZE_MAX) x[c] = a[pivot_of_col[c]][cols];
  // consistency: rows without pivots must have zero rhs, and with a full-rank
  // basis every solution must reproduce the target exactly
  Poly4 rebuilt;
  for (std::size_t c = 0; c < cols; ++c) rebuilt = rebuilt + basis[c] * x[c];
  if (!(rebuilt == target)) return std::nullopt;
  return x;
}

}  // namespace

bool verify_intertwiner_f(long long k, long long m, const std::vector<Mat2>& samples) {
  LatticeBasis lattice = LatticeBasis::make(k, m);
  std::vector<Poly2> image(static_cast<std::size_t>(2 * k + 1));
  for (long long l = 0; l <= 2 * k; ++l) {
    Monomial<2> mono{{static_cast<unsigned>(2 * k - l), static_cast<unsigned>(l)}};
    image[l] = Poly2::monomial(mono, Rational(binom_int(2 * k, l)));
  }
  for (const Mat2& alpha : samples) {
    if (alpha.det() == 0) continue;
    Rational det_m(1);
    for (long long q = 0; q < m; ++q) det_m *= Rational(alpha.det());
    for (long long l = 0; l <= 2 * k; ++l) {
      Poly4 moved = matrix_substitute(lattice.basis[l], alpha);
      auto coords = solve_in_span(lattice.basis, moved);
      if (!coords) return false;  // lattice not stable: fail loudly
      Poly2 f_of_moved;
      for (long long lp = 0; lp <= 2 * k; ++lp)
        f_of_moved = f_of_moved + image[lp] * (*coords)[lp];
      Poly2 rhs = matrix_substitute(image[l], alpha) * det_m;
      if (!(f_of_moved == rhs)) return false;
    }
  }
  return true;
}

std::vector<Mat2> sample_matrices(std::size_t count, unsigned long long seed) {
  std::vector<Mat2> out;
  out.push_back(mat2(1, 0, 0, 1));
  out.push_back(mat2(1, 0, 1, 1));
  out.push_back(mat2(1, 1, 0, 1));
  out.push_back(mat2(2, 0, 0, 3));
  out.push_back(mat2(1, 0, 0, -1));
  out.push_back(mat2(-2, 0, 0, 5));
  std::mt19937_64 rng(seed);
  while (out.size() < count) {
    auto entry = [&] { return static_cast<long long>(rng() % 11) - 5; };
    Mat2 alpha = mat2(entry(), entry(), entry(), entry());
    if (alpha.det() == 0) continue;
    out.push_back(alpha);
  }
  out.resize(count);
  return out;
}

Poly4 psi_r(long long p, long long n, long long r) {
  if (p == 2) throw std::invalid_argument("psi_r: p must be odd");
  if (!is_prime(p)) throw std::invalid_argument("psi_r: p must be prime");
  if (n < 1) throw std::invalid_argument("psi_r: n >= 1 required");
  if (r < 0 || r > (1LL << n) - 1) throw std::invalid_argument("psi_r: r out of range");
  long long k = k_r(p, r);
  long long pn = checked_pow_ll(p, n);
  Rational coef = make_rational(Integer(1), pow_integer(2, k));
  if ((k / 2) % 2 != 0) coef = -coef;
  return phi_kl(k, k) * BasePolys::get().nu.pow(pn - k) * coef;
}

Poly4 main_sum(long long p, long long n) {
  Poly4 acc;
  for (long long r = 0; r <= (1LL << n) - 1; ++r) {
    Poly4 term = psi_r(p, n, r);
    acc = r % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

bool verify_main(long long p, long long n) { return is_divisible(main_sum(p, n), p, n); }

bool verify_dk_identity(long long k_max) {
  const BasePolys& base = BasePolys::get();
  for (long long k = 0; k <= k_max; k += 2) {
    Poly4 lhs = phi_kl_derivative_form(k, k);
    Poly4 rhs;
    for (long long i = 0; i <= k / 2; ++i) {
      Rational c = binom_rat(make_rational(Integer(static_cast<long>(k)), Integer(2)), i) *
                   binom_rat(make_rational(Integer(static_cast<long>(k - 1)), Integer(2)), i);
      rhs = rhs + base.xi.pow(i) * base.eta.pow(k / 2 - i) * c;
    }
    rhs = rhs * Rational(pow_integer(2, k));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

Rational intro_coefficient_sum(long long p, long long n, long long i, long long j) {
  if (p == 2) throw std::invalid_argument("intro_coefficient_sum: p must be odd");
  if (!is_prime(p)) throw std::invalid_argument("intro_coefficient_sum: p must be prime");
  if (n < 1 || i < 0 || j < 0)
    throw std::invalid_argument("intro_coefficient_sum: bad arguments");
  long long pn = checked_pow_ll(p, n);
  Rational acc(0);
  for (long long r = 0; r <= (1LL << n) - 1; ++r) {
    long long k = k_r(p, r);
    long long half = k / 2;
    if (j > half) continue;  // binom(k, k/2 + j) vanishes
    Integer b1 = binom_int(k, half + j);
    for (long long l = 0; l <= pn - k; ++l) {
      Integer b2 = binom_int(k - 2 * j, k - i + l);
      if (b2 == 0) continue;
      Integer b3 = binom_int(k + 2 * j, i - l);
      if (b3 == 0) continue;
      Integer b4 = binom_int(pn - k, l);
      Rational term = make_rational(b1 * b2 * b3 * b4, pow_integer(2, k));
      if ((r + half + l) % 2 != 0) term = -term;
      acc += term;
    }
  }
  return acc;
}

SweepResult verify_intro_coeff(long long p, long long n,
                               std::optional<long long> i_max, int jobs,
                               std::atomic<std::size_t>* progress) {
  SweepResult res;
  res.target = "intro-coeff";
  long long pn = checked_pow_ll(p, n);
  long long j_hi = (pn - 1) / 2 + 1;
  res.params = SweepParams{p, -1, n, -1, i_max.value_or(-1)};

  struct IJ {
    long long i, j;
  };
  std::vector<IJ> idx;
  for (long long j = 0; j <= j_hi; ++j) {
    long long i_hi = i_max.value_or(pn + 2 * j + 2);
    for (long long i = 0; i <= i_hi; ++i) idx.push_back({i, j});
  }
  res.cells.resize(idx.size());
  parallel_for(idx.size(), jobs, progress, [&](std::size_t w) {
    SweepCell& cell = res.cells[w];
    cell.i = idx[w].i;
    cell.j = idx[w].j;
    cell.required = PAdicVal::of(n);
    cell.observed = vp(intro_coefficient_sum(p, n, idx[w].i, idx[w].j), p);
    cell.pass = cell.observed.at_least(cell.required);
  });
  res.finalize();
  return res;
}

SweepResult verify_main_sweep(long long p, long long n, int jobs,
                              std::atomic<std::size_t>* progress) {
  (void)jobs;
  SweepResult res;
  res.target = "main";
  res.params = SweepParams{p, -1, n, -1, -1};
  Poly4 sum = main_sum(p, n);
  SweepCell cell;
  cell.required = PAdicVal::of(n);
  cell.observed = sum.coeffs_in_z_half() ? sum.min_vp(p) : PAdicVal::of(INT64_MIN / 2);
  cell.pass = sum.coeffs_in_z_half() && cell.observed.at_least(cell.required);
  res.cells.push_back(cell);
  if (progress) progress->fetch_add(1);
  res.finalize();
  return res;
}

}  // namespace supercong
