#include "supercong/hyp.hpp"

#include "supercong/digits.hpp"
#include "supercong/parallel.hpp"

namespace supercong {

HypPoly F_m(long long m) {
  if (m < 0) throw std::invalid_argument("F_m: negative m");
  std::vector<Rational> c(static_cast<std::size_t>(m + 1));
  Rational half_arg = make_rational(Integer(static_cast<long>(2 * m - 1)), Integer(2));
  for (long long i = 0; i <= m; ++i)
    c[i] = Rational(binom_int(m, i)) * binom_rat(half_arg, i);
  return HypPoly{m, UniPoly(std::move(c))};
}

UniPoly F_m_shifted(long long m) {
  if (m < 0) throw std::invalid_argument("F_m_shifted: negative m");
  std::vector<Rational> c(static_cast<std::size_t>(m + 1));
  for (long long i = 0; i <= m; ++i) {
    Rational v = Rational(binom_int(m, i)) *
                 binom_rat(make_rational(Integer(static_cast<long>(-1 - 2 * i)), Integer(2)), m);
    if (i % 2 != 0) v = -v;
    c[m - i] = v;
  }
  return UniPoly(std::move(c));
}

bool verify_gould(long long m, const std::vector<Rational>& x_samples) {
  UniPoly t_minus_1({Rational(-1), Rational(1)});
  for (const Rational& x : x_samples) {
    UniPoly lhs, rhs;
    for (long long i = 0; i <= m; ++i) {
      Rational bmi = Rational(binom_int(m, i));
      lhs = lhs + UniPoly::constant(bmi * binom_rat(x, i)).shifted(i);
      rhs = rhs + t_minus_1.pow(m - i) * (bmi * binom_rat(x + Rational(static_cast<long>(i)), m));
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

namespace {

void require_odd_prime(long long p, long long n, const char* who) {
  if (p == 2) throw std::invalid_argument(std::string(who) + ": p must be odd");
  if (!is_prime(p)) throw std::invalid_argument(std::string(who) + ": p must be prime");
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n >= 1 required");
}

UniPoly hyp_sum_direct_route(long long p, long long n) {
  // sum_r (-1)^r (1-t)^{(p^n-1-k_r)/2} F_{k_r/2}(t)
  long long pn = checked_pow_ll(p, n);
  UniPoly one_minus_t({Rational(1), Rational(-1)});
  UniPoly acc;
  for (long long r = 0; r <= (1LL << n) - 1; ++r) {
    long long k = k_r(p, r);
    UniPoly term = one_minus_t.pow((pn - 1 - k) / 2) * F_m(k / 2).poly;
    acc = r % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

UniPoly hyp_sum(long long p, long long n) {
  require_odd_prime(p, n, "hyp_sum");
  long long pn = checked_pow_ll(p, n);
  UniPoly acc;
  for (long long r = 0; r <= (1LL << n) - 1; ++r) {
    long long k = k_r(p, r);
    UniPoly term = F_m_shifted(k / 2).shifted((pn - 1 - k) / 2);
    acc = r % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

bool verify_hyp(long long p, long long n) {
  SweepResult res = verify_hyp_sweep(p, n);
  return res.all_pass;
}

bool verify_i0(long long p, long long n) {
  require_odd_prime(p, n, "verify_i0");
  Rational acc(0);
  Rational minus_half = make_rational(Integer(-1), Integer(2));
  for (long long r = 0; r <= (1LL << n) - 1; ++r) {
    Rational term = binom_rat(minus_half, k_r(p, r) / 2);
    if (r % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return vp(acc, p).at_least(n);
}

SweepResult verify_hyp_sweep(long long p, long long n, int jobs,
                             std::atomic<std::size_t>* progress) {
  require_odd_prime(p, n, "verify_hyp_sweep");
  (void)jobs;
  SweepResult res;
  res.target = "hyp";
  res.params = SweepParams{p, -1, n, -1, -1};
  UniPoly shifted_route = hyp_sum(p, n);
  UniPoly direct_route = hyp_sum_direct_route(p, n);
  UniPoly recomposed = compose_affine(direct_route, Rational(1), Rational(-1));

  long long deg = (checked_pow_ll(p, n) - 1) / 2;
  for (long long i = 0; i <= deg; ++i) {
    long long d = deg - i;  // coefficient of t^{deg-i}
    SweepCell value_cell;
    value_cell.i = i;
    value_cell.required = PAdicVal::of(n);
    value_cell.observed = vp(shifted_route.coeff(d), p);
    value_cell.pass = value_cell.observed.at_least(value_cell.required);
    res.cells.push_back(value_cell);

    SweepCell direct_cell;
    direct_cell.i = i;
    direct_cell.kind = "direct";
    direct_cell.required = PAdicVal::of(n);
    direct_cell.observed = vp(direct_route.coeff(d), p);
    direct_cell.pass = direct_cell.observed.at_least(direct_cell.required);
    res.cells.push_back(direct_cell);

    SweepCell agree_cell;
    agree_cell.i = i;
    agree_cell.kind = "agree";
    agree_cell.required = PAdicVal::infinity();
    agree_cell.observed = vp(shifted_route.coeff(d) - recomposed.coeff(d), p);
    agree_cell.pass = agree_cell.observed.is_infinite();
    res.cells.push_back(agree_cell);
    if (progress) progress->fetch_add(1);
  }
  // degrees cannot exceed deg on either route
  SweepCell degree_cell;
  degree_cell.kind = "degree";
  degree_cell.required = PAdicVal::infinity();
  degree_cell.observed = (shifted_route.degree() <= deg && recomposed.degree() <= deg)
                             ? PAdicVal::infinity()
                             : PAdicVal::of(0);
  degree_cell.pass = degree_cell.observed.is_infinite();
  res.cells.push_back(degree_cell);
  res.finalize();
  return res;
}

}  // namespace supercong
