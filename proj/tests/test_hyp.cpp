#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "supercong/hyp.hpp"

using namespace supercong;

namespace {

Rational frac(long long num, long long den) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

// the key-congruence cell value, recomputed here for the bridge check
Rational key_cell(long long p, long long n, long long i) {
  Rational acc(0);
  for (long long r = 0; r <= (1LL << n) - 1; ++r) {
    long long half = k_r(p, r) / 2;
    Rational term = Rational(binom_int(half, i)) * binom_rat(frac(-1 - 2 * i, 2), half);
    acc = r % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

TEST_CASE("F_m coefficients") {
  CHECK(F_m(0).poly == UniPoly({Rational(1)}));
  CHECK(F_m(1).poly == UniPoly({Rational(1), frac(1, 2)}));
  CHECK(F_m(2).poly == UniPoly({Rational(1), Rational(3), frac(3, 8)}));
  for (long long m : {0, 1, 2, 5, 9, 20}) {
    const UniPoly& f = F_m(m).poly;
    CHECK(f.degree() == m);
    for (long long i = 0; i <= m; ++i) {
      Rational c = f.coeff(i);
      CHECK(c == Rational(binom_int(m, i)) * binom_rat(frac(2 * m - 1, 2), i));
      CHECK(den_is_power_of_two(c));
      // v2 bound from the half-integer binomial denominators
      long long budget = i + (i > 0 ? vp(factorial(i), 2).value() : 0);
      CHECK(vp(c, 2).at_least(-budget));
    }
  }
}

TEST_CASE("shifted expansion matches affine composition, m <= 40") {
  CHECK(F_m_shifted(0) == UniPoly({Rational(1)}));
  CHECK(F_m_shifted(1) == UniPoly({frac(3, 2), frac(-1, 2)}));
  for (long long m = 0; m <= 40; ++m)
    CHECK(F_m_shifted(m) == compose_affine(F_m(m).poly, Rational(1), Rational(-1)));
}

TEST_CASE("binomial transform identity") {
  CHECK(verify_gould(0, {Rational(0)}));
  for (long long m = 0; m <= 10; ++m)
    CHECK(verify_gould(m, {Rational(0), Rational(1), frac(-1, 2), frac(7, 3)}));
  for (long long m = 0; m <= 20; ++m)
    CHECK(verify_gould(m, {frac(2 * m - 1, 2)}));
}

TEST_CASE("hyp_sum small cases") {
  CHECK(hyp_sum(3, 1) == UniPoly({frac(-3, 2), frac(3, 2)}));
  CHECK(hyp_sum(3, 1).degree() == 1);
  // exponent (p^n-1-k_r)/2 is integral for every r
  for (auto [p, n] : {std::pair<long long, long long>{3, 2}, {5, 1}, {7, 1}}) {
    long long pn = checked_pow_ll(p, n);
    for (long long r = 0; r <= (1LL << n) - 1; ++r) {
      long long k = k_r(p, r);
      CHECK(k <= pn - 1);
      CHECK((pn - 1 - k) % 2 == 0);
    }
    CHECK(hyp_sum(p, n).degree() <= (pn - 1) / 2);
  }
  CHECK_THROWS_AS(hyp_sum(2, 1), std::invalid_argument);
}

TEST_CASE("hyp congruence with route agreement") {
  CHECK(verify_hyp(3, 1));
  CHECK(verify_hyp(5, 1));
  CHECK(verify_hyp(3, 2));
  SweepResult res = verify_hyp_sweep(3, 2);
  CHECK(res.all_pass);
  bool saw_agree = false, saw_direct = false;
  for (const SweepCell& c : res.cells) {
    if (c.kind == "agree") saw_agree = true;
    if (c.kind == "direct") saw_direct = true;
  }
  CHECK(saw_agree);
  CHECK(saw_direct);
}

TEST_CASE("coefficient bridge to the key sums") {
  for (auto [p, n] : {std::pair<long long, long long>{3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    UniPoly sum = hyp_sum(p, n);
    long long deg = (checked_pow_ll(p, n) - 1) / 2;
    for (long long i = 0; i <= deg; ++i) {
      Rational expect = key_cell(p, n, i);
      if (i % 2 != 0) expect = -expect;
      CHECK(sum.coeff(deg - i) == expect);
    }
  }
}

TEST_CASE("lowest-coefficient congruence") {
  CHECK(verify_i0(3, 1));
  CHECK(verify_i0(3, 2));
  CHECK(verify_i0(5, 1));
  // agreement with the key sweep's i = 0 cell: binom(k_r/2, 0) = 1
  for (auto [p, n] : {std::pair<long long, long long>{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    Rational i0(0);
    Rational minus_half = frac(-1, 2);
    for (long long r = 0; r <= (1LL << n) - 1; ++r) {
      Rational term = binom_rat(minus_half, k_r(p, r) / 2);
      i0 = r % 2 == 0 ? i0 + term : i0 - term;
    }
    CHECK(i0 == key_cell(p, n, 0));
  }
  Rational v31(0);
  for (long long r = 0; r <= 1; ++r) {
    Rational term = binom_rat(frac(-1, 2), k_r(3, r) / 2);
    v31 = r % 2 == 0 ? v31 + term : v31 - term;
  }
  CHECK(v31 == frac(3, 2));
}
