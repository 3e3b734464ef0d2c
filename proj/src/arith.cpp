#include "supercong/arith.hpp"

#include <mutex>

namespace supercong {

bool is_prime(long long p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_of(long long v) { return Rational(Integer(static_cast<long>(v))); }

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

bool den_is_power_of_two(const Rational& x) {
  return mpz_popcount(x.get_den().get_mpz_t()) == 1;
}

Integer factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer pow_integer(long long base, long long exp) {
  if (base < 0 || exp < 0) throw std::invalid_argument("pow_integer: negative argument");
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return r;
}

long long checked_pow_ll(long long base, long long exp) {
  if (base < 0 || exp < 0) throw std::invalid_argument("checked_pow_ll: negative argument");
  unsigned __int128 acc = 1;
  for (long long i = 0; i < exp; ++i) {
    acc *= static_cast<unsigned __int128>(base);
    if (acc > static_cast<unsigned __int128>(INT64_MAX))
      throw std::overflow_error("checked_pow_ll: overflow");
  }
  return static_cast<long long>(acc);
}

Integer binom_int(const Integer& n, const Integer& k) {
  if (n < 0)
    throw std::invalid_argument("binom_int: negative upper argument (use binom_rat)");
  if (k < 0 || k > n) return Integer(0);
  if (!k.fits_ulong_p()) throw std::overflow_error("binom_int: k too large");
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return r;
}

Integer binom_int(long long n, long long k) {
  return binom_int(Integer(static_cast<long>(n)), Integer(static_cast<long>(k)));
}

Rational binom_rat(const Rational& x, long long k) {
  if (k < 0) throw std::invalid_argument("binom_rat: negative k");
  Rational acc(1);
  Rational term(x);
  for (long long i = 0; i < k; ++i) {
    acc *= term;
    term -= 1;
  }
  acc /= Rational(factorial(k));
  return acc;
}

PAdicVal vp(const Integer& x, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("vp: p must be prime");
  if (x == 0) return PAdicVal::infinity();
  Integer reduced;
  Integer pz(static_cast<long>(p));
  auto count = mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
  return PAdicVal::of(static_cast<long long>(count));
}

PAdicVal vp(const Rational& x, long long p) {
  if (x == 0) return PAdicVal::infinity();
  PAdicVal vn = vp(Integer(x.get_num()), p);
  PAdicVal vd = vp(Integer(x.get_den()), p);
  return PAdicVal::of(vn.value() - vd.value());
}

namespace {

// binary-split product of the integers in [lo, hi] coprime to p
Integer coprime_product(long long lo, long long hi, long long p) {
  if (lo > hi) return Integer(1);
  if (hi - lo < 128) {
    Integer acc(1);
    for (long long v = lo; v <= hi; ++v)
      if (v % p != 0) acc *= static_cast<unsigned long>(v);
    return acc;
  }
  long long mid = lo + (hi - lo) / 2;
  return coprime_product(lo, mid, p) * coprime_product(mid + 1, hi, p);
}

}  // namespace

Integer deprived_factorial(long long n, long long p) {
  if (n < 0) throw std::invalid_argument("deprived_factorial: negative n");
  if (!is_prime(p)) throw std::invalid_argument("deprived_factorial: p must be prime");
  return coprime_product(1, n, p);
}

Integer range_product(long long lo, long long hi) {
  if (lo < 0) throw std::invalid_argument("range_product: negative bound");
  if (lo > hi) return Integer(1);
  if (hi - lo < 128) {
    Integer acc(1);
    for (long long v = lo; v <= hi; ++v) acc *= static_cast<unsigned long>(v);
    return acc;
  }
  long long mid = lo + (hi - lo) / 2;
  return range_product(lo, mid) * range_product(mid + 1, hi);
}

long long t_j(long long n, long long j, long long p) {
  if (n < 0 || j < 0) throw std::invalid_argument("t_j: negative argument");
  if (p < 2) throw std::invalid_argument("t_j: p < 2");
  long long v = n;
  for (long long q = 0; q < j && v > 0; ++q) v /= p;
  return v;
}

long long t_jl(long long n, long long j, long long l, long long p) {
  if (l < 0) throw std::invalid_argument("t_jl: negative l");
  long long v = t_j(n, j, p);
  long long result = 0, scale = 1;
  for (long long q = 0; q < l && v > 0; ++q) {
    result += (v % p) * scale;
    scale *= p;
    v /= p;
  }
  return result;
}

int carry_eps(long long n, long long n2, long long j, long long p) {
  if (n < 0 || n2 < 0) throw std::invalid_argument("carry_eps: negative addend");
  if (j < -1) throw std::invalid_argument("carry_eps: j < -1");
  if (p < 2) throw std::invalid_argument("carry_eps: p < 2");
  if (j == -1) return 0;
  int carry = 0;
  long long x = n, y = n2;
  for (long long q = 0; q <= j; ++q) {
    long long s = x % p + y % p + carry;
    carry = s >= p ? 1 : 0;
    x /= p;
    y /= p;
    if (x == 0 && y == 0 && carry == 0) return 0;
  }
  return carry;
}

bool verify_carry_lemma(long long n, long long n2, long long j, long long p) {
  if (j < 0) throw std::invalid_argument("verify_carry_lemma: j < 0");
  long long lhs = t_j(n + n2, j, p) - t_j(n, j, p) - t_j(n2, j, p);
  return lhs == carry_eps(n, n2, j - 1, p);
}

int delta_sign(long long p, long long l) { return (p == 2 && l >= 3) ? 1 : -1; }

bool verify_granville(long long n, long long j, long long l, long long p) {
  if (n < 0 || j < 0 || l < 0) throw std::invalid_argument("verify_granville: negative argument");
  if (!is_prime(p)) throw std::invalid_argument("verify_granville: p must be prime");
  long long tj = t_j(n, j, p);
  long long tj1 = t_j(n, j + 1, p);
  Integer dp = deprived_factorial(tj, p);
  // the factorial identity t_j! = t_{j+1}! p^{t_{j+1}} t_j!_p with the
  // common t_{j+1}! cancelled; both sides stay direct products
  Integer lhs = range_product(tj1 + 1, tj);
  Integer rhs = pow_integer(p, tj1);
  rhs *= dp;
  if (lhs != rhs) return false;
  if (l == 0) return true;
  Integer pl = pow_integer(p, l);
  Integer small = deprived_factorial(t_jl(n, j, l, p), p);
  if (delta_sign(p, l) < 0 && t_j(n, j + l, p) % 2 != 0) small = -small;
  Integer lm, rm;
  mpz_mod(lm.get_mpz_t(), dp.get_mpz_t(), pl.get_mpz_t());
  mpz_mod(rm.get_mpz_t(), small.get_mpz_t(), pl.get_mpz_t());
  return lm == rm;
}

void FactorialCache::ensure(long long bound) {
  if (bound < 0) return;
  std::unique_lock lock(mutex_);
  while (static_cast<long long>(table_.size()) <= bound) {
    Integer next = table_.back() * static_cast<unsigned long>(table_.size());
    table_.push_back(std::move(next));
  }
}

const Integer& FactorialCache::operator()(long long n) const {
  std::shared_lock lock(mutex_);
  if (n < 0 || n >= static_cast<long long>(table_.size()))
    throw std::logic_error("FactorialCache: value not ensured");
  return table_[static_cast<std::size_t>(n)];
}

DeprivedCache::DeprivedCache(long long p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("DeprivedCache: p must be prime");
}

void DeprivedCache::ensure(long long bound) {
  if (bound < 0) return;
  std::unique_lock lock(mutex_);
  while (static_cast<long long>(table_.size()) <= bound) {
    long long v = static_cast<long long>(table_.size());
    Integer next = table_.back();
    if (v % p_ != 0) next *= static_cast<unsigned long>(v);
    table_.push_back(std::move(next));
  }
}

const Integer& DeprivedCache::operator()(long long n) const {
  std::shared_lock lock(mutex_);
  if (n < 0 || n >= static_cast<long long>(table_.size()))
    throw std::logic_error("DeprivedCache: value not ensured");
  return table_[static_cast<std::size_t>(n)];
}

}  // namespace supercong
