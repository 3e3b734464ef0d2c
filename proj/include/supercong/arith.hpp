#ifndef SUPERCONG_ARITH_HPP
#define SUPERCONG_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace supercong {

// All arithmetic in this library is exact. Integer and Rational are GMP
// types; Rational values are always kept in canonical form (den > 0,
// gcd(num, den) = 1, zero is 0/1).
using Integer = mpz_class;
using Rational = mpq_class;

/// p-adic valuation: a (possibly negative) integer, or +infinity for 0.
class PAdicVal {
 public:
  static PAdicVal infinity() { return PAdicVal(true, 0); }
  static PAdicVal of(long long v) { return PAdicVal(false, v); }

  bool is_infinite() const { return inf_; }
  long long value() const {
    if (inf_) throw std::logic_error("PAdicVal: value() of +infinity");
    return v_;
  }

  // true iff this >= bound (infinity exceeds every bound)
  bool at_least(long long bound) const { return inf_ || v_ >= bound; }
  bool at_least(const PAdicVal& bound) const {
    return bound.inf_ ? inf_ : at_least(bound.v_);
  }

  PAdicVal operator+(const PAdicVal& o) const {
    if (inf_ || o.inf_) return infinity();
    return of(v_ + o.v_);
  }

  bool operator==(const PAdicVal& o) const {
    return inf_ == o.inf_ && (inf_ || v_ == o.v_);
  }
  bool operator!=(const PAdicVal& o) const { return !(*this == o); }
  bool operator<(const PAdicVal& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
  }

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  PAdicVal(bool inf, long long v) : inf_(inf), v_(v) {}
  bool inf_;
  long long v_;
};

bool is_prime(long long p);

Rational make_rational(const Integer& num, const Integer& den);
Rational rational_of(long long v);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);  // "num/den", or "num" when den = 1

/// den is a power of two (i.e. the value lies in Z[1/2])
bool den_is_power_of_two(const Rational& x);

Integer factorial(long long n);
Integer pow_integer(long long base, long long exp);
long long checked_pow_ll(long long base, long long exp);  // throws on overflow

/// n!/(k!(n-k)!) for 0 <= k <= n; 0 when k < 0 or k > n. Rejects n < 0.
Integer binom_int(const Integer& n, const Integer& k);
Integer binom_int(long long n, long long k);

/// x(x-1)...(x-k+1)/k! for arbitrary rational x and k >= 0.
Rational binom_rat(const Rational& x, long long k);

PAdicVal vp(const Integer& x, long long p);
PAdicVal vp(const Rational& x, long long p);

/// product of 1 <= i <= n with p not dividing i (the p-deprived factorial)
Integer deprived_factorial(long long n, long long p);

/// product of every integer in [lo, hi]; 1 when lo > hi
Integer range_product(long long lo, long long hi);

/// floor(n / p^j)
long long t_j(long long n, long long j, long long p);

/// the value in [0, p^l - 1] congruent to t_j(n), i.e. the l-digit window
/// of n in base p starting at digit j
long long t_jl(long long n, long long j, long long l, long long p);

/// 1 iff adding n and n2 in base p carries out of digit j; j = -1 gives 0
int carry_eps(long long n, long long n2, long long j, long long p);

/// t_j(n+n2) - t_j(n) - t_j(n2) == carry_eps(n, n2, j-1, p)
bool verify_carry_lemma(long long n, long long n2, long long j, long long p);

/// +1 when p = 2 and l >= 3, otherwise -1
int delta_sign(long long p, long long l);

/// Brute-force check of the Granville factorial congruence at (n, j, l):
///   (a) t_j(n)! == t_{j+1}(n)! * p^{t_{j+1}(n)} * t_j(n)!_p   exactly
///   (b) t_j(n)!_p == delta^{t_{j+l}(n)} * t_{j,l}(n)!_p       mod p^l
/// Both sides are computed from direct products; this function is an oracle
/// and deliberately takes no shortcuts.
bool verify_granville(long long n, long long j, long long l, long long p);

/// Growable table of factorials 0!..bound!. ensure() may be called
/// concurrently; lookups of ensured values are lock-free-ish (shared lock)
/// and results are identical to calling factorial() directly.
class FactorialCache {
 public:
  void ensure(long long bound);
  const Integer& operator()(long long n) const;

 private:
  mutable std::shared_mutex mutex_;
  std::deque<Integer> table_{Integer(1)};
};

/// Same idea for p-deprived factorials at a fixed p.
class DeprivedCache {
 public:
  explicit DeprivedCache(long long p);
  long long p() const { return p_; }
  void ensure(long long bound);
  const Integer& operator()(long long n) const;

 private:
  long long p_;
  mutable std::shared_mutex mutex_;
  std::deque<Integer> table_{Integer(1)};
};

}  // namespace supercong

#endif
