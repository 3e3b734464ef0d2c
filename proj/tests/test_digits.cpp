#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "supercong/digits.hpp"

using namespace supercong;

TEST_CASE("DigitContext invariants") {
  CHECK_NOTHROW(DigitContext(3, 1, 2, 3));
  CHECK_THROWS_AS(DigitContext(4, 1, 1, 1), std::invalid_argument);   // p not prime
  CHECK_THROWS_AS(DigitContext(3, 0, 1, 1), std::invalid_argument);   // b < 1
  CHECK_THROWS_AS(DigitContext(3, 3, 1, 1), std::invalid_argument);   // b > p-1
  CHECK_THROWS_AS(DigitContext(3, 1, 0, 1), std::invalid_argument);   // n < 1
  CHECK_THROWS_AS(DigitContext(3, 1, 2, 1), std::invalid_argument);   // a < n
}

TEST_CASE("k_r digit patterns") {
  CHECK(k_r(3, 0) == 0);
  CHECK(k_r(3, 3) == 8);
  CHECK(k_r(5, 2) == 20);
  CHECK(k_r(2, 13) == 13);  // p = 2 reproduces r itself
  // strictly increasing, and each value has only digits 0 or p-1 in base p
  for (long long p : {2, 3, 5, 13}) {
    long long prev = -1;
    for (long long r = 0; r < (1 << 12); ++r) {
      long long v = k_r(p, r);
      CHECK(v > prev);
      prev = v;
      for (long long x = v; x > 0; x /= p) CHECK((x % p == 0 || x % p == p - 1));
    }
  }
}

TEST_CASE("m_of") {
  CHECK(m_of(2, 1, 13) == 13);
  CHECK(m_of(5, 2, 3) == 12);
  CHECK(m_of(DigitContext(7, 3, 2, 2), 0) == 0);
  // m = k_r/2 at b = (p-1)/2, and m = r at p = 2
  for (long long r = 0; r < 256; ++r) {
    CHECK(m_of(5, 2, r) == k_r(5, r) / 2);
    CHECK(m_of(7, 3, r) == k_r(7, r) / 2);
  }
  for (long long p : {3, 5, 13})
    for (long long b = 1; b <= p - 1; ++b) {
      long long prev = -1;
      for (long long r = 0; r < (1 << 12); ++r) {
        long long v = m_of(p, b, r);
        CHECK(v > prev);
        prev = v;
      }
    }
}

TEST_CASE("d_reflect") {
  CHECK(d_reflect(3, 2) == 5);
  CHECK(d_reflect(2, 0) == 3);
  CHECK_THROWS_AS(d_reflect(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(d_reflect(2, -1), std::invalid_argument);
  for (long long a = 1; a <= 10; ++a)
    for (long long r = 0; r < (1LL << a); ++r) {
      CHECK(d_reflect(a, d_reflect(a, r)) == r);
      if (r <= (1LL << (a - 1)) - 1) CHECK(r < d_reflect(a, r));
    }
}

TEST_CASE("reflection identity for m") {
  for (long long p : {2, 3, 5})
    for (long long b = 1; b <= p - 1; ++b)
      for (long long a = 1; a <= 6; ++a) {
        DigitContext ctx(p, b, 1, a);
        long long total = m_of(ctx, (1LL << a) - 1);
        for (long long r = 0; r < (1LL << a); ++r)
          CHECK(m_of(ctx, r) + m_of(ctx, d_reflect(a, r)) == total);
      }
}

TEST_CASE("set_S basics") {
  DigitContext ctx(3, 1, 2, 2);
  CHECK(set_S(ctx, 0, 1) == IndexSet{1});
  CHECK(set_S(ctx, 1, 0) == IndexSet{0, 3});
  CHECK(set_S(ctx, 2, 0) == IndexSet{0, 1, 2, 3});
  CHECK_THROWS_AS(set_S(ctx, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(set_S(ctx, 1, 2), std::invalid_argument);
  for (long long n = 1; n <= 10; ++n) {
    DigitContext big(3, 1, n, n);
    for (long long k = 0; k <= n; ++k)
      for (long long r = 0; r < (1LL << (n - k)); r += std::max<long long>(1, (1LL << (n - k)) / 8))
        CHECK(set_S(big, k, r).size() == static_cast<std::size_t>(1LL << k));
  }
}

TEST_CASE("partition identity for S") {
  for (long long n = 1; n <= 10; ++n) {
    DigitContext ctx(5, 2, n, n);
    for (long long k = 0; k < n; ++k)
      for (long long r = 0; r < (1LL << (n - k - 1)); ++r) {
        IndexSet lhs = set_S(ctx, k, r);
        IndexSet other = set_S(ctx, k, d_reflect(n - k, r));
        IndexSet merged(lhs);
        merged.insert(merged.end(), other.begin(), other.end());
        std::sort(merged.begin(), merged.end());
        CHECK(std::adjacent_find(merged.begin(), merged.end()) == merged.end());
        CHECK(merged == set_S(ctx, k + 1, r));
      }
  }
}

TEST_CASE("set_R endpoints and recursion") {
  DigitContext ctx(3, 1, 2, 2);
  CHECK(set_R(ctx, 2, 1, 0) == IndexSet{0, 1});
  for (long long n = 1; n <= 8; ++n) {
    DigitContext c(2, 1, n, n);
    for (long long k = 0; k <= n; ++k)
      for (long long r = 0; r < (1LL << (n - k)); ++r) {
        CHECK(set_R(c, k, 0, r) == set_S(c, k, r));
        CHECK(set_R(c, k, k, r) == IndexSet{r});
        for (long long kp = 0; kp < k; ++kp) {
          IndexSet next = set_R(c, k, kp + 1, r);
          IndexSet rebuilt(next);
          for (long long s : next) rebuilt.push_back(d_reflect(n - kp, s));
          std::sort(rebuilt.begin(), rebuilt.end());
          CHECK(std::adjacent_find(rebuilt.begin(), rebuilt.end()) == rebuilt.end());
          CHECK(rebuilt == set_R(c, k, kp, r));
        }
      }
  }
  CHECK_THROWS_AS(set_R(ctx, 1, 2, 0), std::invalid_argument);
}
