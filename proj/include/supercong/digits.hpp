#ifndef SUPERCONG_DIGITS_HPP
#define SUPERCONG_DIGITS_HPP

#include <vector>

#include "supercong/arith.hpp"

namespace supercong {

/// Parameter box for the digit-pattern sweeps: prime p, weight 1 <= b <= p-1,
/// depth n >= 1, and reflection width a >= n.
struct DigitContext {
  long long p, b, n, a;
  DigitContext(long long p_, long long b_, long long n_, long long a_);
};

/// The r-th non-negative integer whose base-p digits are all 0 or p-1:
/// k_r = (p-1) * sum r_i p^i over the binary digits r_i of r.
long long k_r(long long p, long long r);

/// m(r) = b * sum r_i p^i; equals r when p = 2, b = 1, and k_r/2 when
/// b = (p-1)/2 for odd p. Strictly increasing in r.
long long m_of(long long p, long long b, long long r);
long long m_of(const DigitContext& ctx, long long r);

/// reflection r -> 2^a - 1 - r on [0, 2^a - 1]
long long d_reflect(long long a, long long r);

// Sorted list of distinct integers in [0, 2^n - 1].
using IndexSet = std::vector<long long>;

/// S_0(r) = {r}; for k >= 1, S_k(r) is the union of
///   S'_k(r)  = { r + 2^{n-k+1} r' : 0 <= r' <= 2^{k-1}-1 } and
///   S''_k(r) = { d_n(s) : s in S'_k(r) }.
/// Cardinality 2^k. Requires 0 <= k <= n and 0 <= r <= 2^{n-k}-1.
IndexSet set_S(const DigitContext& ctx, long long k, long long r);

/// R_{k'}(r) = { s in S_k(r) : s <= 2^{n-k'}-1 }; R_0 = S_k(r), R_k = {r}.
IndexSet set_R(const DigitContext& ctx, long long k, long long k_prime, long long r);

}  // namespace supercong

#endif
