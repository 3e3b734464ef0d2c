#include "supercong/digits.hpp"

#include <algorithm>

namespace supercong {

DigitContext::DigitContext(long long p_, long long b_, long long n_, long long a_)
    : p(p_), b(b_), n(n_), a(a_) {
  if (!is_prime(p)) throw std::invalid_argument("DigitContext: p must be prime");
  if (b < 1 || b > p - 1) throw std::invalid_argument("DigitContext: need 1 <= b <= p-1");
  if (n < 1) throw std::invalid_argument("DigitContext: need n >= 1");
  if (a < n) throw std::invalid_argument("DigitContext: need a >= n");
  if (a > 40) throw std::invalid_argument("DigitContext: a too large");
}

namespace {

long long weighted_digit_sum(long long p, long long weight, long long r) {
  if (r < 0) throw std::invalid_argument("weighted_digit_sum: negative r");
  unsigned __int128 acc = 0, pw = 1;
  const unsigned __int128 cap = static_cast<unsigned __int128>(INT64_MAX);
  for (long long x = r; x > 0; x >>= 1) {
    if (x & 1) {
      acc += static_cast<unsigned __int128>(weight) * pw;
      if (acc > cap) throw std::overflow_error("weighted_digit_sum: overflow");
    }
    if (x > 1) {
      pw *= static_cast<unsigned __int128>(p);
      if (pw > cap) throw std::overflow_error("weighted_digit_sum: overflow");
    }
  }
  return static_cast<long long>(acc);
}

}  // namespace

long long k_r(long long p, long long r) {
  if (p < 2) throw std::invalid_argument("k_r: p < 2");
  return weighted_digit_sum(p, p - 1, r);
}

long long m_of(long long p, long long b, long long r) {
  if (p < 2 || b < 1 || b > p - 1) throw std::invalid_argument("m_of: bad (p, b)");
  return weighted_digit_sum(p, b, r);
}

long long m_of(const DigitContext& ctx, long long r) { return m_of(ctx.p, ctx.b, r); }

long long d_reflect(long long a, long long r) {
  if (a < 0 || a > 62) throw std::invalid_argument("d_reflect: bad a");
  long long top = (1LL << a) - 1;
  if (r < 0 || r > top) throw std::invalid_argument("d_reflect: r out of [0, 2^a-1]");
  return top - r;
}

IndexSet set_S(const DigitContext& ctx, long long k, long long r) {
  if (k < 0 || k > ctx.n) throw std::invalid_argument("set_S: k out of [0, n]");
  if (r < 0 || r > (1LL << (ctx.n - k)) - 1)
    throw std::invalid_argument("set_S: r out of [0, 2^{n-k}-1]");
  if (k == 0) return {r};
  IndexSet out;
  out.reserve(static_cast<std::size_t>(1LL << k));
  long long step = 1LL << (ctx.n - k + 1);
  for (long long rp = 0; rp < (1LL << (k - 1)); ++rp) {
    long long s = r + step * rp;
    out.push_back(s);
    out.push_back(d_reflect(ctx.n, s));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::logic_error("set_S: duplicate element");
  return out;
}

IndexSet set_R(const DigitContext& ctx, long long k, long long k_prime, long long r) {
  if (k_prime < 0 || k_prime > k) throw std::invalid_argument("set_R: need 0 <= k' <= k");
  IndexSet out;
  long long top = (1LL << (ctx.n - k_prime)) - 1;
  for (long long s : set_S(ctx, k, r))
    if (s <= top) out.push_back(s);
  return out;
}

}  // namespace supercong
