#include "supercong/congruence.hpp"

#include <algorithm>

#include "supercong/parallel.hpp"

namespace supercong {

void SweepResult::finalize() {
  all_pass = std::all_of(cells.begin(), cells.end(),
                         [](const SweepCell& c) { return c.pass; });
}

CongruenceEngine::CongruenceEngine(const DigitContext& ctx) : ctx_(ctx) {
  M_ = m_of(ctx_, (1LL << ctx_.a) - 1);
  fact_.ensure(M_);
}

long long CongruenceEngine::m_r(long long r) const { return m_of(ctx_, r); }

void CongruenceEngine::require_wide() const {
  if (ctx_.a <= ctx_.n)
    throw std::invalid_argument("factorial-ratio quantities require a > n");
}

long long CongruenceEngine::e_val(long long r, long long i, long long j) const {
  require_wide();
  if (r < 0 || r > (1LL << ctx_.n) - 1) throw std::invalid_argument("e_val: r out of range");
  if (i < 0 || j < 0) throw std::invalid_argument("e_val: negative i or j");
  if (i > m_r(r)) throw std::invalid_argument("e_val: undefined for i > m(r)");
  long long p = ctx_.p;
  return t_j(M_ - i, j, p) - t_j(i, j, p) - t_j(m_r(r) - i, j, p) -
         t_j(m_of(ctx_, d_reflect(ctx_.a, r)) - i, j, p);
}

CellValue CongruenceEngine::x_val(long long r, long long i, long long j) const {
  require_wide();
  if (r < 0 || r > (1LL << ctx_.n) - 1) throw std::invalid_argument("x_val: r out of range");
  if (i < 0 || j < 0) throw std::invalid_argument("x_val: negative i or j");
  if (i > m_r(r)) return CellValue{Rational(0), PAdicVal::infinity()};
  long long p = ctx_.p;
  long long A = M_ - i;
  long long C = m_r(r) - i;
  long long D = m_of(ctx_, d_reflect(ctx_.a, r)) - i;  // > 0 since a > n
  Integer den = fact_(t_j(i, j, p)) * fact_(t_j(C, j, p)) * fact_(t_j(D, j, p));
  Rational v = make_rational(fact_(t_j(A, j, p)), den);
  return CellValue{v, vp(v, p)};
}

CellValue CongruenceEngine::y_val(long long r, long long i, long long j) const {
  if (i > m_r(r)) {
    require_wide();
    return CellValue{Rational(0), PAdicVal::infinity()};
  }
  CellValue xj = x_val(r, i, j);
  CellValue xj1 = x_val(r, i, j + 1);
  if (xj1.value == 0)
    throw std::logic_error("y_val: x_{j+1} vanished with i <= m(r)");
  Rational v = xj.value / xj1.value;
  return CellValue{v, vp(v, ctx_.p)};
}

CellValue CongruenceEngine::X_val(long long k, long long r, long long i, long long j) const {
  require_wide();
  Rational acc(0);
  for (long long s : set_S(ctx_, k, r)) {
    CellValue xs = x_val(s, i, j);
    if (s % 2 == 0)
      acc += xs.value;
    else
      acc -= xs.value;
  }
  return CellValue{acc, vp(acc, ctx_.p)};
}

Rational CongruenceEngine::multinomial_x0(long long r, long long i) const {
  if (r < 0 || r > (1LL << ctx_.n) - 1)
    throw std::invalid_argument("multinomial_x0: r out of range");
  if (i < 0) throw std::invalid_argument("multinomial_x0: negative i");
  long long mr = m_r(r);
  long long md = m_of(ctx_, d_reflect(ctx_.a, r));
  if (i > mr || i > md) return Rational(0);
  Integer den = fact_(i) * fact_(mr - i) * fact_(md - i);
  return make_rational(fact_(M_ - i), den);
}

Rational CongruenceEngine::X_multinomial(long long k, long long r, long long i) const {
  Rational acc(0);
  for (long long s : set_S(ctx_, k, r)) {
    Rational xs = multinomial_x0(s, i);
    if (s % 2 == 0)
      acc += xs;
    else
      acc -= xs;
  }
  return acc;
}

Integer CongruenceEngine::gen1_term(long long r, long long i) const {
  Integer first = binom_int(m_r(r), i);
  if (first == 0) return Integer(0);
  return first * binom_int(M_ - i, m_r(r));
}

namespace {

struct Idx {
  long long k = -1, r = -1, i = -1, j = -1, l = -1;
};

long long default_i_hi(const DigitContext& ctx) {
  return m_of(ctx, (1LL << ctx.n) - 1);
}

}  // namespace

SweepResult verify_gen2(const DigitContext& ctx, std::optional<long long> i_max, int jobs,
                        std::atomic<std::size_t>* progress) {
  SweepResult res;
  res.target = "gen2";
  long long i_hi = i_max.value_or(default_i_hi(ctx));
  res.params = SweepParams{ctx.p, ctx.b, ctx.n, ctx.a, i_hi};
  CongruenceEngine eng(ctx);

  std::vector<Idx> idx;
  if (ctx.a == ctx.n) {
    // exact-zero layer: the reflection r -> d_n(r) pairs off every term
    for (long long i = 0; i <= i_hi; ++i) idx.push_back({ctx.n, 0, i, 0});
  } else {
    for (long long k = 0; k <= ctx.n; ++k)
      for (long long r = 0; r <= (1LL << (ctx.n - k)) - 1; ++r)
        for (long long i = 0; i <= i_hi; ++i)
          for (long long j = 0; j <= ctx.n - k; ++j) idx.push_back({k, r, i, j});
  }

  res.cells.resize(idx.size());
  bool exact_zero = ctx.a == ctx.n;
  parallel_for(idx.size(), jobs, progress, [&](std::size_t w) {
    const Idx& q = idx[w];
    SweepCell& cell = res.cells[w];
    cell.k = q.k;
    cell.r = q.r;
    cell.i = q.i;
    cell.j = q.j;
    if (exact_zero) {
      cell.required = PAdicVal::infinity();
      cell.observed = vp(eng.X_multinomial(q.k, q.r, q.i), ctx.p);
    } else {
      cell.required = PAdicVal::of(q.k);
      cell.observed = eng.X_val(q.k, q.r, q.i, q.j).valuation;
    }
    cell.pass = cell.observed.at_least(cell.required);
  });
  res.finalize();
  return res;
}

SweepResult verify_gen1(const DigitContext& ctx, std::optional<long long> i_max, int jobs,
                        std::atomic<std::size_t>* progress) {
  SweepResult res;
  res.target = "gen1";
  long long i_hi = i_max.value_or(default_i_hi(ctx));
  res.params = SweepParams{ctx.p, ctx.b, ctx.n, ctx.a, i_hi};
  CongruenceEngine eng(ctx);

  std::size_t count = i_hi < 0 ? 0 : static_cast<std::size_t>(i_hi + 1);
  res.cells.resize(2 * count);
  parallel_for(count, jobs, progress, [&](std::size_t w) {
    long long i = static_cast<long long>(w);
    Rational direct(0);
    for (long long r = 0; r <= (1LL << ctx.n) - 1; ++r) {
      Integer term = eng.gen1_term(r, i);
      if (r % 2 == 0)
        direct += Rational(term);
      else
        direct -= Rational(term);
    }
    Rational cross = (ctx.a > ctx.n) ? eng.X_val(ctx.n, 0, i, 0).value
                                     : eng.X_multinomial(ctx.n, 0, i);
    SweepCell& value_cell = res.cells[2 * w];
    value_cell.i = i;
    value_cell.required = PAdicVal::of(ctx.n);
    value_cell.observed = vp(direct, ctx.p);
    value_cell.pass = value_cell.observed.at_least(value_cell.required);
    SweepCell& agree_cell = res.cells[2 * w + 1];
    agree_cell.i = i;
    agree_cell.kind = "agree";
    agree_cell.required = PAdicVal::infinity();
    agree_cell.observed = vp(direct - cross, ctx.p);
    agree_cell.pass = agree_cell.observed.is_infinite();
  });
  res.finalize();
  return res;
}

SweepResult verify_key(long long p, long long n, std::optional<long long> i_max, int jobs,
                       std::atomic<std::size_t>* progress) {
  if (p == 2) throw std::invalid_argument("verify_key: p must be odd");
  if (!is_prime(p)) throw std::invalid_argument("verify_key: p must be prime");
  if (n < 1) throw std::invalid_argument("verify_key: n >= 1 required");
  SweepResult res;
  res.target = "key";
  long long i_hi = i_max.value_or((checked_pow_ll(p, n) - 1) / 2);
  res.params = SweepParams{p, -1, n, -1, i_hi};

  std::size_t count = i_hi < 0 ? 0 : static_cast<std::size_t>(i_hi + 1);
  res.cells.resize(count);
  parallel_for(count, jobs, progress, [&](std::size_t w) {
    long long i = static_cast<long long>(w);
    Rational acc(0);
    bool terms_integral = true;
    for (long long r = 0; r <= (1LL << n) - 1; ++r) {
      long long half = k_r(p, r) / 2;
      Rational term = Rational(binom_int(half, i)) *
                      binom_rat(make_rational(Integer(static_cast<long>(-1 - 2 * i)), Integer(2)), half);
      if (!vp(term, p).at_least(0)) terms_integral = false;
      if (r % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    SweepCell& cell = res.cells[w];
    cell.i = i;
    cell.required = PAdicVal::of(n);
    cell.observed = vp(acc, p);
    cell.pass = terms_integral && cell.observed.at_least(cell.required);
  });
  res.finalize();
  return res;
}

SweepResult verify_p2_corollary(long long n, long long a,
                                std::optional<long long> i_max, int jobs,
                                std::atomic<std::size_t>* progress) {
  if (n < 1 || a < n) throw std::invalid_argument("verify_p2_corollary: need a >= n >= 1");
  SweepResult res;
  res.target = "p2";
  long long i_hi = i_max.value_or((1LL << n) - 1);
  res.params = SweepParams{2, 1, n, a, i_hi};

  std::size_t count = i_hi < 0 ? 0 : static_cast<std::size_t>(i_hi + 1);
  res.cells.resize(count);
  parallel_for(count, jobs, progress, [&](std::size_t w) {
    long long i = static_cast<long long>(w);
    Integer acc(0);
    long long top = (1LL << a) - 1;
    for (long long r = 0; r <= (1LL << n) - 1; ++r) {
      Integer first = binom_int(r, i);
      if (first == 0) continue;  // also guards top - i < 0, since then i > r
      Integer term = first * binom_int(top - i, r);
      if (r % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    SweepCell& cell = res.cells[w];
    cell.i = i;
    cell.required = PAdicVal::of(n);
    cell.observed = vp(acc, 2);
    cell.pass = cell.observed.at_least(cell.required);
  });
  res.finalize();
  return res;
}

SweepResult verify_y_reflection(const DigitContext& ctx, int jobs,
                                std::atomic<std::size_t>* progress) {
  if (ctx.a <= ctx.n)
    throw std::invalid_argument("verify_y_reflection: requires a > n");
  SweepResult res;
  res.target = "lemma-y";
  res.params = SweepParams{ctx.p, ctx.b, ctx.n, ctx.a, -1};
  CongruenceEngine eng(ctx);

  std::vector<Idx> idx;
  for (long long k = 0; k < ctx.n; ++k)
    for (long long r = 0; r <= (1LL << (ctx.n - k - 1)) - 1; ++r) {
      long long s_far = d_reflect(ctx.n, d_reflect(ctx.n - k, r));
      for (long long i = 0; i <= m_of(ctx, s_far); ++i)
        for (long long j = 0; j < ctx.n - k; ++j) idx.push_back({k, r, i, j});
    }

  res.cells.resize(idx.size());
  parallel_for(idx.size(), jobs, progress, [&](std::size_t w) {
    const Idx& q = idx[w];
    long long s_far = d_reflect(ctx.n, d_reflect(ctx.n - q.k, q.r));
    long long s_near = d_reflect(ctx.n, q.r);
    Rational diff = eng.y_val(s_far, q.i, q.j).value - eng.y_val(s_near, q.i, q.j).value;
    SweepCell& cell = res.cells[w];
    cell.k = q.k;
    cell.r = q.r;
    cell.i = q.i;
    cell.j = q.j;
    cell.required = PAdicVal::of(ctx.n - q.j - q.k);
    cell.observed = vp(diff, ctx.p);
    cell.pass = cell.observed.at_least(cell.required);
  });
  res.finalize();
  return res;
}

SweepResult verify_j_descent(const DigitContext& ctx, std::optional<long long> i_max,
                             int jobs,
                             std::atomic<std::size_t>* progress) {
  if (ctx.a <= ctx.n) throw std::invalid_argument("verify_j_descent: requires a > n");
  SweepResult res;
  res.target = "j-descent";
  long long i_hi = i_max.value_or(default_i_hi(ctx));
  res.params = SweepParams{ctx.p, ctx.b, ctx.n, ctx.a, i_hi};
  CongruenceEngine eng(ctx);

  std::vector<Idx> idx;
  for (long long k = 1; k <= ctx.n; ++k)
    for (long long r = 0; r <= (1LL << (ctx.n - k)) - 1; ++r)
      for (long long i = 0; i <= i_hi; ++i)
        for (long long j = 0; j <= ctx.n - k; ++j) idx.push_back({k, r, i, j});

  res.cells.resize(idx.size());
  parallel_for(idx.size(), jobs, progress, [&](std::size_t w) {
    const Idx& q = idx[w];
    Rational lhs = eng.X_val(q.k, q.r, q.i, q.j).value;
    Rational rhs = eng.y_val(d_reflect(ctx.n, q.r), q.i, q.j).value *
                   eng.X_val(q.k, q.r, q.i, q.j + 1).value;
    SweepCell& cell = res.cells[w];
    cell.k = q.k;
    cell.r = q.r;
    cell.i = q.i;
    cell.j = q.j;
    cell.required = PAdicVal::of(q.k);
    cell.observed = vp(lhs - rhs, ctx.p);
    cell.pass = cell.observed.at_least(cell.required);
  });
  res.finalize();
  return res;
}

SweepResult verify_j_descent_base(const DigitContext& ctx,
                                  std::optional<long long> i_max, int jobs,
                                  std::atomic<std::size_t>* progress) {
  if (ctx.a <= ctx.n)
    throw std::invalid_argument("verify_j_descent_base: requires a > n");
  SweepResult res;
  res.target = "j-descent-base";
  long long i_hi = i_max.value_or(default_i_hi(ctx));
  res.params = SweepParams{ctx.p, ctx.b, ctx.n, ctx.a, i_hi};
  CongruenceEngine eng(ctx);

  std::vector<Idx> idx;
  for (long long k = 1; k <= ctx.n; ++k)
    for (long long r = 0; r <= (1LL << (ctx.n - k)) - 1; ++r)
      for (long long i = 0; i <= i_hi; ++i) idx.push_back({k, r, i, ctx.n - k});

  res.cells.resize(idx.size());
  parallel_for(idx.size(), jobs, progress, [&](std::size_t w) {
    const Idx& q = idx[w];
    SweepCell& cell = res.cells[w];
    cell.k = q.k;
    cell.r = q.r;
    cell.i = q.i;
    cell.j = q.j;
    cell.required = PAdicVal::of(q.k);
    cell.observed = eng.X_val(q.k, q.r, q.i, q.j).valuation;
    cell.pass = cell.observed.at_least(cell.required);
  });
  res.finalize();
  return res;
}

SweepResult verify_y_reduction(const DigitContext& ctx, int jobs,
                               std::atomic<std::size_t>* progress) {
  if (ctx.a <= ctx.n) throw std::invalid_argument("verify_y_reduction: requires a > n");
  SweepResult res;
  res.target = "y-reduction";
  res.params = SweepParams{ctx.p, ctx.b, ctx.n, ctx.a, -1};
  CongruenceEngine eng(ctx);
  long long l_hi = ctx.n + 1;
  DeprivedCache dep(ctx.p);
  dep.ensure(checked_pow_ll(ctx.p, l_hi));

  std::vector<Idx> idx;
  for (long long r = 0; r <= (1LL << ctx.n) - 1; ++r)
    for (long long i = 0; i <= m_of(ctx, r); ++i)
      for (long long j = 0; j <= ctx.n; ++j)
        for (long long l = 0; l <= l_hi; ++l) idx.push_back({-1, r, i, j, l});

  res.cells.resize(idx.size());
  parallel_for(idx.size(), jobs, progress, [&](std::size_t w) {
    const Idx& q = idx[w];
    long long p = ctx.p;
    Rational lhs = eng.y_val(q.r, q.i, q.j).value /
                   Rational(pow_integer(p, eng.e_val(q.r, q.i, q.j + 1)));
    long long A = eng.M() - q.i;
    long long B = q.i;
    long long C = eng.m_r(q.r) - q.i;
    long long D = m_of(ctx, d_reflect(ctx.a, q.r)) - q.i;
    Integer den = dep(t_jl(B, q.j, q.l, p)) * dep(t_jl(C, q.j, q.l, p)) *
                  dep(t_jl(D, q.j, q.l, p));
    Rational rhs = make_rational(dep(t_jl(A, q.j, q.l, p)), den);
    if (delta_sign(p, q.l) < 0 && eng.e_val(q.r, q.i, q.j + q.l) % 2 != 0) rhs = -rhs;
    SweepCell& cell = res.cells[w];
    cell.r = q.r;
    cell.i = q.i;
    cell.j = q.j;
    cell.l = q.l;
    cell.required = PAdicVal::of(q.l);
    cell.observed = vp(lhs - rhs, p);
    cell.pass = cell.observed.at_least(cell.required);
  });
  res.finalize();
  return res;
}

}  // namespace supercong
