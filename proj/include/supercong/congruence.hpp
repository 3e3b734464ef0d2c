#ifndef SUPERCONG_CONGRUENCE_HPP
#define SUPERCONG_CONGRUENCE_HPP

#include <atomic>
#include <optional>
#include <string>
#include <vector>

#include "supercong/arith.hpp"
#include "supercong/digits.hpp"

namespace supercong {

/// A computed sweep quantity together with its valuation at ctx.p.
struct CellValue {
  Rational value;
  PAdicVal valuation = PAdicVal::infinity();
};

/// One verified congruence cell. Index fields that do not apply to a target
/// are -1. kind is "" for plain valuation cells and "agree" for cells that
/// assert exact agreement of two independent computation routes (required
/// valuation +infinity).
struct SweepCell {
  long long k = -1, r = -1, i = -1, j = -1, l = -1, arg = -1;
  std::string kind;
  PAdicVal required = PAdicVal::of(0);
  PAdicVal observed = PAdicVal::infinity();
  bool pass = false;
};

struct SweepParams {
  long long p = -1, b = -1, n = -1, a = -1, i_max = -1, samples = -1;
  unsigned long long seed = 0;
  bool has_seed = false;
};

/// Outcome of one congruence sweep; all_pass iff every cell's observed
/// valuation meets its required valuation. Cell order is deterministic
/// (generation order, nested by (k, r, i, j, l)).
struct SweepResult {
  std::string target;
  SweepParams params;
  std::vector<SweepCell> cells;
  bool all_pass = true;

  void finalize();
};

/// Evaluator for the factorial-ratio quantities attached to a DigitContext.
/// The e/x/y/X family requires a > n; the multinomial (j = 0) route is
/// defined for every a >= n and made to agree with X_val at a > n.
/// Thread-safe: all evaluation methods are const and cache reads are
/// internally synchronized.
class CongruenceEngine {
 public:
  explicit CongruenceEngine(const DigitContext& ctx);

  const DigitContext& ctx() const { return ctx_; }
  long long M() const { return M_; }          // m(2^a - 1)
  long long m_r(long long r) const;           // m(r)

  /// t_j(M-i) - t_j(i) - t_j(m(r)-i) - t_j(m(d_a(r))-i); >= 0 for i <= m(r)
  long long e_val(long long r, long long i, long long j) const;

  /// t_j(M-i)! / (t_j(i)! t_j(m(r)-i)! t_j(m(d_a(r))-i)!) for i <= m(r), else 0
  CellValue x_val(long long r, long long i, long long j) const;

  /// x_j / x_{j+1} for i <= m(r), else 0
  CellValue y_val(long long r, long long i, long long j) const;

  /// sum over s in S_k(r) of (-1)^s x_j(s, i)
  CellValue X_val(long long k, long long r, long long i, long long j) const;

  /// (M-i)! / (i! (m(r)-i)! (m(d_a(r))-i)!) when i <= min(m(r), m(d_a(r))),
  /// else 0; equals x_val(r, i, 0) whenever a > n
  Rational multinomial_x0(long long r, long long i) const;

  /// signed multinomial sum over S_k(r); the j = 0 column of X computed
  /// without the factorial-ratio machinery (works at a = n)
  Rational X_multinomial(long long k, long long r, long long i) const;

  /// binom(m(r), i) * binom(M - i, m(r)) as defined, zero conventions included
  Integer gen1_term(long long r, long long i) const;

 private:
  void require_wide() const;  // throws unless a > n
  DigitContext ctx_;
  long long M_;
  FactorialCache fact_;
};

// Sweep verifiers. An absent i_max selects the documented default bound;
// an explicit i_max of -1 produces an empty (vacuously passing) sweep.
// `progress`, when non-null, is incremented once per finished cell batch.

/// X_{j,k}(r,i) = 0 mod p^k over the full (k, r, i, j) box at a > n;
/// at a = n, the k = n layer must vanish identically (reflection pairing).
SweepResult verify_gen2(const DigitContext& ctx,
                        std::optional<long long> i_max = std::nullopt, int jobs = 1,
                        std::atomic<std::size_t>* progress = nullptr);

/// sum_r (-1)^r binom(m(r), i) binom(m(2^a-1)-i, m(r)) = 0 mod p^n, computed
/// from binomial products, with per-i exact agreement against the
/// factorial-ratio route (the engine's self-oracle).
SweepResult verify_gen1(const DigitContext& ctx,
                        std::optional<long long> i_max = std::nullopt, int jobs = 1,
                        std::atomic<std::size_t>* progress = nullptr);

/// sum_r (-1)^r binom(k_r/2, i) binom(-1/2-i, k_r/2) = 0 mod p^n for odd p,
/// evaluated as exact rationals.
SweepResult verify_key(long long p, long long n,
                       std::optional<long long> i_max = std::nullopt, int jobs = 1,
                       std::atomic<std::size_t>* progress = nullptr);

/// sum_r (-1)^r binom(r, i) binom(2^a-1-i, r) = 0 mod 2^n.
SweepResult verify_p2_corollary(long long n, long long a,
                                std::optional<long long> i_max = std::nullopt,
                                int jobs = 1,
                                std::atomic<std::size_t>* progress = nullptr);

/// y_j(d_n(d_{n-k}(r)), i) = y_j(d_n(r), i) mod p^{n-j-k}; requires a > n.
SweepResult verify_y_reflection(const DigitContext& ctx, int jobs = 1,
                                std::atomic<std::size_t>* progress = nullptr);

/// X_{j,k}(r,i) = y_j(d_n(r), i) X_{j+1,k}(r,i) mod p^k; requires a > n.
SweepResult verify_j_descent(const DigitContext& ctx,
                             std::optional<long long> i_max = std::nullopt,
                             int jobs = 1,
                             std::atomic<std::size_t>* progress = nullptr);

/// X_{n-k,k}(r,i) = 0 mod p^k; requires a > n.
SweepResult verify_j_descent_base(const DigitContext& ctx,
                                  std::optional<long long> i_max = std::nullopt,
                                  int jobs = 1,
                                  std::atomic<std::size_t>* progress = nullptr);

/// y_j / p^{e_{j+1}} = delta^{e_{j+l}} * (deprived-factorial ratio of the
/// l-digit windows) mod p^l; requires a > n.
SweepResult verify_y_reduction(const DigitContext& ctx, int jobs = 1,
                               std::atomic<std::size_t>* progress = nullptr);

}  // namespace supercong

#endif
