#ifndef SUPERCONG_HYP_HPP
#define SUPERCONG_HYP_HPP

#include <atomic>
#include <vector>

#include "supercong/congruence.hpp"
#include "supercong/poly.hpp"

namespace supercong {

/// Degree-m polynomial with t^i coefficient binom(m, i) binom(m - 1/2, i);
/// coefficients lie in Z[1/2].
struct HypPoly {
  long long m;
  UniPoly poly;
};

HypPoly F_m(long long m);

/// The expansion of F_m at 1 - t:
///   sum_i (-1)^i binom(m, i) binom(-1/2-i, m) t^{m-i};
/// equals compose_affine(F_m(m).poly, 1, -1) exactly.
UniPoly F_m_shifted(long long m);

/// sum_i binom(m,i) binom(x,i) t^i == sum_i binom(m,i) binom(x+i,m) (t-1)^{m-i}
/// for each sample x.
bool verify_gould(long long m, const std::vector<Rational>& x_samples);

/// sum_r (-1)^r t^{(p^n-1-k_r)/2} F_{k_r/2}(1-t); p odd.
UniPoly hyp_sum(long long p, long long n);

/// Every coefficient of hyp_sum has vp >= n, the pre-substitution route
/// sum_r (-1)^r (1-t)^{(p^n-1-k_r)/2} F_{k_r/2}(t) passes the same bound,
/// and the two agree under t -> 1-t.
bool verify_hyp(long long p, long long n);

/// vp( sum_r (-1)^r binom(-1/2, k_r/2) ) >= n
bool verify_i0(long long p, long long n);

/// Cell view of verify_hyp: one valuation cell per coefficient index i
/// (coefficient of t^{(p^n-1)/2-i}) for each route, plus "agree" cells
/// asserting exact equality of the two routes coefficientwise.
SweepResult verify_hyp_sweep(long long p, long long n, int jobs = 1,
                             std::atomic<std::size_t>* progress = nullptr);

}  // namespace supercong

#endif
