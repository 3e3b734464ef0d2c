#ifndef SUPERCONG_GL2_HPP
#define SUPERCONG_GL2_HPP

#include <atomic>
#include <optional>
#include <vector>

#include "supercong/congruence.hpp"
#include "supercong/poly.hpp"

namespace supercong {

/// The quadrics and invariants underlying the whole construction:
///   phi = z11^2 + z21^2          nu  = z11 z22 - z12 z21
///   chi = z11 z12 + z21 z22      second_quadric = z12^2 + z22^2
///   xi  = phi * second_quadric ( = nu^2 + chi^2 )    eta = chi^2
struct BasePolys {
  Poly4 phi, nu, chi, second_quadric, xi, eta;
  static const BasePolys& get();
};

// Lowering/raising operators and their commutator:
//   D = z12 d/dz11 + z22 d/dz21,  E = z11 d/dz12 + z21 d/dz22,  H = ED - DE
Poly4 op_D(const Poly4& f);
Poly4 op_E(const Poly4& f);
Poly4 op_H(const Poly4& f);

/// phi_{k,l} from the closed form
///   sum_{i,j} binom(2k-2j, l-i) binom(2j, i) binom(k, j)
///             z11^{2k-2j-l+i} z12^{l-i} z21^{2j-i} z22^i;
/// integral coefficients, zero when l >= 2k+1.
Poly4 phi_kl(long long k, long long l);

/// (1/l!) D^l phi^k — must agree with phi_kl exactly.
Poly4 phi_kl_derivative_form(long long k, long long l);

bool verify_phi_kl_forms(long long k_max);

/// D phi_{k,l} = (l+1) phi_{k,l+1}; E phi_{k,l} = (2k-l+1) phi_{k,l-1}
/// (phi_{k,-1} = 0); H phi_{k,l} = (2k-2l) phi_{k,l}, for all k <= k_max.
bool verify_ladder(long long k_max);

/// [[1,0],[1,1]] phi_{k,l} = sum_i binom(l+i, i) phi_{k,l+i} and
/// [[1,1],[0,1]] phi_{k,l} = sum_i binom(2k-l+i, i) phi_{k,l-i}.
bool verify_unipotent_action(long long k_max);

/// Basis [phi_{k,l} nu^m : 0 <= l <= 2k]; rank 2k+1, integer coefficients.
struct LatticeBasis {
  long long k, m;
  std::vector<Poly4> basis;
  static LatticeBasis make(long long k, long long m);
};

/// The pairing on degree-k forms in (z1, z2) determined by
/// (binom(k,i) z1^{k-i} z2^i, z1^{k-j} z2^j) = (-1)^i [i+j=k],
/// extended bilinearly. Both arguments must be homogeneous of degree k.
Rational pairing_Lk(const Poly2& f, const Poly2& g, long long k);

/// (alpha f, alpha g) = (det alpha)^k (f, g) over basis pairs and samples.
bool verify_pairing_equivariance(long long k, const std::vector<Mat2>& samples);

/// With f(phi_{k,l} nu^m) = binom(2k,l) z1^{2k-l} z2^l:
/// f(alpha x) = (det alpha)^m alpha f(x) for sampled alpha.
bool verify_intertwiner_f(long long k, long long m, const std::vector<Mat2>& samples);

/// Deterministic sample of invertible integer matrices: diagonals, the two
/// unipotents, and random small-entry products.
std::vector<Mat2> sample_matrices(std::size_t count, unsigned long long seed);

/// (-1)^{k_r/2} 2^{-k_r} phi_{k_r,k_r} nu^{p^n-k_r}; p odd. Coefficients in
/// Z[1/2]; homogeneous of total degree 2 p^n.
Poly4 psi_r(long long p, long long n, long long r);

/// sum_{r=0}^{2^n-1} (-1)^r psi_r
Poly4 main_sum(long long p, long long n);

/// main_sum(p, n) lies in p^n Z[1/2][z11, z12, z21, z22]
bool verify_main(long long p, long long n);

/// (1/k!) D^k phi^k = 2^k sum_i binom(k/2, i) binom((k-1)/2, i) xi^i eta^{k/2-i}
/// for even k <= k_max.
bool verify_dk_identity(long long k_max);

/// The coefficient-level alternating sum
///   sum_r sum_l (-1)^{r+k_r/2+l} 2^{-k_r} binom(k_r, k_r/2+j)
///     binom(k_r-2j, k_r-i+l) binom(k_r+2j, i-l) binom(p^n-k_r, l).
Rational intro_coefficient_sum(long long p, long long n, long long i, long long j);

/// intro_coefficient_sum = 0 mod p^n over the full nonvanishing (i, j) box.
SweepResult verify_intro_coeff(long long p, long long n,
                               std::optional<long long> i_max = std::nullopt,
                               int jobs = 1,
                               std::atomic<std::size_t>* progress = nullptr);

/// min_vp cell view of verify_main for reporting.
SweepResult verify_main_sweep(long long p, long long n, int jobs = 1,
                              std::atomic<std::size_t>* progress = nullptr);

}  // namespace supercong

#endif
