// Acceptance suite: every release criterion, each printed as one PASS/FAIL
// line. All checks are exact (tolerance zero): integer/rational identities or
// p-adic valuation bounds. Exits nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>
#include <vector>

#include "supercong/gl2.hpp"
#include "supercong/hyp.hpp"
#include "supercong/sweep.hpp"

using namespace supercong;

namespace {

int g_jobs = 2;
bool g_all_pass = true;

void criterion(int number, const char* label, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" [exception: ") + e.what() + "]";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %d (%s): %s (%.1f s)%s\n", number, label,
              ok ? "PASS" : "FAIL", secs, note.c_str());
  std::fflush(stdout);
  if (!ok) g_all_pass = false;
}

Rational frac(long long num, long long den) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

// p in {2,3,5}, all 1 <= b <= p-1, n in {1,2,3}, a in {n, n+1, n+2}
std::vector<DigitContext> congruence_box(bool wide_only) {
  std::vector<DigitContext> out;
  for (long long p : {2, 3, 5})
    for (long long b = 1; b <= p - 1; ++b)
      for (long long n : {1, 2, 3})
        for (long long a = wide_only ? n + 1 : n; a <= n + 2; ++a)
          out.emplace_back(p, b, n, a);
  return out;
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(SUPERCONG_GOLDEN_DIR) + "/" + name);
  if (!in) return "<missing golden " + name + ">";
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Rational key_cell(long long p, long long n, long long i) {
  Rational acc(0);
  for (long long r = 0; r <= (1LL << n) - 1; ++r) {
    long long half = k_r(p, r) / 2;
    Rational term = Rational(binom_int(half, i)) * binom_rat(frac(-1 - 2 * i, 2), half);
    acc = r % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

const std::vector<std::pair<long long, long long>> kMainSet{
    {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}};

}  // namespace

int main() {
  unsigned hw = std::thread::hardware_concurrency();
  g_jobs = hw > 2 ? static_cast<int>(hw) : 2;
  std::printf("acceptance suite (jobs=%d)\n", g_jobs);

  criterion(1, "key congruence sweep", [] {
    for (long long p : {3, 5, 7, 11, 13})
      for (long long n : {1, 2})
        if (!verify_key(p, n, std::nullopt, g_jobs).all_pass) return false;
    return verify_key(3, 3, 13, g_jobs).all_pass;
  });

  criterion(2, "gen2 congruence sweep", [] {
    for (const DigitContext& ctx : congruence_box(false))
      if (!verify_gen2(ctx, std::nullopt, g_jobs).all_pass) return false;
    return true;
  });

  criterion(3, "gen1 and p=2 corollary with self-oracle", [] {
    for (const DigitContext& ctx : congruence_box(false)) {
      SweepResult res = verify_gen1(ctx, std::nullopt, g_jobs);
      if (!res.all_pass) return false;
      std::size_t agree = 0;
      for (const SweepCell& c : res.cells)
        if (c.kind == "agree") {
          if (!c.pass || !c.observed.is_infinite()) return false;
          ++agree;
        }
      if (agree == 0 || agree * 2 != res.cells.size()) return false;
    }
    for (long long n : {1, 2, 3})
      for (long long a = n; a <= n + 2; ++a)
        if (!verify_p2_corollary(n, a, std::nullopt, g_jobs).all_pass) return false;
    return true;
  });

  criterion(4, "alternating polynomial sum congruence with goldens", [] {
    for (auto [p, n] : kMainSet)
      if (!verify_main(p, n)) return false;
    const BasePolys& base = BasePolys::get();
    Poly4 sum31 = main_sum(3, 1);
    if (!(sum31 == base.nu.pow(3) * frac(3, 2) + base.chi.pow(2) * base.nu * frac(3, 2)))
      return false;
    if (sum31.str_multiline() != read_golden("main_sum_3_1.txt")) return false;
    if (main_sum(3, 2).str_multiline() != read_golden("main_sum_3_2.txt")) return false;
    return true;
  });

  criterion(5, "hypergeometric congruence with coefficient bridge", [] {
    for (auto [p, n] : kMainSet) {
      if (!verify_hyp_sweep(p, n, g_jobs).all_pass) return false;
      UniPoly sum = hyp_sum(p, n);
      long long deg = (checked_pow_ll(p, n) - 1) / 2;
      for (long long i = 0; i <= deg; ++i) {
        Rational expect = key_cell(p, n, i);
        if (i % 2 != 0) expect = -expect;
        if (!(sum.coeff(deg - i) == expect)) return false;
      }
      if (!verify_i0(p, n)) return false;
    }
    return hyp_sum(3, 1) == UniPoly({frac(-3, 2), frac(3, 2)});
  });

  criterion(6, "coefficient-family congruence", [] {
    for (auto [p, n] : {std::pair<long long, long long>{3, 1}, {3, 2}, {5, 1}})
      if (!verify_intro_coeff(p, n, std::nullopt, g_jobs).all_pass) return false;
    return true;
  });

  criterion(7, "granville factorial oracle, 10^4 samples per prime", [] {
    long long delta_plus_branch = 0;
    for (long long p : {2, 3, 5, 7}) {
      std::fprintf(stderr, "  granville p=%lld...\n", p);
      SweepResult res = granville_sweep(p, 10000, 20240915ULL, g_jobs);
      if (!res.all_pass) return false;
      if (p == 2)
        for (const SweepCell& c : res.cells)
          if (c.l >= 3) ++delta_plus_branch;
    }
    return delta_plus_branch >= 100;
  });

  criterion(8, "structural identities", [] {
    if (!verify_phi_kl_forms(12)) return false;
    if (!verify_ladder(8)) return false;
    if (!verify_unipotent_action(6)) return false;
    if (!verify_dk_identity(16)) return false;
    for (long long k = 0; k <= 6; ++k)
      if (!verify_pairing_equivariance(k, sample_matrices(20, 100 + k))) return false;
    for (long long k = 0; k <= 4; ++k)
      for (long long m = 0; m <= 3; ++m)
        if (!verify_intertwiner_f(k, m, sample_matrices(20, 200 + 10 * k + m)))
          return false;
    for (const DigitContext& ctx : congruence_box(true)) {
      if (!verify_y_reflection(ctx, g_jobs).all_pass) return false;
      if (!verify_j_descent(ctx, std::nullopt, g_jobs).all_pass) return false;
      if (!verify_j_descent_base(ctx, std::nullopt, g_jobs).all_pass) return false;
    }
    return true;
  });

  criterion(9, "report determinism across parallelism degrees", [] {
    auto render = [](int jobs) {
      SweepConfig cfg;
      cfg.target = "all";
      cfg.jobs = jobs;
      cfg.table = true;
      cfg.with_timings = false;
      cfg.heartbeat = false;
      Report rep = run_sweeps(cfg);
      if (!rep.overall_pass) return std::string();
      return render_report(rep, cfg);
    };
    std::fprintf(stderr, "  verify all, jobs=1...\n");
    std::string serial = render(1);
    std::fprintf(stderr, "  verify all, jobs=8...\n");
    std::string parallel = render(8);
    return !serial.empty() && serial == parallel;
  });

  std::printf("acceptance: %s\n", g_all_pass ? "ALL CRITERIA PASS" : "FAILURES PRESENT");
  return g_all_pass ? 0 : 1;
}
