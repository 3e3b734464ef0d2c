#ifndef SUPERCONG_SWEEP_HPP
#define SUPERCONG_SWEEP_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercong/report.hpp"

namespace supercong {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sweep request. Empty lists select the documented defaults:
/// p: per-target default primes; b: all of 1..p-1; n: {1, 2};
/// a: {n, n+1, n+2} per chosen n. jobs = 0 picks SUPERCONG_JOBS or the
/// hardware concurrency.
struct SweepConfig {
  std::string target;
  std::vector<long long> p_list;
  std::vector<long long> b_list;
  std::vector<long long> n_list;
  std::vector<long long> a_list;
  std::optional<long long> i_max;
  long long samples = -1;
  unsigned long long seed = 20240915ULL;
  bool seed_set = false;
  int jobs = 0;
  std::string format = "json";
  std::string out_path;
  bool table = false;
  bool with_timings = true;
  bool heartbeat = true;
};

inline constexpr long long kGranvilleMaxN = 1000000;
inline constexpr long long kGranvilleMaxJ = 6;
inline constexpr long long kGranvilleMaxL = 6;
inline constexpr long long kGranvilleDefaultSamples = 400;

const std::vector<std::string>& sweep_targets();  // includes "all"

/// Deterministic pseudo-random Granville oracle sweep: `samples` triples
/// (n <= 10^6 mixed uniform/log-uniform, j <= 6, l <= 6) checked exactly.
SweepResult granville_sweep(long long p, long long samples, unsigned long long seed,
                            int jobs, std::atomic<std::size_t>* progress = nullptr);

/// Validates the config and runs every check it selects.
Report run_sweeps(const SweepConfig& config);

/// 0 on overall pass, 1 otherwise (2 is reserved for config errors).
int exit_code_for(const Report& report);

std::string render_report(const Report& report, const SweepConfig& config);

}  // namespace supercong

#endif
