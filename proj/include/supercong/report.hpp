#ifndef SUPERCONG_REPORT_HPP
#define SUPERCONG_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "supercong/congruence.hpp"

namespace supercong {

inline constexpr const char* kToolName = "supercong";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

/// margin = observed - required; -inf when a finite observation misses an
/// exact (infinite) requirement, +inf when an exact zero beats a finite bound.
struct Margin {
  int state = 0;  // -1: -inf, 0: finite, +1: +inf
  long long value = 0;

  static Margin of_cell(const SweepCell& c);
  bool operator<(const Margin& o) const {
    if (state != o.state) return state < o.state;
    return state == 0 && value < o.value;
  }
  std::string str() const;
};

struct CheckRecord {
  SweepResult sweep;
  double elapsed_ms = 0.0;
  std::string polynomial;  // serialized sum, when the target defines one

  Margin min_margin() const;
};

/// Config echo carries only the semantic sweep parameters; execution
/// parameters (jobs, output path, format) never enter the report, so the
/// bytes are identical across parallelism degrees.
struct Report {
  std::string target;
  std::vector<long long> p_list, b_list, n_list, a_list;
  std::optional<long long> i_max;
  long long samples = -1;
  unsigned long long seed = 0;
  bool seed_echo = false;
  bool table = false;

  std::vector<CheckRecord> checks;
  bool overall_pass = true;
  double elapsed_ms = 0.0;
};

std::string report_json(const Report& rep, bool include_cells, bool include_timings);
std::string report_csv(const Report& rep);
std::string report_text(const Report& rep, bool include_cells, bool include_timings);

}  // namespace supercong

#endif
