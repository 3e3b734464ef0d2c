#include "supercong/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <thread>

#include "supercong/gl2.hpp"
#include "supercong/hyp.hpp"
#include "supercong/parallel.hpp"

namespace supercong {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Prints "<label>: N cells done" to stderr every 2 seconds while alive.
class Heartbeat {
 public:
  Heartbeat(std::string label, const std::atomic<std::size_t>* progress, bool enabled)
      : label_(std::move(label)), progress_(progress) {
    if (!enabled) return;
    thread_ = std::thread([this] {
      std::unique_lock lock(mutex_);
      auto start = Clock::now();
      while (!done_) {
        cv_.wait_for(lock, std::chrono::seconds(2));
        if (done_) break;
        std::cerr << "[verify] " << label_ << ": "
                  << progress_->load(std::memory_order_relaxed) << " cells done ("
                  << static_cast<long long>(ms_since(start)) << " ms)\n";
      }
    });
  }
  ~Heartbeat() {
    if (!thread_.joinable()) return;
    {
      std::scoped_lock lock(mutex_);
      done_ = true;
    }
    cv_.notify_all();
    thread_.join();
  }

 private:
  std::string label_;
  const std::atomic<std::size_t>* progress_;
  std::mutex mutex_;
  std::condition_variable cv_;
  bool done_ = false;
  std::thread thread_;
};

std::string check_label(const std::string& target, const SweepParams& p) {
  std::string s = target;
  if (p.p >= 0) s += " p=" + std::to_string(p.p);
  if (p.b >= 0) s += " b=" + std::to_string(p.b);
  if (p.n >= 0) s += " n=" + std::to_string(p.n);
  if (p.a >= 0) s += " a=" + std::to_string(p.a);
  return s;
}

}  // namespace

const std::vector<std::string>& sweep_targets() {
  static const std::vector<std::string> targets{
      "key", "gen1", "gen2", "hyp", "main", "granville",
      "lemma-y", "intro-coeff", "p2", "all"};
  return targets;
}

SweepResult granville_sweep(long long p, long long samples, unsigned long long seed,
                            int jobs, std::atomic<std::size_t>* progress) {
  if (!is_prime(p)) throw ConfigError("granville: p must be prime");
  if (samples < 0) throw ConfigError("granville: negative sample count");
  SweepResult res;
  res.target = "granville";
  res.params = SweepParams{p, -1, -1, -1, -1, samples, seed, true};

  // Sample list is drawn up front from the seed so the report is identical
  // for every parallelism degree. One draw in eight is uniform over the full
  // [0, 10^6]; the rest pick a decade first so every magnitude is exercised.
  // Integer-only arithmetic keeps the draws platform-independent.
  struct Sample {
    long long n, j, l;
  };
  std::vector<Sample> draws;
  draws.reserve(static_cast<std::size_t>(samples));
  std::mt19937_64 rng(seed + static_cast<unsigned long long>(p));
  for (long long s = 0; s < samples; ++s) {
    long long n;
    if (rng() % 8 == 0) {
      n = static_cast<long long>(rng() % (kGranvilleMaxN + 1));
    } else {
      long long decade = checked_pow_ll(10, static_cast<long long>(rng() % 7));
      n = static_cast<long long>(rng() % static_cast<unsigned long long>(decade * 10));
      if (n > kGranvilleMaxN) n = kGranvilleMaxN;
    }
    draws.push_back({n, static_cast<long long>(rng() % (kGranvilleMaxJ + 1)),
                     static_cast<long long>(rng() % (kGranvilleMaxL + 1))});
  }

  res.cells.resize(draws.size());
  parallel_for(draws.size(), jobs, progress, [&](std::size_t w) {
    const Sample& s = draws[w];
    SweepCell& cell = res.cells[w];
    cell.arg = s.n;
    cell.j = s.j;
    cell.l = s.l;
    cell.required = PAdicVal::infinity();  // exact factorial identity
    bool ok = verify_granville(s.n, s.j, s.l, p);
    cell.observed = ok ? PAdicVal::infinity() : PAdicVal::of(0);
    cell.pass = ok;
  });
  res.finalize();
  return res;
}

namespace {

struct CheckPlan {
  std::string target;
  // key/hyp/main/intro-coeff use (p, n); gen1/gen2/lemma-y use ctx;
  // p2 uses (n, a); granville uses (p, samples).
  long long p = -1, b = -1, n = -1, a = -1;
  std::optional<long long> i_max;
  long long samples = -1;
};

void require_odd(long long p, const std::string& target) {
  if (p == 2) throw ConfigError(target + ": p must be odd");
}

void require_prime_list(const std::vector<long long>& ps, const std::string& target) {
  for (long long p : ps)
    if (!is_prime(p)) throw ConfigError(target + ": " + std::to_string(p) + " is not prime");
}

std::vector<long long> default_or(const std::vector<long long>& given,
                                  std::vector<long long> fallback) {
  return given.empty() ? std::move(fallback) : given;
}

// expand (p, b, n, a) boxes, enforcing the DigitContext invariants
std::vector<CheckPlan> expand_contexts(const std::string& target, const SweepConfig& cfg,
                                       bool need_wide_a) {
  std::vector<CheckPlan> out;
  std::vector<long long> ps = default_or(cfg.p_list, {2, 3, 5, 7});
  require_prime_list(ps, target);
  std::vector<long long> ns = default_or(cfg.n_list, {1, 2});
  for (long long p : ps) {
    std::vector<long long> bs = cfg.b_list;
    if (bs.empty())
      for (long long b = 1; b <= p - 1; ++b) bs.push_back(b);
    for (long long b : bs) {
      if (b < 1 || b > p - 1)
        throw ConfigError(target + ": b = " + std::to_string(b) +
                          " outside [1, p-1] for p = " + std::to_string(p));
      for (long long n : ns) {
        if (n < 1) throw ConfigError(target + ": n must be >= 1");
        std::vector<long long> as = default_or(cfg.a_list, {n, n + 1, n + 2});
        for (long long a : as) {
          if (a < n)
            throw ConfigError(target + ": a = " + std::to_string(a) +
                              " violates a >= n for n = " + std::to_string(n));
          if (need_wide_a && a == n) continue;  // quantities undefined at a = n
          out.push_back({target, p, b, n, a, cfg.i_max, -1});
        }
      }
    }
  }
  if (out.empty()) throw ConfigError(target + ": empty parameter box");
  return out;
}

std::vector<CheckPlan> expand_pn(const std::string& target, const SweepConfig& cfg,
                                 std::vector<long long> default_p) {
  if (!cfg.b_list.empty() || !cfg.a_list.empty())
    throw ConfigError(target + ": --b/--a do not apply to this target");
  std::vector<CheckPlan> out;
  std::vector<long long> ps = default_or(cfg.p_list, std::move(default_p));
  require_prime_list(ps, target);
  std::vector<long long> ns = default_or(cfg.n_list, {1, 2});
  for (long long p : ps) {
    require_odd(p, target);
    for (long long n : ns) {
      if (n < 1) throw ConfigError(target + ": n must be >= 1");
      out.push_back({target, p, -1, n, -1, cfg.i_max, -1});
    }
  }
  return out;
}

std::vector<CheckPlan> plan_target(const std::string& target, const SweepConfig& cfg) {
  std::vector<CheckPlan> plans;
  if (target == "key" || target == "hyp" || target == "main" ||
      target == "intro-coeff") {
    plans = expand_pn(target, cfg, {3, 5, 7});
  } else if (target == "gen1" || target == "gen2") {
    plans = expand_contexts(target, cfg, /*need_wide_a=*/false);
  } else if (target == "lemma-y") {
    plans = expand_contexts(target, cfg, /*need_wide_a=*/true);
  } else if (target == "p2") {
    if (!cfg.p_list.empty() && cfg.p_list != std::vector<long long>{2})
      throw ConfigError("p2: the prime is fixed at 2");
    if (!cfg.b_list.empty() && cfg.b_list != std::vector<long long>{1})
      throw ConfigError("p2: the weight is fixed at b = 1");
    std::vector<long long> ns = default_or(cfg.n_list, {1, 2, 3});
    for (long long n : ns) {
      if (n < 1) throw ConfigError("p2: n must be >= 1");
      std::vector<long long> as = default_or(cfg.a_list, {n, n + 1, n + 2});
      for (long long a : as) {
        if (a < n) throw ConfigError("p2: a >= n required");
        plans.push_back({"p2", -1, -1, n, a, cfg.i_max, -1LL});
      }
    }
  } else if (target == "granville") {
    if (!cfg.b_list.empty() || !cfg.n_list.empty() || !cfg.a_list.empty())
      throw ConfigError("granville: only --p, --samples and --seed apply");
    std::vector<long long> ps = default_or(cfg.p_list, {2, 3, 5, 7});
    require_prime_list(ps, "granville");
    long long samples = cfg.samples >= 0 ? cfg.samples : kGranvilleDefaultSamples;
    for (long long p : ps) plans.push_back({"granville", p, -1, -1, -1, -1, samples});
  } else {
    throw ConfigError("unknown target: " + target);
  }
  return plans;
}

// The fixed battery behind `verify all`, sized to finish within a few
// minutes at jobs = 1.
std::vector<CheckPlan> plan_all(const SweepConfig& cfg) {
  if (!cfg.p_list.empty() || !cfg.b_list.empty() || !cfg.n_list.empty() ||
      !cfg.a_list.empty() || cfg.i_max.has_value())
    throw ConfigError("all: parameter overrides are not accepted (samples/seed/jobs only)");
  std::vector<CheckPlan> plans;
  auto add_pn = [&](const std::string& target) {
    for (long long p : {3LL, 5LL, 7LL})
      for (long long n : {1LL, 2LL}) plans.push_back({target, p, -1, n, -1, {}, -1});
    plans.push_back({target, 3, -1, 3, -1, {}, -1});
  };
  add_pn("key");
  auto add_ctx = [&](const std::string& target, bool wide_only) {
    auto add_box = [&](long long p, long long n) {
      for (long long b = 1; b <= p - 1; ++b)
        for (long long a = wide_only ? n + 1 : n; a <= n + 2; ++a)
          plans.push_back({target, p, b, n, a, {}, -1});
    };
    for (long long p : {2LL, 3LL, 5LL, 7LL})
      for (long long n : {1LL, 2LL}) add_box(p, n);
    add_box(3, 3);
  };
  add_ctx("gen1", false);
  add_ctx("gen2", false);
  for (long long n : {1LL, 2LL, 3LL})
    for (long long a = n; a <= n + 2; ++a) plans.push_back({"p2", -1, -1, n, a, {}, -1});
  add_ctx("lemma-y", true);
  add_pn("main");
  add_pn("hyp");
  for (auto [p, n] : {std::pair<long long, long long>{3, 1}, {3, 2}, {5, 1}, {7, 1}})
    plans.push_back({"intro-coeff", p, -1, n, -1, {}, -1});
  long long samples = cfg.samples >= 0 ? cfg.samples : kGranvilleDefaultSamples;
  for (long long p : {2LL, 3LL, 5LL, 7LL})
    plans.push_back({"granville", p, -1, -1, -1, {}, samples});
  return plans;
}

CheckRecord run_plan(const CheckPlan& plan, const SweepConfig& cfg, int jobs) {
  CheckRecord rec;
  std::atomic<std::size_t> progress{0};
  SweepParams label_params{plan.p, plan.b, plan.n, plan.a, plan.i_max.value_or(-1),
                           plan.samples};
  Heartbeat beat(check_label(plan.target, label_params), &progress, cfg.heartbeat);
  auto start = Clock::now();
  if (plan.target == "key") {
    rec.sweep = verify_key(plan.p, plan.n, plan.i_max, jobs, &progress);
  } else if (plan.target == "gen1") {
    rec.sweep = verify_gen1(DigitContext(plan.p, plan.b, plan.n, plan.a), plan.i_max,
                            jobs, &progress);
  } else if (plan.target == "gen2") {
    rec.sweep = verify_gen2(DigitContext(plan.p, plan.b, plan.n, plan.a), plan.i_max,
                            jobs, &progress);
  } else if (plan.target == "lemma-y") {
    rec.sweep =
        verify_y_reflection(DigitContext(plan.p, plan.b, plan.n, plan.a), jobs, &progress);
  } else if (plan.target == "p2") {
    rec.sweep = verify_p2_corollary(plan.n, plan.a, plan.i_max, jobs, &progress);
  } else if (plan.target == "main") {
    rec.sweep = verify_main_sweep(plan.p, plan.n, jobs, &progress);
    rec.polynomial = main_sum(plan.p, plan.n).str();
  } else if (plan.target == "hyp") {
    rec.sweep = verify_hyp_sweep(plan.p, plan.n, jobs, &progress);
    rec.polynomial = hyp_sum(plan.p, plan.n).str();
  } else if (plan.target == "intro-coeff") {
    rec.sweep = verify_intro_coeff(plan.p, plan.n, plan.i_max, jobs, &progress);
  } else if (plan.target == "granville") {
    rec.sweep = granville_sweep(plan.p, plan.samples, cfg.seed, jobs, &progress);
  } else {
    throw ConfigError("unknown target: " + plan.target);
  }
  rec.elapsed_ms = ms_since(start);
  return rec;
}

int resolve_jobs(const SweepConfig& cfg) {
  if (cfg.jobs > 0) return cfg.jobs;
  if (const char* env = std::getenv("SUPERCONG_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

Report run_sweeps(const SweepConfig& cfg) {
  if (std::find(sweep_targets().begin(), sweep_targets().end(), cfg.target) ==
      sweep_targets().end())
    throw ConfigError("unknown target: " + cfg.target);
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
    throw ConfigError("unknown format: " + cfg.format);
  if (cfg.samples >= 0 && cfg.target != "granville" && cfg.target != "all")
    throw ConfigError("--samples only applies to the granville target");

  std::vector<CheckPlan> plans =
      cfg.target == "all" ? plan_all(cfg) : plan_target(cfg.target, cfg);

  Report rep;
  rep.target = cfg.target;
  rep.p_list = cfg.p_list;
  rep.b_list = cfg.b_list;
  rep.n_list = cfg.n_list;
  rep.a_list = cfg.a_list;
  rep.i_max = cfg.i_max;
  bool wants_granville = cfg.target == "granville" || cfg.target == "all";
  rep.samples = wants_granville
                    ? (cfg.samples >= 0 ? cfg.samples : kGranvilleDefaultSamples)
                    : -1;
  rep.seed = cfg.seed;
  rep.seed_echo = wants_granville;
  rep.table = cfg.table;

  int jobs = resolve_jobs(cfg);
  auto start = Clock::now();
  for (const CheckPlan& plan : plans) {
    rep.checks.push_back(run_plan(plan, cfg, jobs));
    if (!rep.checks.back().sweep.all_pass) rep.overall_pass = false;
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

int exit_code_for(const Report& report) { return report.overall_pass ? 0 : 1; }

std::string render_report(const Report& report, const SweepConfig& cfg) {
  if (cfg.format == "json") return report_json(report, cfg.table, cfg.with_timings);
  if (cfg.format == "csv") return report_csv(report);
  return report_text(report, cfg.table, cfg.with_timings);
}

}  // namespace supercong
