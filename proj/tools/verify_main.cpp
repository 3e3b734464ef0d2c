#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "supercong/sweep.hpp"

namespace {

using supercong::ConfigError;
using supercong::SweepConfig;

// Config file: a JSON object with the same keys as the long options
// (target, p, b, n, a, i_max, jobs, samples, seed, format, out, table,
// no_timings). Command-line flags override file values.
void load_config_file(const std::string& path, SweepConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ConfigError("config file parse error: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
  auto ints = [&](const char* key, std::vector<long long>& out) {
    if (doc.contains(key)) out = doc[key].get<std::vector<long long>>();
  };
  if (doc.contains("target")) cfg.target = doc["target"].get<std::string>();
  ints("p", cfg.p_list);
  ints("b", cfg.b_list);
  ints("n", cfg.n_list);
  ints("a", cfg.a_list);
  if (doc.contains("i_max")) cfg.i_max = doc["i_max"].get<long long>();
  if (doc.contains("jobs")) cfg.jobs = doc["jobs"].get<int>();
  if (doc.contains("samples")) cfg.samples = doc["samples"].get<long long>();
  if (doc.contains("seed")) {
    cfg.seed = doc["seed"].get<unsigned long long>();
    cfg.seed_set = true;
  }
  if (doc.contains("format")) cfg.format = doc["format"].get<std::string>();
  if (doc.contains("out")) cfg.out_path = doc["out"].get<std::string>();
  if (doc.contains("table")) cfg.table = doc["table"].get<bool>();
  if (doc.contains("no_timings")) cfg.with_timings = !doc["no_timings"].get<bool>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification sweeps for alternating binomial and "
               "hypergeometric congruence families"};
  app.get_formatter()->column_width(28);

  std::string target, config_path, format, out_path;
  std::vector<long long> p_list, b_list, n_list, a_list;
  long long i_max = 0, samples = 0;
  unsigned long long seed = 0;
  int jobs = -1;
  bool table = false, no_timings = false, no_heartbeat = false;

  std::string target_help = "one of:";
  for (const auto& t : supercong::sweep_targets()) target_help += " " + t;
  app.add_option("target", target, target_help);
  app.add_option("--config", config_path, "JSON config file (flags override it)");
  app.add_option("--p", p_list, "primes to sweep")->expected(-1);
  app.add_option("--b", b_list, "digit weights (default: all of 1..p-1)")->expected(-1);
  app.add_option("--n", n_list, "exponents n")->expected(-1);
  app.add_option("--a", a_list, "reflection widths a (default: n..n+2)")->expected(-1);
  app.add_option("--i-max", i_max, "override the i sweep bound");
  app.add_option("--jobs", jobs, "worker threads (default: $SUPERCONG_JOBS or cores)");
  app.add_option("--samples", samples, "granville sample count per prime");
  auto* seed_opt = app.add_option("--seed", seed, "granville sampling seed");
  app.add_option("--format", format, "json|csv|text (default json)");
  app.add_option("--out", out_path, "report path (default: stdout)");
  app.add_flag("--table", table, "emit the full per-cell valuation table");
  app.add_flag("--no-timings", no_timings, "omit elapsed-time fields from the report");
  app.add_flag("--quiet", no_heartbeat, "suppress heartbeat progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  SweepConfig cfg;
  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
    if (!target.empty()) cfg.target = target;
    if (cfg.target.empty()) throw ConfigError("no target given (argument or config file)");
    if (app.count("--p")) cfg.p_list = p_list;
    if (app.count("--b")) cfg.b_list = b_list;
    if (app.count("--n")) cfg.n_list = n_list;
    if (app.count("--a")) cfg.a_list = a_list;
    if (app.count("--i-max")) cfg.i_max = i_max;
    if (jobs != -1) cfg.jobs = jobs;
    if (app.count("--samples")) cfg.samples = samples;
    if (seed_opt->count()) {
      cfg.seed = seed;
      cfg.seed_set = true;
    }
    if (app.count("--format")) cfg.format = format;
    if (app.count("--out")) cfg.out_path = out_path;
    if (table) cfg.table = true;
    if (no_timings) cfg.with_timings = false;
    if (no_heartbeat) cfg.heartbeat = false;

    supercong::Report report = supercong::run_sweeps(cfg);
    std::string rendered = supercong::render_report(report, cfg);
    if (cfg.out_path.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream out(cfg.out_path);
      if (!out) throw ConfigError("cannot write report to " + cfg.out_path);
      out << rendered;
    }
    return supercong::exit_code_for(report);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
