#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "supercong/sweep.hpp"

using namespace supercong;

namespace {

SweepConfig quiet_config(std::string target) {
  SweepConfig cfg;
  cfg.target = std::move(target);
  cfg.heartbeat = false;
  cfg.with_timings = false;
  return cfg;
}

}  // namespace

TEST_CASE("run a single key sweep") {
  SweepConfig cfg = quiet_config("key");
  cfg.p_list = {3};
  cfg.n_list = {2};
  Report rep = run_sweeps(cfg);
  CHECK(rep.overall_pass);
  CHECK(exit_code_for(rep) == 0);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].sweep.cells.size() == 5);  // i <= (9-1)/2
}

TEST_CASE("config validation") {
  {
    SweepConfig cfg = quiet_config("nonsense");
    CHECK_THROWS_AS(run_sweeps(cfg), ConfigError);
  }
  {
    SweepConfig cfg = quiet_config("gen2");
    cfg.p_list = {4};
    CHECK_THROWS_AS(run_sweeps(cfg), ConfigError);
  }
  {
    SweepConfig cfg = quiet_config("key");
    cfg.p_list = {2};
    CHECK_THROWS_AS(run_sweeps(cfg), ConfigError);
  }
  {
    SweepConfig cfg = quiet_config("gen2");
    cfg.p_list = {3};
    cfg.b_list = {5};
    CHECK_THROWS_AS(run_sweeps(cfg), ConfigError);
  }
  {
    SweepConfig cfg = quiet_config("gen1");
    cfg.p_list = {3};
    cfg.n_list = {2};
    cfg.a_list = {1};  // a < n
    CHECK_THROWS_AS(run_sweeps(cfg), ConfigError);
  }
  {
    SweepConfig cfg = quiet_config("lemma-y");
    cfg.p_list = {3};
    cfg.n_list = {2};
    cfg.a_list = {2};  // needs a > n
    CHECK_THROWS_AS(run_sweeps(cfg), ConfigError);
  }
  {
    SweepConfig cfg = quiet_config("key");
    cfg.format = "yaml";
    CHECK_THROWS_AS(run_sweeps(cfg), ConfigError);
  }
  {
    SweepConfig cfg = quiet_config("key");
    cfg.p_list = {3};
    cfg.samples = 5;  // samples only applies to granville
    CHECK_THROWS_AS(run_sweeps(cfg), ConfigError);
  }
}

TEST_CASE("gen2 box expansion covers b and a defaults") {
  SweepConfig cfg = quiet_config("gen2");
  cfg.p_list = {3};
  cfg.n_list = {1};
  Report rep = run_sweeps(cfg);
  // b in {1, 2} x a in {1, 2, 3}
  CHECK(rep.checks.size() == 6);
  CHECK(rep.overall_pass);
}

TEST_CASE("granville sweep determinism and pass") {
  SweepResult one = granville_sweep(3, 60, 999, 1);
  SweepResult eight = granville_sweep(3, 60, 999, 8);
  CHECK(one.all_pass);
  REQUIRE(one.cells.size() == eight.cells.size());
  for (std::size_t w = 0; w < one.cells.size(); ++w) {
    CHECK(one.cells[w].arg == eight.cells[w].arg);
    CHECK(one.cells[w].j == eight.cells[w].j);
    CHECK(one.cells[w].l == eight.cells[w].l);
    CHECK(one.cells[w].pass == eight.cells[w].pass);
  }
  // a different seed draws different samples
  SweepResult other = granville_sweep(3, 60, 1000, 1);
  bool same = true;
  for (std::size_t w = 0; w < one.cells.size(); ++w)
    if (one.cells[w].arg != other.cells[w].arg) same = false;
  CHECK_FALSE(same);
}

TEST_CASE("reports are byte-identical across parallelism degrees") {
  auto render = [](int jobs) {
    SweepConfig cfg = quiet_config("gen2");
    cfg.p_list = {3};
    cfg.b_list = {1, 2};
    cfg.n_list = {2};
    cfg.table = true;
    cfg.jobs = jobs;
    Report rep = run_sweeps(cfg);
    return render_report(rep, cfg);
  };
  CHECK(render(1) == render(8));
  auto render_granville = [](int jobs) {
    SweepConfig cfg = quiet_config("granville");
    cfg.p_list = {2, 5};
    cfg.samples = 40;
    cfg.table = true;
    cfg.jobs = jobs;
    cfg.format = "csv";
    Report rep = run_sweeps(cfg);
    return render_report(rep, cfg);
  };
  CHECK(render_granville(1) == render_granville(6));
}

TEST_CASE("json report shape") {
  SweepConfig cfg = quiet_config("main");
  cfg.p_list = {3};
  cfg.n_list = {1};
  Report rep = run_sweeps(cfg);
  std::string text = render_report(rep, cfg);
  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["tool"] == "supercong");
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["overall_pass"] == true);
  CHECK(doc["config"]["target"] == "main");
  REQUIRE(doc["checks"].is_array());
  CHECK(doc["checks"][0]["target"] == "main");
  CHECK(doc["checks"][0]["params"]["p"] == 3);
  CHECK(doc["checks"][0]["pass"] == true);
  // the serialized alternating sum rides along for the main target
  std::string poly = doc["checks"][0]["polynomial"].get<std::string>();
  CHECK(poly.find("3/2 * ") != std::string::npos);
  CHECK(text.find("elapsed_ms") == std::string::npos);  // timings stripped
}

TEST_CASE("csv and text formats") {
  SweepConfig cfg = quiet_config("key");
  cfg.p_list = {3};
  cfg.n_list = {1};
  Report rep = run_sweeps(cfg);
  cfg.format = "csv";
  std::string csv = render_report(rep, cfg);
  CHECK(csv.rfind("target,p,b,n,a,kind,k,r,i,j,l,arg,required,observed,margin,pass\n", 0) == 0);
  CHECK(csv.find("key,3,,1,") != std::string::npos);
  cfg.format = "text";
  std::string text = render_report(rep, cfg);
  CHECK(text.find("[PASS] key p=3 n=1") != std::string::npos);
  CHECK(text.find("OVERALL PASS") != std::string::npos);
}

TEST_CASE("table mode exposes per-cell margins") {
  SweepConfig cfg = quiet_config("key");
  cfg.p_list = {3};
  cfg.n_list = {1};
  cfg.table = true;
  Report rep = run_sweeps(cfg);
  nlohmann::json doc = nlohmann::json::parse(render_report(rep, cfg));
  auto cells = doc["checks"][0]["cell_table"];
  REQUIRE(cells.is_array());
  CHECK(cells.size() == 2);
  CHECK(cells[0]["i"] == 0);
  CHECK(cells[0]["required"] == 1);
  CHECK(cells[0]["observed"] == 1);
  CHECK(cells[0]["margin"] == 0);
  CHECK(cells[1]["observed"] == "inf");  // vanishing sum at i = 1? (exact zero)
}

TEST_CASE("explicit i_max of -1 gives an empty, passing sweep") {
  SweepConfig cfg = quiet_config("key");
  cfg.p_list = {3};
  cfg.n_list = {1};
  cfg.i_max = -1;
  Report rep = run_sweeps(cfg);
  CHECK(rep.overall_pass);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].sweep.cells.empty());
  cfg.format = "text";
  CHECK(render_report(rep, cfg).find("cells=0") != std::string::npos);
}
