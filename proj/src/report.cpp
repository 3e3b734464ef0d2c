#include "supercong/report.hpp"

#include <sstream>

#include "json.hpp"

namespace supercong {

using ordered_json = nlohmann::ordered_json;

Margin Margin::of_cell(const SweepCell& c) {
  if (c.required.is_infinite())
    return c.observed.is_infinite() ? Margin{0, 0} : Margin{-1, 0};
  if (c.observed.is_infinite()) return Margin{+1, 0};
  return Margin{0, c.observed.value() - c.required.value()};
}

std::string Margin::str() const {
  if (state < 0) return "-inf";
  if (state > 0) return "inf";
  return std::to_string(value);
}

Margin CheckRecord::min_margin() const {
  Margin best{+1, 0};
  for (const SweepCell& c : sweep.cells) {
    Margin m = Margin::of_cell(c);
    if (m < best) best = m;
  }
  return best;
}

namespace {

ordered_json val_json(const PAdicVal& v) {
  if (v.is_infinite()) return ordered_json("inf");
  return ordered_json(v.value());
}

ordered_json margin_json(const Margin& m) {
  if (m.state != 0) return ordered_json(m.state < 0 ? "-inf" : "inf");
  return ordered_json(m.value);
}

ordered_json params_json(const SweepParams& p) {
  ordered_json out = ordered_json::object();
  if (p.p >= 0) out["p"] = p.p;
  if (p.b >= 0) out["b"] = p.b;
  if (p.n >= 0) out["n"] = p.n;
  if (p.a >= 0) out["a"] = p.a;
  if (p.i_max >= 0) out["i_max"] = p.i_max;
  if (p.samples >= 0) out["samples"] = p.samples;
  if (p.has_seed) out["seed"] = p.seed;
  return out;
}

ordered_json cell_json(const SweepCell& c) {
  ordered_json out = ordered_json::object();
  if (c.k >= 0) out["k"] = c.k;
  if (c.r >= 0) out["r"] = c.r;
  if (c.i >= 0) out["i"] = c.i;
  if (c.j >= 0) out["j"] = c.j;
  if (c.l >= 0) out["l"] = c.l;
  if (c.arg >= 0) out["arg"] = c.arg;
  if (!c.kind.empty()) out["kind"] = c.kind;
  out["required"] = val_json(c.required);
  out["observed"] = val_json(c.observed);
  out["margin"] = margin_json(Margin::of_cell(c));
  out["pass"] = c.pass;
  return out;
}

ordered_json config_json(const Report& rep) {
  ordered_json cfg = ordered_json::object();
  cfg["target"] = rep.target;
  if (!rep.p_list.empty()) cfg["p"] = rep.p_list;
  cfg["b"] = rep.b_list.empty() ? ordered_json("all") : ordered_json(rep.b_list);
  if (!rep.n_list.empty()) cfg["n"] = rep.n_list;
  cfg["a"] = rep.a_list.empty() ? ordered_json("n..n+2") : ordered_json(rep.a_list);
  if (rep.i_max.has_value()) cfg["i_max"] = *rep.i_max;
  if (rep.samples >= 0) cfg["samples"] = rep.samples;
  if (rep.seed_echo) cfg["seed"] = rep.seed;
  cfg["table"] = rep.table;
  return cfg;
}

}  // namespace

std::string report_json(const Report& rep, bool include_cells, bool include_timings) {
  ordered_json out;
  out["tool"] = kToolName;
  out["version"] = kToolVersion;
  out["schema_version"] = kSchemaVersion;
  out["config"] = config_json(rep);
  ordered_json checks = ordered_json::array();
  for (const CheckRecord& rec : rep.checks) {
    ordered_json c;
    c["target"] = rec.sweep.target;
    c["params"] = params_json(rec.sweep.params);
    c["cells"] = rec.sweep.cells.size();
    c["min_margin"] = margin_json(rec.min_margin());
    c["pass"] = rec.sweep.all_pass;
    if (!rec.polynomial.empty()) c["polynomial"] = rec.polynomial;
    if (include_timings) c["elapsed_ms"] = rec.elapsed_ms;
    if (include_cells) {
      ordered_json cells = ordered_json::array();
      for (const SweepCell& cell : rec.sweep.cells) cells.push_back(cell_json(cell));
      c["cell_table"] = cells;
    }
    checks.push_back(std::move(c));
  }
  out["checks"] = std::move(checks);
  out["overall_pass"] = rep.overall_pass;
  if (include_timings) out["elapsed_ms"] = rep.elapsed_ms;
  return out.dump(2) + "\n";
}

namespace {

std::string csv_field_ll(long long v) { return v >= 0 ? std::to_string(v) : std::string(); }

}  // namespace

std::string report_csv(const Report& rep) {
  std::ostringstream out;
  out << "target,p,b,n,a,kind,k,r,i,j,l,arg,required,observed,margin,pass\n";
  for (const CheckRecord& rec : rep.checks) {
    const SweepParams& pr = rec.sweep.params;
    for (const SweepCell& c : rec.sweep.cells) {
      out << rec.sweep.target << ',' << csv_field_ll(pr.p) << ',' << csv_field_ll(pr.b)
          << ',' << csv_field_ll(pr.n) << ',' << csv_field_ll(pr.a) << ',' << c.kind
          << ',' << csv_field_ll(c.k) << ',' << csv_field_ll(c.r) << ','
          << csv_field_ll(c.i) << ',' << csv_field_ll(c.j) << ',' << csv_field_ll(c.l)
          << ',' << csv_field_ll(c.arg) << ',' << c.required.str() << ','
          << c.observed.str() << ',' << Margin::of_cell(c).str() << ','
          << (c.pass ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

std::string report_text(const Report& rep, bool include_cells, bool include_timings) {
  std::ostringstream out;
  out << kToolName << ' ' << kToolVersion << "  target=" << rep.target << '\n';
  for (const CheckRecord& rec : rep.checks) {
    const SweepParams& pr = rec.sweep.params;
    out << (rec.sweep.all_pass ? "[PASS] " : "[FAIL] ") << rec.sweep.target;
    if (pr.p >= 0) out << " p=" << pr.p;
    if (pr.b >= 0) out << " b=" << pr.b;
    if (pr.n >= 0) out << " n=" << pr.n;
    if (pr.a >= 0) out << " a=" << pr.a;
    if (pr.i_max >= 0) out << " i_max=" << pr.i_max;
    if (pr.samples >= 0) out << " samples=" << pr.samples;
    out << " cells=" << rec.sweep.cells.size()
        << " min_margin=" << rec.min_margin().str();
    if (include_timings) out << " (" << rec.elapsed_ms << " ms)";
    out << '\n';
    if (!rec.polynomial.empty()) out << "  sum = " << rec.polynomial << '\n';
    if (include_cells) {
      for (const SweepCell& c : rec.sweep.cells) {
        out << "  ";
        if (!c.kind.empty()) out << c.kind << ' ';
        if (c.k >= 0) out << "k=" << c.k << ' ';
        if (c.r >= 0) out << "r=" << c.r << ' ';
        if (c.i >= 0) out << "i=" << c.i << ' ';
        if (c.j >= 0) out << "j=" << c.j << ' ';
        if (c.l >= 0) out << "l=" << c.l << ' ';
        if (c.arg >= 0) out << "arg=" << c.arg << ' ';
        out << "required=" << c.required.str() << " observed=" << c.observed.str()
            << " margin=" << Margin::of_cell(c).str() << (c.pass ? " PASS" : " FAIL")
            << '\n';
      }
    }
  }
  out << (rep.overall_pass ? "OVERALL PASS" : "OVERALL FAIL");
  if (include_timings) out << " (" << rep.elapsed_ms << " ms)";
  out << '\n';
  return out.str();
}

}  // namespace supercong
