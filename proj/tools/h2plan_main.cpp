// h2plan command-line entry point.
//
// Subcommands: run, retrofit, demand, reduce, export-lp, report.
// Exit codes: 0 success/optimal, 2 infeasible LP, 3 validation or input
// error, 1 unexpected failure. Every failure emits a one-line JSON error
// report on stderr.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "h2plan/analytics.hpp"
#include "h2plan/instance_io.hpp"
#include "h2plan/manifest.hpp"
#include "h2plan/mps.hpp"
#include "h2plan/retrofit.hpp"
#include "h2plan/simplex.hpp"
#include "h2plan/verify.hpp"

namespace {

using namespace h2plan;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitValidation = 3;

void emit_error(const std::string& type, const std::string& message) {
  nlohmann::json j;
  j["error"] = type;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

std::string default_data_dir() {
  const char* env = std::getenv("H2PLAN_DATA");
  return env ? env : "data/toy";
}

const std::vector<std::string> kDataFiles = {
    "zones.csv",      "airports.csv",        "flights.csv",
    "technologies.csv", "edges.csv",         "existing_capacity.csv",
    "fuels.csv",      "country_demand.csv",  "trucks.csv",
    "elec_load.csv",  "vre_cf.csv",          "presets.cfg"};

struct SolverFlags {
  int64_t max_iters = 200000;
  double tol_feas = 1e-7;
  double tol_opt = 1e-8;
  std::string pivot = "devex";

  lp::SolveOptions options() const {
    lp::SolveOptions o;
    o.max_iters = max_iters;
    o.tol_feas = tol_feas;
    o.tol_opt = tol_opt;
    if (pivot == "devex")
      o.pivot = lp::PivotRule::devex;
    else if (pivot == "bland")
      o.pivot = lp::PivotRule::bland;
    else if (pivot == "dantzig")
      o.pivot = lp::PivotRule::dantzig;
    else
      throw ValidationError("unknown pivot rule '" + pivot + "'");
    return o;
  }
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
  cmd->add_option("--max-iters", f.max_iters, "simplex iteration limit");
  cmd->add_option("--tol-feas", f.tol_feas, "primal feasibility tolerance");
  cmd->add_option("--tol-opt", f.tol_opt, "reduced-cost optimality tolerance");
  cmd->add_option("--pivot", f.pivot, "pivot rule: devex, dantzig or bland");
}

nlohmann::json summary_json(const sysmodel::BuiltModel& built,
                            const lp::SolveResult& r) {
  auto costs = analytics::cost_report(built, r);
  auto em = analytics::emissions_report(built, r);
  auto ab = analytics::abatement_cost(built, r);
  nlohmann::json j;
  j["objective_eur"] = r.objective;
  j["h2_generated_tonnes"] = costs.total_h2_generated_t;
  j["h2_liquefied_tonnes"] = costs.total_h2_liquefied_t;
  if (costs.total_h2_generated_t > 0) {
    auto l = analytics::lcoh(costs);
    j["lcoh_gaseous_eur_per_kg"] = l.gaseous_eur_per_kg;
    if (l.liquid_defined) j["lcoh_liquid_eur_per_kg"] = l.liquid_eur_per_kg;
  }
  j["abatement_eur_per_tonne"] = ab.eur_per_tonne;
  j["abatement_cap_binding"] = ab.binding;
  j["emissions"] = {{"direct_power_t", em.direct_power_t},
                    {"direct_h2_t", em.direct_h2_t},
                    {"indirect_electrolysis_t", em.indirect_electrolysis_t},
                    {"aviation_share", em.aviation_share},
                    {"aviation_attributed_t", em.aviation_attributed_t},
                    {"counterfactual_jet_t", em.counterfactual_jet_t}};
  return j;
}

void write_solution_files(const lp::LinearProgram& p, const lp::SolveResult& r,
                          const std::string& dir) {
  {
    csv::Writer w(dir + "/solution.csv");
    w.row({"column", "value"});
    for (int j = 0; j < p.num_cols(); ++j)
      w.row({p.col_names[j], csv::num_exact(r.primal[j])});
  }
  {
    csv::Writer w(dir + "/duals.csv");
    w.row({"row", "dual"});
    for (int i = 0; i < p.num_rows(); ++i)
      w.row({p.row_names[i], csv::num_exact(r.dual[i])});
  }
}

void write_farkas_report(const lp::LinearProgram& p, const lp::SolveResult& r,
                         const std::string& dir) {
  csv::Writer w(dir + "/infeasibility.csv");
  w.row({"row", "farkas_weight"});
  for (int i = 0; i < p.num_rows(); ++i)
    if (i < static_cast<int>(r.certificate.size()) &&
        std::abs(r.certificate[i]) > 1e-9)
      w.row({p.row_names[i], csv::num(r.certificate[i])});
}

int cmd_run(const std::string& data, const std::string& out,
            const std::string& preset_name, int rep_days, uint64_t seed,
            const SolverFlags& flags) {
  auto t0 = std::chrono::steady_clock::now();
  manifest::DirectoryLock lock(out);
  manifest::RunManifest man;
  man.command = "run";
  man.options = {{"preset", preset_name},
                 {"data", data},
                 {"rep_days", std::to_string(rep_days)},
                 {"seed", std::to_string(seed)},
                 {"pivot", flags.pivot}};
  for (const auto& f : kDataFiles)
    man.add_input((fs::path(data) / f).string());

  auto ds = instance_io::load_dataset(data);
  auto sc = instance_io::preset(ds.presets, preset_name);
  auto asmb = instance_io::assemble(ds, rep_days, seed);
  auto built = sysmodel::build_lp(asmb.instance, sc);
  auto r = lp::solve(built.lp, flags.options());
  man.solver_status = lp::status_name(r.status);

  std::vector<std::string> outputs;
  if (r.status == lp::SolveStatus::optimal) {
    man.objective = r.objective;
    analytics::summarize(built, r, out);
    write_solution_files(built.lp, r, out);
    std::ofstream js((fs::path(out) / "summary.json").string(), std::ios::binary);
    js << summary_json(built, r).dump(2) << '\n';
    js.close();
    demand::write_allocation_csv((fs::path(out) / "allocation.csv").string(),
                                 asmb.allocation);
    outputs = {"capacity.csv",     "generation.csv", "storage.csv",
               "transmission.csv", "prices.csv",     "costs.csv",
               "zones.geojson",    "solution.csv",   "duals.csv",
               "summary.json",     "allocation.csv"};
  } else {
    write_farkas_report(built.lp, r, out);
    outputs = {"infeasibility.csv"};
  }
  for (const auto& f : outputs) man.add_output(out, f);
  man.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  manifest::write(man, (fs::path(out) / "manifest.json").string());

  if (r.status != lp::SolveStatus::optimal) {
    emit_error("Infeasible", "scenario '" + preset_name +
                                 "' is infeasible; see infeasibility.csv");
    return kExitInfeasible;
  }
  return kExitOk;
}

int cmd_retrofit(std::vector<double> ranges, std::vector<double> gis,
                 std::vector<double> sps, bool zero_payload,
                 const std::string& out_path) {
  retrofit::AircraftSpec spec;
  retrofit::PowertrainAssumptions pa;
  if (ranges.empty()) ranges = {500, 600, 700, 800, 900, 1000, 1100};
  if (gis.empty()) gis = {pa.tank_gravimetric_index};
  if (sps.empty()) sps = {pa.fc_specific_power_kw_per_kg};

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw IoError("cannot write " + out_path);
    os = &file;
  }
  if (zero_payload) {
    *os << "range_nmi,gi,required_sp_kw_per_kg\n";
    for (double r : ranges)
      for (double gi : gis)
        *os << csv::num(r) << ',' << csv::num(gi) << ','
            << csv::num(retrofit::required_specific_power_zero_payload(r, gi,
                                                                       spec, pa))
            << '\n';
  } else {
    auto cells = retrofit::sweep_grid(ranges, gis, sps, spec, pa);
    retrofit::write_sweep_csv(*os, cells);
  }
  return kExitOk;
}

int cmd_demand(const std::string& data, const std::string& out) {
  fs::create_directories(out);
  auto ds = instance_io::load_dataset(data);
  auto asmb = instance_io::assemble(ds, 365, 0);  // identity reduction
  demand::write_allocation_csv((fs::path(out) / "allocation.csv").string(),
                               asmb.allocation);
  demand::write_profiles_csv(out, asmb.profiles);
  nlohmann::json j;
  j["aviation_total_tonnes"] = asmb.profiles.aviation_total_tonnes;
  j["out_of_scope_tonnes"] = asmb.profiles.out_of_scope_tonnes;
  std::ofstream js((fs::path(out) / "demand_summary.json").string(),
                   std::ios::binary);
  js << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_reduce(const std::string& data, const std::string& out, int k,
               uint64_t seed) {
  fs::create_directories(out);
  auto ds = instance_io::load_dataset(data);
  auto asmb = instance_io::assemble(ds, 365, 0);
  tdr::SeriesBundle bundle;
  for (const auto& p : asmb.profiles.profiles) {
    std::string prefix = p.carrier == demand::Carrier::electricity ? "elec:"
                         : p.carrier == demand::Carrier::h2_gas    ? "gas:"
                                                                   : "liq:";
    bundle.add(prefix + p.zone_id, p.series);
  }
  for (const auto& [key, series] : ds.vre_cf) bundle.add("cf:" + key, series);
  auto red = tdr::reduce(bundle, k, seed);
  tdr::write_reduction_csv(out, bundle, red);
  return kExitOk;
}

int cmd_export_lp(const std::string& data, const std::string& preset_name,
                  int rep_days, uint64_t seed, const std::string& out_path) {
  auto ds = instance_io::load_dataset(data);
  auto sc = instance_io::preset(ds.presets, preset_name);
  auto asmb = instance_io::assemble(ds, rep_days, seed);
  auto built = sysmodel::build_lp(asmb.instance, sc);
  lp::export_model(built.lp, out_path);
  return kExitOk;
}

int cmd_report(const std::string& data, const std::string& preset_name,
               int rep_days, uint64_t seed, const std::string& solution_csv,
               const std::string& duals_csv, const std::string& out) {
  manifest::DirectoryLock lock(out);
  auto ds = instance_io::load_dataset(data);
  auto sc = instance_io::preset(ds.presets, preset_name);
  auto asmb = instance_io::assemble(ds, rep_days, seed);
  auto built = sysmodel::build_lp(asmb.instance, sc);
  auto r = lp::import_solution(built.lp, solution_csv, duals_csv);
  auto rep = lp::verify_solution(built.lp, r);
  if (!rep.ok()) {
    std::string msg = "imported solution fails verification:";
    for (size_t i = 0; i < rep.violations.size() && i < 5; ++i)
      msg += " " + rep.violations[i] + ";";
    throw ValidationError(msg);
  }
  analytics::summarize(built, r, out);
  std::ofstream js((fs::path(out) / "summary.json").string(), std::ios::binary);
  js << summary_json(built, r).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"h2plan: hydrogen-electricity capacity expansion toolkit"};
  app.require_subcommand(1);

  std::string data = default_data_dir();
  std::string out;
  std::string preset_name = "Base";
  int rep_days = 1;
  uint64_t seed = 12345;
  SolverFlags flags;

  auto* run = app.add_subcommand("run", "solve a scenario end to end");
  run->add_option("--data", data, "input data directory");
  run->add_option("--out", out, "output directory")->required();
  run->add_option("--preset", preset_name, "scenario preset name")->required();
  run->add_option("--rep-days", rep_days, "representative days");
  run->add_option("--seed", seed, "clustering seed");
  add_solver_flags(run, flags);

  std::vector<double> ranges, gis, sps;
  bool zero_payload = false;
  std::string retro_out;
  auto* retro = app.add_subcommand("retrofit", "aircraft retrofit sweep");
  retro->add_option("--range", ranges, "mission range(s), nmi");
  retro->add_option("--gi", gis, "tank gravimetric index(es)");
  retro->add_option("--sp", sps, "fuel cell specific power(s), kW/kg");
  retro->add_flag("--zero-payload", zero_payload,
                  "solve for the specific power giving zero payload reduction");
  retro->add_option("--out", retro_out, "output CSV (default stdout)");

  auto* dem = app.add_subcommand("demand", "build demand profiles");
  dem->add_option("--data", data, "input data directory");
  dem->add_option("--out", out, "output directory")->required();

  int k = 20;
  auto* red = app.add_subcommand("reduce", "time-domain reduction");
  red->add_option("--data", data, "input data directory");
  red->add_option("--out", out, "output directory")->required();
  red->add_option("--k", k, "number of representative days");
  red->add_option("--seed", seed, "clustering seed");

  std::string lp_out;
  auto* exp = app.add_subcommand("export-lp", "write the scenario LP as MPS");
  exp->add_option("--data", data, "input data directory");
  exp->add_option("--preset", preset_name, "scenario preset name")->required();
  exp->add_option("--rep-days", rep_days, "representative days");
  exp->add_option("--seed", seed, "clustering seed");
  exp->add_option("--out", lp_out, "output MPS path")->required();

  std::string solution_csv, duals_csv;
  auto* rep = app.add_subcommand("report", "analytics on an imported solution");
  rep->add_option("--data", data, "input data directory");
  rep->add_option("--preset", preset_name, "scenario preset name")->required();
  rep->add_option("--rep-days", rep_days, "representative days");
  rep->add_option("--seed", seed, "clustering seed");
  rep->add_option("--solution", solution_csv, "solution.csv path")->required();
  rep->add_option("--duals", duals_csv, "duals.csv path")->required();
  rep->add_option("--out", out, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return cmd_run(data, out, preset_name, rep_days, seed, flags);
    if (retro->parsed())
      return cmd_retrofit(ranges, gis, sps, zero_payload, retro_out);
    if (dem->parsed()) return cmd_demand(data, out);
    if (red->parsed()) return cmd_reduce(data, out, k, seed);
    if (exp->parsed())
      return cmd_export_lp(data, preset_name, rep_days, seed, lp_out);
    if (rep->parsed())
      return cmd_report(data, preset_name, rep_days, seed, solution_csv,
                        duals_csv, out);
  } catch (const UnknownPreset& e) {
    emit_error("UnknownPreset", e.what());
    return kExitValidation;
  } catch (const RangeOutOfModelValidity& e) {
    emit_error("RangeOutOfModelValidity", e.what());
    return kExitValidation;
  } catch (const InfeasibleRetrofit& e) {
    emit_error("InfeasibleRetrofit", e.what());
    return kExitValidation;
  } catch (const ValidationError& e) {
    emit_error("ValidationError", e.what());
    return kExitValidation;
  } catch (const IoError& e) {
    emit_error("IoError", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    emit_error("Unexpected", e.what());
    return kExitUnexpected;
  }
  return kExitUnexpected;
}
