#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "h2plan/common.hpp"
#include "h2plan/lp.hpp"

namespace h2plan::sysmodel {

// Sector-coupled capacity expansion model: joint electricity + hydrogen
// system over weighted representative periods, built as a sparse LP.
//
// Units throughout the built model:
//   power capacity MW, energy MWh; hydrogen flows tonnes/h, stocks tonnes;
//   money EUR. Input capex columns use the native units of the data tables
//   and are converted on load (see instance_io.hpp / docs/config.md).

enum class Sector {
  power,
  h2_production,
  h2_storage,
  h2_gas_to_power,
  power_storage,
  liquefier
};

inline Sector sector_from_string(const std::string& s) {
  if (s == "power") return Sector::power;
  if (s == "h2_production") return Sector::h2_production;
  if (s == "h2_storage") return Sector::h2_storage;
  if (s == "h2_gas_to_power") return Sector::h2_gas_to_power;
  if (s == "power_storage") return Sector::power_storage;
  if (s == "liquefier") return Sector::liquefier;
  throw ValidationError("unknown sector '" + s + "'");
}

inline const char* sector_name(Sector s) {
  switch (s) {
    case Sector::power: return "power";
    case Sector::h2_production: return "h2_production";
    case Sector::h2_storage: return "h2_storage";
    case Sector::h2_gas_to_power: return "h2_gas_to_power";
    case Sector::power_storage: return "power_storage";
    case Sector::liquefier: return "liquefier";
  }
  return "?";
}

// Technology parameters in model units (already converted from the raw data
// tables by the loader).
struct TechnologySpec {
  std::string name;
  Sector sector = Sector::power;
  double lifetime_yr = 30;
  double capex = 0;        // EUR per capacity unit (MW, t/h, tonnes, MWh)
  double capex_charge = 0; // storage charge-capacity cost, EUR per MW or t/h
  double fom = 0;          // EUR per capacity unit per year
  double vom = 0;          // EUR per MWh generated / tonne produced
  double heat_rate = 0;    // MMBTU/MWh (thermal power techs)
  double efficiency = 0;   // fraction; %LHV for H2 production, %HHV for H2-to-power,
                           // round-trip for power storage
  std::string fuel;        // empty = none; "electricity" handled endogenously
  double co2_intensity = 0;   // tonne CO2 per MMBTU of fuel
  double capture_rate = 0;    // fraction of combustion CO2 captured
  double electricity_use = 0; // MWh per tonne H2 (conditioning / electrolysis)
  double boiloff = 0;         // fractional loss on liquefier output
  double charge_efficiency = 1.0;  // storage one-way charge efficiency
  bool stores_liquid = false;      // h2_storage on the liquid side (cryo tanks)
  bool expandable = true;
  bool is_nuclear = false;
  std::vector<std::string> zone_whitelist;  // empty = all zones
  std::string cf_profile;  // non-empty marks a VRE tech

  bool uses_ccs() const { return capture_rate > 0; }
  bool allowed_in(const std::string& zone) const {
    if (zone_whitelist.empty()) return true;
    return std::find(zone_whitelist.begin(), zone_whitelist.end(), zone) !=
           zone_whitelist.end();
  }

  // Electricity consumed per tonne of H2 produced.
  double elec_use_mwh_per_t() const {
    if (electricity_use > 0) return electricity_use;
    if (sector == Sector::h2_production && fuel == "electricity" && efficiency > 0)
      return kH2LhvMwhPerTonne / efficiency;
    return 0;
  }
  // Fossil fuel per tonne of H2 produced (MMBTU/t).
  double fuel_mmbtu_per_t() const {
    if (sector != Sector::h2_production || fuel.empty() || fuel == "electricity" ||
        efficiency <= 0)
      return 0;
    return kH2LhvMwhPerTonne / efficiency * kMmbtuPerMwh;
  }
  // Hydrogen consumed per MWh of electricity generated (t/MWh).
  double h2_t_per_mwh() const {
    if (sector != Sector::h2_gas_to_power || efficiency <= 0) return 0;
    return 1.0 / (efficiency * kH2HhvMwhPerTonne);
  }
};

enum class EdgeKind { hvac, hvdc, pipeline, truck_route };

inline EdgeKind edge_kind_from_string(const std::string& s) {
  if (s == "hvac") return EdgeKind::hvac;
  if (s == "hvdc") return EdgeKind::hvdc;
  if (s == "pipeline") return EdgeKind::pipeline;
  if (s == "truck_route") return EdgeKind::truck_route;
  throw ValidationError("unknown edge kind '" + s + "'");
}

inline constexpr double kMaxTruckRouteKm = 500.0;
inline constexpr double kMaxLineExpansionMw = 10000.0;  // 10 GW per line

struct NetworkEdge {
  EdgeKind kind = EdgeKind::hvac;
  std::string from_zone, to_zone;
  double length_km = 0;
  double existing_capacity = 0;  // MW, t/h, or trucks
  double max_expansion = 0;      // same unit; lp::kInf = unlimited
  double capex_per_unit = 0;     // EUR per capacity unit (total for the edge)
  double lifetime_yr = 30;
  double loss_pct_per_100km = 0; // symmetric flow loss (lines and pipelines)

  double loss_fraction() const { return loss_pct_per_100km / 100.0 * length_km / 100.0; }
};

struct TruckParams {
  double capacity_tonnes = 4.0;
  double speed_kmh = 50.0;
  double opex_eur_per_km = 1.4;
  double fuel_kg_per_km = 0.09;
};

struct FuelSpec {
  double price_eur_per_mmbtu = 0;
  double co2_t_per_mmbtu = 0;
};

struct ScenarioConfig {
  std::string name = "Base";
  bool aviation_demand_on = false;
  bool nuclear_expansion = false;
  bool ccs_allowed = true;
  std::vector<std::string> ccs_zone_whitelist;
  bool pipelines_allowed = true;
  bool trucks_allowed = false;
  double emissions_cap_tonnes = lp::kInf;
};

struct SystemInstance {
  std::vector<std::string> zones;
  std::map<std::string, std::string> zone_country;
  std::map<std::string, std::pair<double, double>> zone_latlon;
  std::vector<NetworkEdge> edges;
  std::vector<TechnologySpec> technologies;
  // (zone, tech) -> capacity in model units; ".2" suffix on tech name for
  // storage charge capacity is not used: see existing_charge
  std::map<std::pair<std::string, std::string>, double> existing_capacity;
  std::map<std::pair<std::string, std::string>, double> existing_charge_capacity;

  std::vector<double> period_weights;  // days represented by each period
  int hours_per_period = 24;

  // series indexed t = period * hours_per_period + hour
  std::map<std::string, std::vector<double>> demand_elec;  // MWh per hour
  std::map<std::string, std::vector<double>> demand_gas;   // tonnes per hour
  std::map<std::string, std::vector<double>> demand_liq;   // tonnes per hour
  std::map<std::pair<std::string, std::string>, std::vector<double>> vre_cf;

  std::map<std::string, FuelSpec> fuels;
  TruckParams trucks;
  double discount_rate = 0.04;

  int num_steps() const {
    return static_cast<int>(period_weights.size()) * hours_per_period;
  }
  double weight(int t) const { return period_weights[t / hours_per_period]; }

  const TechnologySpec* tech(const std::string& name) const {
    for (const auto& k : technologies)
      if (k.name == name) return &k;
    return nullptr;
  }
  double existing(const std::string& z, const std::string& k) const {
    auto it = existing_capacity.find({z, k});
    return it == existing_capacity.end() ? 0.0 : it->second;
  }
  double existing_charge(const std::string& z, const std::string& k) const {
    auto it = existing_charge_capacity.find({z, k});
    return it == existing_charge_capacity.end() ? 0.0 : it->second;
  }
};

// Capital recovery: annual payment per unit of capex over the lifetime.
inline double annualize(double capex, double lifetime_yr, double discount_rate) {
  if (lifetime_yr < 1) throw ValidationError("annualize: lifetime must be >= 1");
  if (discount_rate < 0) throw ValidationError("annualize: negative discount rate");
  if (discount_rate == 0) return capex / lifetime_yr;
  return capex * discount_rate / (1.0 - std::pow(1.0 + discount_rate, -lifetime_yr));
}

// ---------------------------------------------------------------------------
// Scenario presets

// Applies one of the named scenario presets to a copy of the instance:
// demand toggles act on the demand series, technology toggles on the
// technology list, network toggles on the edge list.
inline SystemInstance apply_scenario(const SystemInstance& in,
                                     const ScenarioConfig& sc) {
  SystemInstance out = in;

  if (!sc.aviation_demand_on)
    for (auto& [zone, series] : out.demand_liq)
      std::fill(series.begin(), series.end(), 0.0);

  std::vector<TechnologySpec> techs;
  for (TechnologySpec k : out.technologies) {
    if (k.uses_ccs()) {
      if (!sc.ccs_allowed) continue;  // drop: no columns at all
      k.zone_whitelist = sc.ccs_zone_whitelist;
    }
    if (k.is_nuclear) {
      if (sc.nuclear_expansion) {
        // expansion only where capacity already exists
        k.expandable = true;
        k.zone_whitelist.clear();
        for (const auto& z : out.zones)
          if (out.existing(z, k.name) > 0) k.zone_whitelist.push_back(z);
        if (k.zone_whitelist.empty()) k.expandable = false;
      } else {
        k.expandable = false;
      }
    }
    techs.push_back(std::move(k));
  }
  out.technologies = std::move(techs);

  std::vector<NetworkEdge> edges;
  for (NetworkEdge e : out.edges) {
    if (e.kind == EdgeKind::truck_route) {
      if (!sc.trucks_allowed) continue;
      if (e.length_km > kMaxTruckRouteKm) continue;
    }
    if (e.kind == EdgeKind::pipeline && !sc.pipelines_allowed) {
      e.max_expansion = 0;
      if (e.existing_capacity <= 0) continue;
    }
    if ((e.kind == EdgeKind::hvac || e.kind == EdgeKind::hvdc))
      e.max_expansion = std::min(e.max_expansion, kMaxLineExpansionMw);
    edges.push_back(std::move(e));
  }
  out.edges = std::move(edges);
  return out;
}

// ---------------------------------------------------------------------------
// LP construction

// Objective cost categories, used for the cost ledger in analytics. Every
// nonzero objective coefficient is attributed to exactly one category, so
// the category sums reproduce the LP objective exactly.
enum class CostCategory {
  power_capex,
  power_fom,
  power_vom,
  power_fuel,
  power_storage_fixed,
  transmission_fixed,
  gas_to_power_fixed,
  gas_to_power_vom,
  h2_production_fixed,
  h2_production_vom,
  h2_fuel,
  h2_storage_fixed,
  h2_liquid_storage_fixed,
  h2_pipeline_fixed,
  liquefaction_fixed,
  truck_fixed,
  truck_opex,
};

inline const char* cost_category_name(CostCategory c) {
  switch (c) {
    case CostCategory::power_capex: return "power_capex";
    case CostCategory::power_fom: return "power_fom";
    case CostCategory::power_vom: return "power_vom";
    case CostCategory::power_fuel: return "power_fuel";
    case CostCategory::power_storage_fixed: return "power_storage_fixed";
    case CostCategory::transmission_fixed: return "transmission_fixed";
    case CostCategory::gas_to_power_fixed: return "gas_to_power_fixed";
    case CostCategory::gas_to_power_vom: return "gas_to_power_vom";
    case CostCategory::h2_production_fixed: return "h2_production_fixed";
    case CostCategory::h2_production_vom: return "h2_production_vom";
    case CostCategory::h2_fuel: return "h2_fuel";
    case CostCategory::h2_storage_fixed: return "h2_storage_fixed";
    case CostCategory::h2_liquid_storage_fixed: return "h2_liquid_storage_fixed";
    case CostCategory::h2_pipeline_fixed: return "h2_pipeline_fixed";
    case CostCategory::liquefaction_fixed: return "liquefaction_fixed";
    case CostCategory::truck_fixed: return "truck_fixed";
    case CostCategory::truck_opex: return "truck_opex";
  }
  return "?";
}

struct EdgeVars {
  int cap_new = -1;
  int fleet_new = -1;                 // truck routes only
  std::vector<int> fwd, bwd;          // flow per step (lines / pipelines)
  std::vector<int> move_fwd, move_bwd;  // loaded truck movements per step
};

using ZoneTech = std::pair<std::string, std::string>;

struct ModelMap {
  int steps = 0;
  int hours_per_period = 24;
  std::vector<double> step_weight;

  std::map<ZoneTech, int> cap_total, cap_new, cap_ret;
  std::map<ZoneTech, int> charge_cap, charge_new;
  std::map<ZoneTech, std::vector<int>> gen;      // power + gas-to-power, MWh
  std::map<ZoneTech, std::vector<int>> prod;     // h2 production, t/h
  std::map<ZoneTech, std::vector<int>> charge, discharge, state;
  std::map<ZoneTech, std::vector<int>> liq;      // liquefier throughput, t/h
  std::vector<EdgeVars> edges;

  std::map<std::string, std::vector<int>> power_balance, gas_balance, liquid_balance;
  int co2_row = -1;

  // per-column objective attribution: (category, unit cost) pairs that sum
  // to the LP cost coefficient
  std::vector<std::vector<std::pair<CostCategory, double>>> col_costs;
};

struct BuiltModel {
  lp::LinearProgram lp;
  ModelMap map;
  SystemInstance instance;  // post-scenario, as the LP was built from
  ScenarioConfig scenario;
};

namespace detail {

class Builder {
 public:
  Builder(const SystemInstance& inst, const ScenarioConfig& sc)
      : raw_(inst), sc_(sc), inst_(apply_scenario(inst, sc)) {}

  BuiltModel build() {
    validate();
    T_ = inst_.num_steps();
    H_ = inst_.hours_per_period;
    map_.steps = T_;
    map_.hours_per_period = H_;
    map_.step_weight.resize(T_);
    for (int t = 0; t < T_; ++t) map_.step_weight[t] = inst_.weight(t);

    add_balance_rows();
    if (std::isfinite(sc_.emissions_cap_tonnes) &&
        sc_.emissions_cap_tonnes < lp::kInf)
      map_.co2_row = lp_.add_row("co2_cap", lp::RowSense::LE, sc_.emissions_cap_tonnes);

    for (const auto& z : inst_.zones)
      for (const auto& k : inst_.technologies)
        if (pair_active(z, k)) add_zone_tech(z, k);
    add_edges();

    map_.col_costs.resize(lp_.num_cols());
    for (const auto& [col, costs] : pending_costs_) map_.col_costs[col] = costs;

    drop_trivial_rows();
    lp_.validate();
    return BuiltModel{std::move(lp_), std::move(map_), std::move(inst_), sc_};
  }

 private:
  const SystemInstance& raw_;
  ScenarioConfig sc_;
  SystemInstance inst_;
  lp::LinearProgram lp_;
  ModelMap map_;
  int T_ = 0, H_ = 0;
  std::map<int, std::vector<std::pair<CostCategory, double>>> pending_costs_;

  bool pair_active(const std::string& z, const TechnologySpec& k) const {
    if (!k.allowed_in(z)) return inst_.existing(z, k.name) > 0;
    return k.expandable || inst_.existing(z, k.name) > 0;
  }

  void fail(std::vector<std::string>& defects, const std::string& msg) const {
    defects.push_back(msg);
  }

  void validate() const {
    std::vector<std::string> defects;
    if (inst_.zones.empty()) fail(defects, "instance has no zones");
    if (inst_.period_weights.empty()) fail(defects, "no representative periods");
    for (double w : inst_.period_weights)
      if (w <= 0) fail(defects, "nonpositive period weight");
    int T = inst_.num_steps();
    std::set<std::string> zset(inst_.zones.begin(), inst_.zones.end());
    auto check_series = [&](const auto& m, const std::string& what) {
      for (const auto& [key, series] : m) {
        std::string zone;
        if constexpr (std::is_same_v<std::decay_t<decltype(key)>, std::string>)
          zone = key;
        else
          zone = key.first;
        if (!zset.count(zone)) fail(defects, what + ": unknown zone " + zone);
        if (static_cast<int>(series.size()) != T)
          fail(defects, what + " series for " + zone + " has wrong length");
      }
    };
    check_series(inst_.demand_elec, "electric demand");
    check_series(inst_.demand_gas, "gaseous demand");
    check_series(inst_.demand_liq, "liquid demand");
    check_series(inst_.vre_cf, "capacity factor");
    for (const auto& z : inst_.zones)
      if (!inst_.demand_elec.count(z))
        fail(defects, "no electric demand series for zone " + z);
    for (const auto& k : inst_.technologies) {
      if (k.lifetime_yr <= 0) fail(defects, "tech " + k.name + ": lifetime <= 0");
      if (k.capture_rate < 0 || k.capture_rate > 1)
        fail(defects, "tech " + k.name + ": capture rate outside [0,1]");
      if (!k.fuel.empty() && k.fuel != "electricity" && !inst_.fuels.count(k.fuel))
        fail(defects, "tech " + k.name + ": unknown fuel " + k.fuel);
      if (!k.cf_profile.empty())
        for (const auto& z : inst_.zones)
          if (pair_active(z, k) && !inst_.vre_cf.count({z, k.name}))
            fail(defects, "tech " + k.name + ": missing cf series in zone " + z);
    }
    for (const auto& e : inst_.edges) {
      if (e.length_km <= 0) fail(defects, "edge with nonpositive length");
      if (!zset.count(e.from_zone) || !zset.count(e.to_zone))
        fail(defects, "edge references unknown zone");
      if (e.kind == EdgeKind::truck_route && e.length_km > kMaxTruckRouteKm)
        fail(defects, "truck route longer than 500 km");
    }
    if (sc_.ccs_allowed && sc_.ccs_zone_whitelist.empty())
      for (const auto& k : inst_.technologies)
        if (k.uses_ccs())
          fail(defects, "scenario allows CCS but the zone whitelist is empty");
    if (!defects.empty()) {
      std::ostringstream os;
      os << "invalid instance/scenario (" << defects.size() << " defects):";
      for (const auto& d : defects) os << "\n  - " << d;
      throw ValidationError(os.str());
    }
  }

  void set_cost(int col, CostCategory cat, double value) {
    if (value == 0) return;
    lp_.cost[col] += value;
    pending_costs_[col].push_back({cat, value});
  }

  std::string tname(const std::string& z, const std::string& k) const {
    return z + "." + k;
  }

  // A carrier balance in a zone with no producers, consumers, storage, or
  // network attachment has an all-zero row. When it is trivially satisfiable
  // it is removed so the emitted matrix has no zero rows; an unsatisfiable
  // empty row (demand nothing can serve) is kept for the solver to certify
  // infeasible.
  void drop_trivial_rows() {
    std::vector<bool> used(lp_.num_rows(), false);
    for (const auto& t : lp_.entries) used[t.row] = true;
    std::vector<int> remap(lp_.num_rows(), -1);
    int next = 0;
    for (int i = 0; i < lp_.num_rows(); ++i) {
      bool removable = !used[i] &&
                       ((lp_.sense[i] == lp::RowSense::LE && lp_.rhs[i] >= 0) ||
                        (lp_.sense[i] == lp::RowSense::GE && lp_.rhs[i] <= 0) ||
                        (lp_.sense[i] == lp::RowSense::EQ && lp_.rhs[i] == 0));
      if (!removable) remap[i] = next++;
    }
    if (next == lp_.num_rows()) return;
    std::vector<std::string> names;
    std::vector<lp::RowSense> sense;
    std::vector<double> rhs;
    for (int i = 0; i < lp_.num_rows(); ++i)
      if (remap[i] >= 0) {
        names.push_back(lp_.row_names[i]);
        sense.push_back(lp_.sense[i]);
        rhs.push_back(lp_.rhs[i]);
      }
    lp_.row_names = std::move(names);
    lp_.sense = std::move(sense);
    lp_.rhs = std::move(rhs);
    for (auto& t : lp_.entries) t.row = remap[t.row];
    auto remap_series = [&](std::map<std::string, std::vector<int>>& m) {
      for (auto& [zone, rows] : m)
        for (int& r : rows) r = remap[r];
    };
    remap_series(map_.power_balance);
    remap_series(map_.gas_balance);
    remap_series(map_.liquid_balance);
    if (map_.co2_row >= 0) map_.co2_row = remap[map_.co2_row];
  }

  void add_balance_rows() {
    for (const auto& z : inst_.zones) {
      auto& pb = map_.power_balance[z];
      auto& gb = map_.gas_balance[z];
      auto& lb = map_.liquid_balance[z];
      for (int t = 0; t < T_; ++t) {
        double de = inst_.demand_elec.count(z) ? inst_.demand_elec.at(z)[t] : 0.0;
        double dg = inst_.demand_gas.count(z) ? inst_.demand_gas.at(z)[t] : 0.0;
        double dl = inst_.demand_liq.count(z) ? inst_.demand_liq.at(z)[t] : 0.0;
        pb.push_back(lp_.add_row("pb[" + z + "][" + std::to_string(t) + "]",
                                 lp::RowSense::EQ, de));
        gb.push_back(lp_.add_row("gb[" + z + "][" + std::to_string(t) + "]",
                                 lp::RowSense::EQ, dg));
        lb.push_back(lp_.add_row("lb[" + z + "][" + std::to_string(t) + "]",
                                 lp::RowSense::EQ, dl));
      }
    }
  }

  // capacity accounting: cap_total - new + retired = existing
  int add_capacity_block(const std::string& z, const TechnologySpec& k,
                         CostCategory fixed_cat) {
    double existing = inst_.existing(z, k.name);
    bool can_expand = k.expandable && k.allowed_in(z);
    int cap = lp_.add_col("cap[" + tname(z, k.name) + "]", 0, lp::kInf, 0);
    int cnew = lp_.add_col("new[" + tname(z, k.name) + "]", 0,
                           can_expand ? lp::kInf : 0.0, 0);
    int cret = lp_.add_col("ret[" + tname(z, k.name) + "]", 0, existing, 0);
    int link = lp_.add_row("cap_link[" + tname(z, k.name) + "]", lp::RowSense::EQ,
                           existing);
    lp_.add_entry(link, cap, 1.0);
    lp_.add_entry(link, cnew, -1.0);
    lp_.add_entry(link, cret, 1.0);
    set_cost(cnew, fixed_cat, annualize(k.capex, k.lifetime_yr, inst_.discount_rate));
    set_cost(cap, fixed_cat, k.fom);
    map_.cap_total[{z, k.name}] = cap;
    map_.cap_new[{z, k.name}] = cnew;
    map_.cap_ret[{z, k.name}] = cret;
    return cap;
  }

  void add_zone_tech(const std::string& z, const TechnologySpec& k) {
    switch (k.sector) {
      case Sector::power:
      case Sector::h2_gas_to_power: {
        bool g2p = k.sector == Sector::h2_gas_to_power;
        CostCategory fixed = g2p ? CostCategory::gas_to_power_fixed
                                 : CostCategory::power_capex;
        int cap = add_capacity_block(z, k, fixed);
        if (!g2p && k.fom != 0) {
          // fom already attached inside add_capacity_block under `fixed`;
          // reattribute power fom to its own category
          auto& costs = pending_costs_[cap];
          for (auto& [cat, v] : costs)
            if (cat == CostCategory::power_capex) cat = CostCategory::power_fom;
        }
        const std::vector<double>* cf = nullptr;
        if (!k.cf_profile.empty()) cf = &inst_.vre_cf.at({z, k.name});
        auto& gens = map_.gen[{z, k.name}];
        const FuelSpec* fuel =
            (!k.fuel.empty() && k.fuel != "electricity") ? &inst_.fuels.at(k.fuel)
                                                         : nullptr;
        for (int t = 0; t < T_; ++t) {
          double w = inst_.weight(t);
          int g = lp_.add_col("gen[" + tname(z, k.name) + "][" + std::to_string(t) + "]",
                              0, lp::kInf, 0);
          gens.push_back(g);
          set_cost(g, g2p ? CostCategory::gas_to_power_vom : CostCategory::power_vom,
                   w * k.vom);
          if (fuel) {
            set_cost(g, CostCategory::power_fuel,
                     w * k.heat_rate * fuel->price_eur_per_mmbtu);
            if (map_.co2_row >= 0)
              lp_.add_entry(map_.co2_row, g,
                            w * k.heat_rate * k.co2_intensity * (1.0 - k.capture_rate));
          }
          lp_.add_entry(map_.power_balance[z][t], g, 1.0);
          if (g2p)
            lp_.add_entry(map_.gas_balance[z][t], g, -k.h2_t_per_mwh());
          int d = lp_.add_row("disp[" + tname(z, k.name) + "][" + std::to_string(t) + "]",
                              lp::RowSense::LE, 0.0);
          lp_.add_entry(d, g, 1.0);
          lp_.add_entry(d, cap, -(cf ? (*cf)[t] : 1.0));
        }
        break;
      }
      case Sector::h2_production: {
        int cap = add_capacity_block(z, k, CostCategory::h2_production_fixed);
        auto& prods = map_.prod[{z, k.name}];
        const FuelSpec* fuel =
            (!k.fuel.empty() && k.fuel != "electricity") ? &inst_.fuels.at(k.fuel)
                                                         : nullptr;
        double fuel_use = k.fuel_mmbtu_per_t();
        double elec = k.elec_use_mwh_per_t();
        for (int t = 0; t < T_; ++t) {
          double w = inst_.weight(t);
          int p = lp_.add_col("prod[" + tname(z, k.name) + "][" + std::to_string(t) + "]",
                              0, lp::kInf, 0);
          prods.push_back(p);
          set_cost(p, CostCategory::h2_production_vom, w * k.vom);
          if (fuel) {
            set_cost(p, CostCategory::h2_fuel, w * fuel_use * fuel->price_eur_per_mmbtu);
            if (map_.co2_row >= 0)
              lp_.add_entry(map_.co2_row, p,
                            w * fuel_use * k.co2_intensity * (1.0 - k.capture_rate));
          }
          lp_.add_entry(map_.gas_balance[z][t], p, 1.0);
          if (elec > 0) lp_.add_entry(map_.power_balance[z][t], p, -elec);
          int d = lp_.add_row("disp[" + tname(z, k.name) + "][" + std::to_string(t) + "]",
                              lp::RowSense::LE, 0.0);
          lp_.add_entry(d, p, 1.0);
          lp_.add_entry(d, cap, -1.0);
        }
        break;
      }
      case Sector::liquefier: {
        int cap = add_capacity_block(z, k, CostCategory::liquefaction_fixed);
        auto& liqs = map_.liq[{z, k.name}];
        double elec = k.elec_use_mwh_per_t();
        for (int t = 0; t < T_; ++t) {
          int q = lp_.add_col("liq[" + tname(z, k.name) + "][" + std::to_string(t) + "]",
                              0, lp::kInf, 0);
          liqs.push_back(q);
          set_cost(q, CostCategory::h2_production_vom, inst_.weight(t) * k.vom);
          lp_.add_entry(map_.gas_balance[z][t], q, -1.0);
          lp_.add_entry(map_.liquid_balance[z][t], q, 1.0 - k.boiloff);
          if (elec > 0) lp_.add_entry(map_.power_balance[z][t], q, -elec);
          int d = lp_.add_row("disp[" + tname(z, k.name) + "][" + std::to_string(t) + "]",
                              lp::RowSense::LE, 0.0);
          lp_.add_entry(d, q, 1.0);
          lp_.add_entry(d, cap, -1.0);
        }
        break;
      }
      case Sector::h2_storage:
      case Sector::power_storage: {
        bool h2 = k.sector == Sector::h2_storage;
        bool liquid = h2 && k.stores_liquid;
        CostCategory cat = !h2 ? CostCategory::power_storage_fixed
                               : (liquid ? CostCategory::h2_liquid_storage_fixed
                                         : CostCategory::h2_storage_fixed);
        int cap = add_capacity_block(z, k, cat);
        // separate charge-power capacity (compressors / inverter rating)
        double ex_chg = inst_.existing_charge(z, k.name);
        int ccap = lp_.add_col("capc[" + tname(z, k.name) + "]", 0, lp::kInf, 0);
        int cnew = lp_.add_col("newc[" + tname(z, k.name) + "]", 0,
                               k.expandable && k.allowed_in(z) ? lp::kInf : 0.0, 0);
        int clink = lp_.add_row("capc_link[" + tname(z, k.name) + "]",
                                lp::RowSense::EQ, ex_chg);
        lp_.add_entry(clink, ccap, 1.0);
        lp_.add_entry(clink, cnew, -1.0);
        set_cost(cnew, cat, annualize(k.capex_charge, k.lifetime_yr, inst_.discount_rate));
        map_.charge_cap[{z, k.name}] = ccap;
        map_.charge_new[{z, k.name}] = cnew;

        auto& chg = map_.charge[{z, k.name}];
        auto& dis = map_.discharge[{z, k.name}];
        auto& soc = map_.state[{z, k.name}];
        double elec = k.elec_use_mwh_per_t();  // compression on injection
        for (int t = 0; t < T_; ++t) {
          std::string suff = "[" + tname(z, k.name) + "][" + std::to_string(t) + "]";
          chg.push_back(lp_.add_col("chg" + suff, 0, lp::kInf, 0));
          dis.push_back(lp_.add_col("dis" + suff, 0, lp::kInf, 0));
          soc.push_back(lp_.add_col("soc" + suff, 0, lp::kInf, 0));
        }
        for (int t = 0; t < T_; ++t) {
          std::string suff = "[" + tname(z, k.name) + "][" + std::to_string(t) + "]";
          if (h2) {
            auto& bal = liquid ? map_.liquid_balance[z] : map_.gas_balance[z];
            lp_.add_entry(bal[t], chg[t], -1.0);
            lp_.add_entry(bal[t], dis[t], 1.0);
            if (elec > 0) lp_.add_entry(map_.power_balance[z][t], chg[t], -elec);
          } else {
            lp_.add_entry(map_.power_balance[z][t], chg[t], -1.0);
            lp_.add_entry(map_.power_balance[z][t], dis[t], 1.0);
          }
          // hourly state dynamics, cyclic within each representative period
          int p = t / H_, h = t % H_;
          int prev = p * H_ + (h + H_ - 1) % H_;
          int dyn = lp_.add_row("sd" + suff, lp::RowSense::EQ, 0.0);
          lp_.add_entry(dyn, soc[t], 1.0);
          lp_.add_entry(dyn, soc[prev], -1.0);
          lp_.add_entry(dyn, chg[t], -k.charge_efficiency);
          lp_.add_entry(dyn, dis[t], 1.0);
          int sr = lp_.add_row("soc_cap" + suff, lp::RowSense::LE, 0.0);
          lp_.add_entry(sr, soc[t], 1.0);
          lp_.add_entry(sr, cap, -1.0);
          int cr = lp_.add_row("chg_cap" + suff, lp::RowSense::LE, 0.0);
          lp_.add_entry(cr, chg[t], 1.0);
          lp_.add_entry(cr, ccap, -1.0);
          int dr = lp_.add_row("dis_cap" + suff, lp::RowSense::LE, 0.0);
          lp_.add_entry(dr, dis[t], 1.0);
          lp_.add_entry(dr, ccap, -1.0);
        }
        break;
      }
    }
  }

  void add_edges() {
    map_.edges.resize(inst_.edges.size());
    for (size_t e = 0; e < inst_.edges.size(); ++e) {
      const NetworkEdge& ed = inst_.edges[e];
      EdgeVars& ev = map_.edges[e];
      std::string id = "e" + std::to_string(e);
      if (ed.kind == EdgeKind::truck_route) {
        add_truck_route(ed, ev, id);
        continue;
      }
      bool power = ed.kind != EdgeKind::pipeline;
      CostCategory cat = power ? CostCategory::transmission_fixed
                               : CostCategory::h2_pipeline_fixed;
      double max_new = ed.max_expansion;
      ev.cap_new = lp_.add_col("ecap_new[" + id + "]", 0, std::max(0.0, max_new), 0);
      set_cost(ev.cap_new, cat,
               annualize(ed.capex_per_unit, ed.lifetime_yr, inst_.discount_rate));
      double loss = ed.loss_fraction();
      auto& from_bal = power ? map_.power_balance[ed.from_zone]
                             : map_.gas_balance[ed.from_zone];
      auto& to_bal = power ? map_.power_balance[ed.to_zone]
                           : map_.gas_balance[ed.to_zone];
      for (int t = 0; t < T_; ++t) {
        std::string suff = "[" + id + "][" + std::to_string(t) + "]";
        int f = lp_.add_col("flw_f" + suff, 0, lp::kInf, 0);
        int b = lp_.add_col("flw_b" + suff, 0, lp::kInf, 0);
        ev.fwd.push_back(f);
        ev.bwd.push_back(b);
        lp_.add_entry(from_bal[t], f, -1.0);
        lp_.add_entry(to_bal[t], f, 1.0 - loss);
        lp_.add_entry(to_bal[t], b, -1.0);
        lp_.add_entry(from_bal[t], b, 1.0 - loss);
        int cr = lp_.add_row("ecap" + suff, lp::RowSense::LE, ed.existing_capacity);
        lp_.add_entry(cr, f, 1.0);
        lp_.add_entry(cr, b, 1.0);
        lp_.add_entry(cr, ev.cap_new, -1.0);
      }
    }
  }

  void add_truck_route(const NetworkEdge& ed, EdgeVars& ev, const std::string& id) {
    const TruckParams& tp = inst_.trucks;
    double travel_h = ed.length_km / tp.speed_kmh;
    // fuel consumed per tonne delivered, taken off the delivered quantity
    double fuel_frac = tp.fuel_kg_per_km * ed.length_km / (1000.0 * tp.capacity_tonnes);
    double opex_per_t = ed.length_km * tp.opex_eur_per_km / tp.capacity_tonnes;

    ev.fleet_new = lp_.add_col("trk_new[" + id + "]", 0,
                               std::max(0.0, ed.max_expansion), 0);
    set_cost(ev.fleet_new, CostCategory::truck_fixed,
             annualize(ed.capex_per_unit, ed.lifetime_yr, inst_.discount_rate));
    for (int t = 0; t < T_; ++t) {
      double w = inst_.weight(t);
      std::string suff = "[" + id + "][" + std::to_string(t) + "]";
      int mf = lp_.add_col("mov_f" + suff, 0, lp::kInf, 0);
      int mb = lp_.add_col("mov_b" + suff, 0, lp::kInf, 0);
      ev.move_fwd.push_back(mf);
      ev.move_bwd.push_back(mb);
      set_cost(mf, CostCategory::truck_opex, w * opex_per_t);
      set_cost(mb, CostCategory::truck_opex, w * opex_per_t);
      lp_.add_entry(map_.liquid_balance[ed.from_zone][t], mf, -1.0);
      lp_.add_entry(map_.liquid_balance[ed.to_zone][t], mf, 1.0 - fuel_frac);
      lp_.add_entry(map_.liquid_balance[ed.to_zone][t], mb, -1.0);
      lp_.add_entry(map_.liquid_balance[ed.from_zone][t], mb, 1.0 - fuel_frac);
      // simultaneous loaded movements limited by the fleet
      int cr = lp_.add_row("trk_cap" + suff, lp::RowSense::LE,
                           ed.existing_capacity * tp.capacity_tonnes);
      lp_.add_entry(cr, mf, travel_h);
      lp_.add_entry(cr, mb, travel_h);
      lp_.add_entry(cr, ev.fleet_new, -tp.capacity_tonnes);
    }
  }
};

}  // namespace detail

inline BuiltModel build_lp(const SystemInstance& instance, const ScenarioConfig& sc) {
  return detail::Builder(instance, sc).build();
}

}  // namespace h2plan::sysmodel
