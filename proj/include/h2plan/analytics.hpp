#pragma once

#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "h2plan/common.hpp"
#include "h2plan/csv.hpp"
#include "h2plan/lp.hpp"
#include "h2plan/sysmodel.hpp"

namespace h2plan::analytics {

using sysmodel::BuiltModel;
using sysmodel::CostCategory;
using sysmodel::Sector;

inline constexpr double kJetFuelCo2TonnePerMmbtu = 0.0703;
// last-mile distribution adder, reported for display only (never optimized)
inline constexpr double kLastMileMinEurPerKg = 0.13;
inline constexpr double kLastMileMaxEurPerKg = 0.27;

namespace detail {

// Dual of a balance row; rows dropped as trivially empty carry a zero price.
inline double row_dual(const lp::SolveResult& r, int row) {
  return row < 0 ? 0.0 : r.dual[row];
}

}  // namespace detail

// Annual cost ledger. `categories` are objective-backed: each entry is the
// product of LP cost coefficients and the optimal primal values of its
// columns, so the category sum reproduces the LP objective. The two
// variable-electricity entries are dual-priced internal transfers used by the
// LCOH assembly; they are not part of the objective.
struct CostReport {
  std::map<std::string, double> categories;
  double h2_variable_electricity = 0;
  double liquefaction_variable_electricity = 0;
  double total_h2_generated_t = 0;
  double total_h2_liquefied_t = 0;
  double objective = 0;

  double category(const std::string& name) const {
    auto it = categories.find(name);
    return it == categories.end() ? 0.0 : it->second;
  }
  double category_sum() const {
    double s = 0;
    for (const auto& [name, v] : categories) s += v;
    return s;
  }
};

inline CostReport cost_report(const BuiltModel& built, const lp::SolveResult& r) {
  const auto& map = built.map;
  const auto& inst = built.instance;
  CostReport out;
  out.objective = r.objective;

  for (int j = 0; j < static_cast<int>(map.col_costs.size()); ++j)
    for (const auto& [cat, unit] : map.col_costs[j])
      out.categories[sysmodel::cost_category_name(cat)] += unit * r.primal[j];

  for (const auto& [zk, cols] : map.prod)
    for (int t = 0; t < map.steps; ++t)
      out.total_h2_generated_t += map.step_weight[t] * r.primal[cols[t]];
  for (const auto& [zk, cols] : map.liq)
    for (int t = 0; t < map.steps; ++t)
      out.total_h2_liquefied_t += map.step_weight[t] * r.primal[cols[t]];

  // Electricity consumed by the hydrogen system, priced at the power-balance
  // dual of the hour of consumption. Those duals are annual (they carry the
  // period weight), so no extra weighting here.
  for (const auto& [zk, cols] : map.prod) {
    const auto* k = inst.tech(zk.second);
    double use = k->elec_use_mwh_per_t();
    if (use <= 0) continue;
    const auto& pb = map.power_balance.at(zk.first);
    for (int t = 0; t < map.steps; ++t)
      out.h2_variable_electricity +=
          detail::row_dual(r, pb[t]) * use * r.primal[cols[t]];
  }
  for (const auto& [zk, cols] : map.charge) {
    const auto* k = inst.tech(zk.second);
    if (k->sector != Sector::h2_storage) continue;
    double use = k->elec_use_mwh_per_t();
    if (use <= 0) continue;
    const auto& pb = map.power_balance.at(zk.first);
    for (int t = 0; t < map.steps; ++t)
      out.h2_variable_electricity +=
          detail::row_dual(r, pb[t]) * use * r.primal[cols[t]];
  }
  for (const auto& [zk, cols] : map.liq) {
    const auto* k = inst.tech(zk.second);
    double use = k->elec_use_mwh_per_t();
    if (use <= 0) continue;
    const auto& pb = map.power_balance.at(zk.first);
    for (int t = 0; t < map.steps; ++t)
      out.liquefaction_variable_electricity +=
          detail::row_dual(r, pb[t]) * use * r.primal[cols[t]];
  }
  return out;
}

// Levelized cost of hydrogen: gaseous product at the plant/network level,
// liquid product adding the liquefaction chain. Production VOM is folded
// into the production term.
struct Lcoh {
  double gaseous_eur_per_kg = 0;
  double liquid_eur_per_kg = 0;
  bool liquid_defined = false;
};

inline double lcoh_gaseous(const CostReport& c) {
  if (c.total_h2_generated_t <= 0)
    throw DivisionDomain("lcoh: no hydrogen generated");
  double numerator = c.category("h2_production_fixed") +
                     c.category("h2_production_vom") + c.category("h2_fuel") +
                     c.category("h2_storage_fixed") +
                     c.category("h2_pipeline_fixed") + c.h2_variable_electricity;
  return numerator / (c.total_h2_generated_t * 1000.0);
}

inline double lcoh_liquid(const CostReport& c) {
  double gaseous = lcoh_gaseous(c);
  if (c.total_h2_liquefied_t <= 0)
    throw DivisionDomain("lcoh: no hydrogen liquefied");
  double adder = c.category("liquefaction_fixed") +
                 c.liquefaction_variable_electricity +
                 c.category("h2_liquid_storage_fixed") +
                 c.category("truck_fixed") + c.category("truck_opex");
  return gaseous + adder / (c.total_h2_liquefied_t * 1000.0);
}

inline Lcoh lcoh(const CostReport& c) {
  Lcoh out;
  out.gaseous_eur_per_kg = lcoh_gaseous(c);
  if (c.total_h2_liquefied_t > 0) {
    out.liquid_eur_per_kg = lcoh_liquid(c);
    out.liquid_defined = true;
  }
  return out;
}

struct AbatementCost {
  double eur_per_tonne = 0;
  bool binding = false;  // false when the cap row is absent or slack
};

// Marginal abatement cost: the emissions-cap shadow price, sign-normalized
// to nonnegative EUR per tonne.
inline AbatementCost abatement_cost(const BuiltModel& built, const lp::SolveResult& r,
                                    double tol = 1e-9) {
  AbatementCost out;
  if (built.map.co2_row < 0) return out;
  double d = r.dual[built.map.co2_row];
  out.eur_per_tonne = std::abs(d);
  out.binding = std::abs(d) > tol;
  if (!out.binding) out.eur_per_tonne = 0;
  return out;
}

struct EmissionsReport {
  double direct_power_t = 0;   // combustion CO2 in the power sector
  double direct_h2_t = 0;      // combustion CO2 in hydrogen production
  double indirect_electrolysis_t = 0;  // average-intensity method
  double aviation_share = 0;           // liquid aviation demand / total H2 demand
  double aviation_attributed_t = 0;
  double counterfactual_jet_t = 0;  // CO2 the replaced jet fuel would emit
  double cap_dual_eur_per_t = 0;

  double direct_total_t() const { return direct_power_t + direct_h2_t; }
};

// Jet fuel displaced by a tonne of aviation hydrogen, in MMBTU: the H2
// conversion is energy-equivalent plus the 10% retrofit uplift, inverted.
inline double displaced_jet_mmbtu_per_h2_tonne() {
  return 1000.0 * 120.0 / 1.10 / kMjPerMmbtu;
}

inline EmissionsReport emissions_report(const BuiltModel& built,
                                        const lp::SolveResult& r,
                                        double jet_co2_t_per_mmbtu = kJetFuelCo2TonnePerMmbtu) {
  const auto& map = built.map;
  const auto& inst = built.instance;
  EmissionsReport out;

  std::map<std::string, double> zone_power_co2, zone_power_mwh;
  for (const auto& [zk, cols] : map.gen) {
    const auto* k = inst.tech(zk.second);
    bool burns = !k->fuel.empty() && k->fuel != "electricity";
    for (int t = 0; t < map.steps; ++t) {
      double mwh = map.step_weight[t] * r.primal[cols[t]];
      zone_power_mwh[zk.first] += mwh;
      if (burns) {
        double co2 = mwh * k->heat_rate * k->co2_intensity * (1.0 - k->capture_rate);
        zone_power_co2[zk.first] += co2;
        out.direct_power_t += co2;
      }
    }
  }
  for (const auto& [zk, cols] : map.prod) {
    const auto* k = inst.tech(zk.second);
    double fuel_use = k->fuel_mmbtu_per_t();
    if (fuel_use > 0)
      for (int t = 0; t < map.steps; ++t)
        out.direct_h2_t += map.step_weight[t] * r.primal[cols[t]] * fuel_use *
                           k->co2_intensity * (1.0 - k->capture_rate);
  }

  // indirect: electrolyzer consumption priced at the zonal average intensity
  for (const auto& [zk, cols] : map.prod) {
    const auto* k = inst.tech(zk.second);
    if (k->fuel != "electricity") continue;
    double use = k->elec_use_mwh_per_t();
    double gen = zone_power_mwh.count(zk.first) ? zone_power_mwh[zk.first] : 0.0;
    if (gen <= 0) continue;
    double intensity = zone_power_co2[zk.first] / gen;  // t/MWh
    for (int t = 0; t < map.steps; ++t)
      out.indirect_electrolysis_t +=
          map.step_weight[t] * r.primal[cols[t]] * use * intensity;
  }

  double aviation_t = 0, total_demand_t = 0;
  for (const auto& [zone, s] : inst.demand_liq)
    for (int t = 0; t < map.steps; ++t) aviation_t += map.step_weight[t] * s[t];
  total_demand_t = aviation_t;
  for (const auto& [zone, s] : inst.demand_gas)
    for (int t = 0; t < map.steps; ++t) total_demand_t += map.step_weight[t] * s[t];
  if (total_demand_t > 0) {
    out.aviation_share = aviation_t / total_demand_t;
    out.aviation_attributed_t =
        out.aviation_share * (out.direct_h2_t + out.indirect_electrolysis_t);
  }
  out.counterfactual_jet_t =
      aviation_t * displaced_jet_mmbtu_per_h2_tonne() * jet_co2_t_per_mmbtu;
  out.cap_dual_eur_per_t = abatement_cost(built, r).eur_per_tonne;
  return out;
}

// ---------------------------------------------------------------------------
// Summary tables (Fig. 3/4/5-style outputs), byte-deterministic.

inline void summarize(const BuiltModel& built, const lp::SolveResult& r,
                      const std::string& out_dir) {
  const auto& map = built.map;
  const auto& inst = built.instance;

  {
    csv::Writer w(out_dir + "/capacity.csv");
    w.row({"zone", "tech", "sector", "existing", "built", "retired", "total",
           "charge_total"});
    for (const auto& [zk, cap] : map.cap_total) {
      const auto* k = inst.tech(zk.second);
      double charge = map.charge_cap.count(zk) ? r.primal[map.charge_cap.at(zk)] : 0.0;
      w.row({zk.first, zk.second, sysmodel::sector_name(k->sector),
             csv::num(inst.existing(zk.first, zk.second)),
             csv::num(r.primal[map.cap_new.at(zk)]),
             csv::num(r.primal[map.cap_ret.at(zk)]), csv::num(r.primal[cap]),
             csv::num(charge)});
    }
  }
  {
    csv::Writer w(out_dir + "/generation.csv");
    w.row({"zone", "tech", "sector", "annual_output"});
    auto dump = [&](const std::map<sysmodel::ZoneTech, std::vector<int>>& group) {
      for (const auto& [zk, cols] : group) {
        const auto* k = inst.tech(zk.second);
        double total = 0;
        for (int t = 0; t < map.steps; ++t)
          total += map.step_weight[t] * r.primal[cols[t]];
        w.row({zk.first, zk.second, sysmodel::sector_name(k->sector), csv::num(total)});
      }
    };
    dump(map.gen);   // MWh
    dump(map.prod);  // tonnes
    dump(map.liq);   // tonnes liquefied
  }
  {
    csv::Writer w(out_dir + "/storage.csv");
    w.row({"zone", "tech", "energy_capacity", "charge_capacity", "annual_charge",
           "annual_discharge"});
    for (const auto& [zk, cols] : map.state) {
      double chg = 0, dis = 0;
      for (int t = 0; t < map.steps; ++t) {
        chg += map.step_weight[t] * r.primal[map.charge.at(zk)[t]];
        dis += map.step_weight[t] * r.primal[map.discharge.at(zk)[t]];
      }
      w.row({zk.first, zk.second, csv::num(r.primal[map.cap_total.at(zk)]),
             csv::num(r.primal[map.charge_cap.at(zk)]), csv::num(chg), csv::num(dis)});
    }
  }
  {
    csv::Writer w(out_dir + "/transmission.csv");
    w.row({"edge", "kind", "from", "to", "existing", "built", "annual_fwd",
           "annual_bwd"});
    for (size_t e = 0; e < map.edges.size(); ++e) {
      const auto& ed = inst.edges[e];
      const auto& ev = map.edges[e];
      const char* kind = ed.kind == sysmodel::EdgeKind::hvac      ? "hvac"
                         : ed.kind == sysmodel::EdgeKind::hvdc    ? "hvdc"
                         : ed.kind == sysmodel::EdgeKind::pipeline ? "pipeline"
                                                                   : "truck_route";
      double fwd = 0, bwd = 0;
      const auto& fcols = ev.fwd.empty() ? ev.move_fwd : ev.fwd;
      const auto& bcols = ev.bwd.empty() ? ev.move_bwd : ev.bwd;
      for (int t = 0; t < map.steps; ++t) {
        fwd += map.step_weight[t] * r.primal[fcols[t]];
        bwd += map.step_weight[t] * r.primal[bcols[t]];
      }
      int capcol = ev.cap_new >= 0 ? ev.cap_new : ev.fleet_new;
      w.row({"e" + std::to_string(e), kind, ed.from_zone, ed.to_zone,
             csv::num(ed.existing_capacity), csv::num(r.primal[capcol]),
             csv::num(fwd), csv::num(bwd)});
    }
  }

  // zonal demand-weighted average electricity price (dual / period weight)
  std::map<std::string, double> avg_price;
  for (const auto& z : inst.zones) {
    double wsum = 0, psum = 0;
    const auto& pb = map.power_balance.at(z);
    auto dit = inst.demand_elec.find(z);
    for (int t = 0; t < map.steps; ++t) {
      double load = dit == inst.demand_elec.end()
                        ? 0.0
                        : map.step_weight[t] * dit->second[t];
      if (pb[t] < 0) continue;
      double hourly_price = r.dual[pb[t]] / map.step_weight[t];
      psum += hourly_price * load;
      wsum += load;
    }
    avg_price[z] = wsum > 0 ? psum / wsum : 0.0;
  }
  {
    csv::Writer w(out_dir + "/prices.csv");
    w.row({"zone", "avg_elec_price_eur_mwh"});
    for (const auto& z : inst.zones) w.row({z, csv::num(avg_price[z])});
  }
  {
    auto c = cost_report(built, r);
    csv::Writer w(out_dir + "/costs.csv");
    w.row({"category", "annual_eur"});
    for (const auto& [name, v] : c.categories) w.row({name, csv::num(v)});
  }

  // Fig. 4-style zonal bubbles
  {
    csv::Writer w(out_dir + "/zones.geojson");
    auto& os = w.stream();
    os << "{\"type\":\"FeatureCollection\",\"features\":[";
    bool first = true;
    for (const auto& z : inst.zones) {
      double prod = 0;
      for (const auto& [zk, cols] : map.prod)
        if (zk.first == z)
          for (int t = 0; t < map.steps; ++t)
            prod += map.step_weight[t] * r.primal[cols[t]];
      double dem = 0;
      for (const auto* m : {&inst.demand_gas, &inst.demand_liq})
        if (m->count(z))
          for (int t = 0; t < map.steps; ++t)
            dem += map.step_weight[t] * m->at(z)[t];
      double gen = 0;
      for (const auto& [zk, cols] : map.gen)
        if (zk.first == z)
          for (int t = 0; t < map.steps; ++t)
            gen += map.step_weight[t] * r.primal[cols[t]];
      double lat = 0, lon = 0;
      if (auto it = inst.zone_latlon.find(z); it != inst.zone_latlon.end()) {
        lat = it->second.first;
        lon = it->second.second;
      }
      if (!first) os << ',';
      first = false;
      os << "{\"type\":\"Feature\",\"geometry\":{\"type\":\"Point\",\"coordinates\":["
         << csv::num(lon) << ',' << csv::num(lat) << "]},\"properties\":{"
         << "\"zone_id\":\"" << z << "\",\"h2_prod_t\":" << csv::num(prod)
         << ",\"h2_demand_t\":" << csv::num(dem)
         << ",\"elec_gen_mwh\":" << csv::num(gen)
         << ",\"price_eur_mwh\":" << csv::num(avg_price[z]) << "}}";
    }
    os << "]}\n";
  }
}

}  // namespace h2plan::analytics
