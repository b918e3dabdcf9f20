#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "h2plan/common.hpp"
#include "h2plan/csv.hpp"
#include "h2plan/demand.hpp"
#include "h2plan/sysmodel.hpp"
#include "h2plan/tdr.hpp"

namespace h2plan::instance_io {

// Loads a SystemInstance from a directory of CSVs. Input columns keep the
// native units of the source data tables (EUR/kW, EUR/kWh2, EUR/tonne,
// MEUR per t/h) and are converted to model units here; see docs/config.md
// for the full schema.

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// capacity-unit conversion factors from the raw capex columns
inline double capex_scale(sysmodel::Sector s) {
  switch (s) {
    case sysmodel::Sector::power:
    case sysmodel::Sector::h2_gas_to_power:
      return 1000.0;  // EUR/kW -> EUR/MW
    case sysmodel::Sector::h2_production:
    case sysmodel::Sector::liquefier:
      return kH2LhvMwhPerTonne * 1000.0;  // EUR/kW_H2 -> EUR/(t/h)
    case sysmodel::Sector::h2_storage:
      return 1.0;  // EUR/tonne
    case sysmodel::Sector::power_storage:
      return 1000.0;  // EUR/kWh -> EUR/MWh (energy capacity)
  }
  return 1.0;
}

inline double capex_charge_scale(sysmodel::Sector s) {
  switch (s) {
    case sysmodel::Sector::h2_storage:
      return 1e6;  // MEUR per t/h -> EUR per t/h
    case sysmodel::Sector::power_storage:
      return 1000.0;  // EUR/kW -> EUR/MW
    default:
      return 0.0;
  }
}

inline std::vector<sysmodel::TechnologySpec> load_technologies(const std::string& path) {
  auto t = csv::read_file(path);
  std::vector<sysmodel::TechnologySpec> out;
  int c_name = t.col("name"), c_sector = t.col("sector"),
      c_life = t.col("lifetime_yr"), c_capex = t.col("capex"),
      c_capex2 = t.col("capex_charge"), c_fom = t.col("fom"), c_vom = t.col("vom"),
      c_hr = t.col("heat_rate_mmbtu_per_mwh"), c_eff = t.col("efficiency"),
      c_fuel = t.col("fuel"), c_co2 = t.col("co2_t_per_mmbtu"),
      c_capture = t.col("capture_rate"), c_elec = t.col("electricity_use_kwh_per_kg"),
      c_boiloff = t.col("boiloff"), c_exp = t.col("expandable"),
      c_chgeff = t.col("charge_efficiency"), c_liquid = t.col("stores_liquid"),
      c_nuclear = t.col("is_nuclear"), c_zones = t.col("zone_whitelist"),
      c_cf = t.col("cf_profile");
  for (const auto& row : t.rows) {
    sysmodel::TechnologySpec k;
    k.name = row[c_name];
    k.sector = sysmodel::sector_from_string(row[c_sector]);
    k.lifetime_yr = csv::to_double(row[c_life], k.name);
    k.capex = csv::to_double(row[c_capex], k.name) * capex_scale(k.sector);
    k.capex_charge =
        csv::to_double(row[c_capex2], k.name) * capex_charge_scale(k.sector);
    // FOM is quoted per raw capacity unit, same as capex
    k.fom = csv::to_double(row[c_fom], k.name) * capex_scale(k.sector);
    k.vom = csv::to_double(row[c_vom], k.name);
    k.heat_rate = csv::to_double(row[c_hr], k.name);
    k.efficiency = csv::to_double(row[c_eff], k.name);
    k.fuel = row[c_fuel];
    k.co2_intensity = csv::to_double(row[c_co2], k.name);
    k.capture_rate = csv::to_double(row[c_capture], k.name);
    k.electricity_use = csv::to_double(row[c_elec], k.name);  // kWh/kg == MWh/t
    k.boiloff = csv::to_double(row[c_boiloff], k.name);
    k.expandable = csv::to_bool(row[c_exp], k.name);
    k.charge_efficiency = csv::to_double(row[c_chgeff], k.name);
    k.stores_liquid = csv::to_bool(row[c_liquid], k.name);
    k.is_nuclear = csv::to_bool(row[c_nuclear], k.name);
    k.zone_whitelist = split(row[c_zones], ';');
    k.cf_profile = row[c_cf];
    out.push_back(std::move(k));
  }
  return out;
}

inline std::vector<sysmodel::NetworkEdge> load_edges(const std::string& path) {
  auto t = csv::read_file(path);
  std::vector<sysmodel::NetworkEdge> out;
  for (const auto& row : t.rows) {
    sysmodel::NetworkEdge e;
    e.kind = sysmodel::edge_kind_from_string(row[t.col("kind")]);
    e.from_zone = row[t.col("from_zone")];
    e.to_zone = row[t.col("to_zone")];
    e.length_km = csv::to_double(row[t.col("length_km")], path);
    e.existing_capacity = csv::to_double(row[t.col("existing_capacity")], path);
    std::string mx = row[t.col("max_expansion")];
    e.max_expansion = mx == "inf" ? lp::kInf : csv::to_double(mx, path);
    e.capex_per_unit = csv::to_double(row[t.col("capex_per_unit")], path);
    e.lifetime_yr = csv::to_double(row[t.col("lifetime_yr")], path);
    e.loss_pct_per_100km = csv::to_double(row[t.col("loss_pct_per_100km")], path);
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<demand::Zone> load_zones(const std::string& path) {
  auto t = csv::read_file(path);
  std::vector<demand::Zone> out;
  for (const auto& row : t.rows)
    out.push_back({row[t.col("zone_id")],
                   csv::to_double(row[t.col("lat")], path),
                   csv::to_double(row[t.col("lon")], path),
                   row[t.col("country")]});
  return out;
}

inline std::vector<demand::Airport> load_airports(const std::string& path) {
  auto t = csv::read_file(path);
  std::vector<demand::Airport> out;
  for (const auto& row : t.rows)
    out.push_back({row[t.col("code")], csv::to_double(row[t.col("lat")], path),
                   csv::to_double(row[t.col("lon")], path),
                   row[t.col("country")]});
  return out;
}

inline std::vector<demand::FlightRecord> load_flights(const std::string& path) {
  auto t = csv::read_file(path);
  std::vector<demand::FlightRecord> out;
  for (const auto& row : t.rows)
    out.push_back({row[t.col("origin_airport")], row[t.col("dest_airport")],
                   csv::to_double(row[t.col("distance_nmi")], path),
                   static_cast<int>(csv::to_double(row[t.col("seats")], path)),
                   csv::to_double(row[t.col("departures_per_day")], path),
                   csv::to_double(row[t.col("jet_fuel_burn_per_flight_kg")], path)});
  return out;
}

// hour-indexed wide table: first column "hour", one column per key
inline std::map<std::string, std::vector<double>> load_hourly(const std::string& path) {
  auto t = csv::read_file(path);
  std::map<std::string, std::vector<double>> out;
  for (size_t c = 1; c < t.header.size(); ++c)
    out[t.header[c]] = {};
  for (const auto& row : t.rows)
    for (size_t c = 1; c < t.header.size(); ++c)
      out[t.header[c]].push_back(csv::to_double(row[c], path));
  return out;
}

struct CountryDemand {
  double base_h2_tonnes_per_year = 0;
  double elec_2040_twh = 0;
};

inline std::map<std::string, CountryDemand> load_country_demand(const std::string& path) {
  auto t = csv::read_file(path);
  std::map<std::string, CountryDemand> out;
  for (const auto& row : t.rows)
    out[row[t.col("country")]] = {
        csv::to_double(row[t.col("base_h2_tonnes_per_year")], path),
        csv::to_double(row[t.col("elec_2040_twh")], path)};
  return out;
}

inline std::map<std::string, sysmodel::FuelSpec> load_fuels(const std::string& path) {
  auto t = csv::read_file(path);
  std::map<std::string, sysmodel::FuelSpec> out;
  for (const auto& row : t.rows)
    out[row[t.col("fuel")]] = {csv::to_double(row[t.col("price_eur_per_mmbtu")], path),
                               csv::to_double(row[t.col("co2_t_per_mmbtu")], path)};
  return out;
}

// -------------------------------------------------------------------------
// Scenario preset file: plain-text key = value with [Name] section headers.

inline std::map<std::string, sysmodel::ScenarioConfig> load_presets(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open preset file " + path);
  std::map<std::string, sysmodel::ScenarioConfig> out;
  sysmodel::ScenarioConfig* cur = nullptr;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.front() == '[' && s.back() == ']') {
      std::string name = trim(s.substr(1, s.size() - 2));
      cur = &out[name];
      cur->name = name;
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos || !cur)
      throw ValidationError("preset file line " + std::to_string(lineno) +
                            ": expected 'key = value' inside a [section]");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    auto as_bool = [&] { return csv::to_bool(value, key); };
    if (key == "aviation_demand_on") cur->aviation_demand_on = as_bool();
    else if (key == "nuclear_expansion") cur->nuclear_expansion = as_bool();
    else if (key == "ccs_allowed") cur->ccs_allowed = as_bool();
    else if (key == "ccs_zones") cur->ccs_zone_whitelist = split(value, ';');
    else if (key == "pipelines_allowed") cur->pipelines_allowed = as_bool();
    else if (key == "trucks_allowed") cur->trucks_allowed = as_bool();
    else if (key == "emissions_cap_tonnes")
      cur->emissions_cap_tonnes =
          value == "inf" ? lp::kInf : csv::to_double(value, key);
    else
      throw ValidationError("preset file line " + std::to_string(lineno) +
                            ": unknown key '" + key + "'");
  }
  return out;
}

inline sysmodel::ScenarioConfig preset(
    const std::map<std::string, sysmodel::ScenarioConfig>& presets,
    const std::string& name) {
  auto it = presets.find(name);
  if (it == presets.end()) throw UnknownPreset("unknown preset '" + name + "'");
  return it->second;
}

// -------------------------------------------------------------------------

struct DataSet {
  std::vector<demand::Zone> zones;
  std::vector<demand::Airport> airports;
  std::vector<demand::FlightRecord> flights;
  std::vector<sysmodel::TechnologySpec> technologies;
  std::vector<sysmodel::NetworkEdge> edges;
  std::map<std::string, CountryDemand> country_demand;
  std::map<std::string, sysmodel::FuelSpec> fuels;
  std::map<std::string, std::vector<double>> elec_load;  // zone -> 8760
  std::map<std::string, std::vector<double>> vre_cf;     // "zone:tech" -> 8760
  std::map<std::pair<std::string, std::string>, double> existing_capacity;
  std::map<std::pair<std::string, std::string>, double> existing_charge;
  sysmodel::TruckParams trucks;
  std::map<std::string, sysmodel::ScenarioConfig> presets;
  double discount_rate = 0.04;
};

inline DataSet load_dataset(const std::string& dir) {
  namespace fs = std::filesystem;
  auto p = [&](const std::string& f) { return (fs::path(dir) / f).string(); };
  DataSet d;
  d.zones = load_zones(p("zones.csv"));
  d.airports = load_airports(p("airports.csv"));
  d.flights = load_flights(p("flights.csv"));
  d.technologies = load_technologies(p("technologies.csv"));
  d.edges = load_edges(p("edges.csv"));
  d.country_demand = load_country_demand(p("country_demand.csv"));
  d.fuels = load_fuels(p("fuels.csv"));
  d.elec_load = load_hourly(p("elec_load.csv"));
  d.vre_cf = load_hourly(p("vre_cf.csv"));
  d.presets = load_presets(p("presets.cfg"));

  auto cap = csv::read_file(p("existing_capacity.csv"));
  for (const auto& row : cap.rows) {
    std::pair<std::string, std::string> key{row[cap.col("zone_id")],
                                            row[cap.col("tech")]};
    d.existing_capacity[key] = csv::to_double(row[cap.col("capacity")], "capacity");
    d.existing_charge[key] =
        csv::to_double(row[cap.col("charge_capacity")], "charge_capacity");
  }
  auto trucks = csv::read_file(p("trucks.csv"));
  if (trucks.rows.size() != 1)
    throw ValidationError("trucks.csv must have exactly one row");
  const auto& tr = trucks.rows[0];
  d.trucks = {csv::to_double(tr[trucks.col("capacity_tonnes")], "trucks"),
              csv::to_double(tr[trucks.col("speed_kmh")], "trucks"),
              csv::to_double(tr[trucks.col("opex_eur_per_km")], "trucks"),
              csv::to_double(tr[trucks.col("fuel_kg_per_km")], "trucks")};
  return d;
}

// Assembles a full SystemInstance from the raw dataset: converts flights to
// demand profiles, reduces all series to k representative days, slices the
// result into the instance. Aviation demand is always built; scenarios toggle
// it off via apply_scenario.
struct AssembledInstance {
  sysmodel::SystemInstance instance;
  std::vector<demand::Allocation> allocation;
  tdr::Reduction reduction;
  demand::ProfileSet profiles;
};

inline AssembledInstance assemble(const DataSet& d, int rep_days, uint64_t seed) {
  AssembledInstance out;

  std::vector<std::string> countries;
  for (const auto& z : d.zones)
    if (std::find(countries.begin(), countries.end(), z.country) == countries.end())
      countries.push_back(z.country);

  std::map<std::string, demand::Airport> airport_map;
  for (const auto& a : d.airports) airport_map[a.code] = a;

  demand::ProfileInputs pin;
  pin.flights = demand::filter_flights(d.flights, airport_map, countries);
  pin.zones = d.zones;
  out.allocation = demand::allocate_airports(d.airports, d.zones);
  pin.allocation = out.allocation;
  for (const auto& [country, cd] : d.country_demand) {
    pin.base_demand_by_country[country] = cd.base_h2_tonnes_per_year;
    pin.elec_2040_by_country_twh[country] = cd.elec_2040_twh;
  }
  pin.elec_load_by_zone = d.elec_load;
  out.profiles = demand::build_profiles(pin);

  // cluster all zonal series together so representative days stay coherent
  tdr::SeriesBundle bundle;
  for (const auto& p : out.profiles.profiles) {
    std::string prefix = p.carrier == demand::Carrier::electricity ? "elec:"
                         : p.carrier == demand::Carrier::h2_gas    ? "gas:"
                                                                   : "liq:";
    bundle.add(prefix + p.zone_id, p.series);
  }
  for (const auto& [key, series] : d.vre_cf) bundle.add("cf:" + key, series);
  out.reduction = tdr::reduce(bundle, rep_days, seed);

  std::map<std::string, int> series_index;
  for (size_t i = 0; i < bundle.names.size(); ++i)
    series_index[bundle.names[i]] = static_cast<int>(i);
  auto sliced = [&](const std::string& name) {
    auto it = series_index.find(name);
    if (it == series_index.end())
      throw ValidationError("assemble: missing series " + name);
    std::vector<double> s;
    for (const auto& p : out.reduction.periods)
      for (double v : p.slices[it->second]) s.push_back(v);
    return s;
  };

  sysmodel::SystemInstance& in = out.instance;
  for (const auto& z : d.zones) {
    in.zones.push_back(z.zone_id);
    in.zone_country[z.zone_id] = z.country;
    in.zone_latlon[z.zone_id] = {z.latitude, z.longitude};
    in.demand_elec[z.zone_id] = sliced("elec:" + z.zone_id);
    in.demand_gas[z.zone_id] = sliced("gas:" + z.zone_id);
    in.demand_liq[z.zone_id] = sliced("liq:" + z.zone_id);
  }
  for (const auto& [key, series] : d.vre_cf) {
    auto parts = split(key, ':');
    if (parts.size() != 2)
      throw ValidationError("vre_cf column '" + key + "' is not zone:tech");
    auto cf = sliced("cf:" + key);
    // annual-rescale in the reduction can nudge a cf slightly above 1
    for (double& v : cf) v = std::clamp(v, 0.0, 1.0);
    in.vre_cf[{parts[0], parts[1]}] = std::move(cf);
  }
  in.edges = d.edges;
  in.technologies = d.technologies;
  in.existing_capacity = d.existing_capacity;
  in.existing_charge_capacity = d.existing_charge;
  in.hours_per_period = 24;
  for (const auto& p : out.reduction.periods) in.period_weights.push_back(p.weight);
  in.fuels = d.fuels;
  in.trucks = d.trucks;
  in.discount_rate = d.discount_rate;
  return out;
}

}  // namespace h2plan::instance_io
