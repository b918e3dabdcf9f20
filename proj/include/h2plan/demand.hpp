#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "h2plan/common.hpp"
#include "h2plan/csv.hpp"
#include "h2plan/geo.hpp"

namespace h2plan::demand {

inline constexpr double kAllocationCutoffKm = 231.0;
inline constexpr double kRetrofitMassUplift = 1.10;  // heavier-aircraft allowance
inline constexpr double kMaxRangeNmi = 1000.0;
inline constexpr int kMaxSeats = 220;

struct FlightRecord {
  std::string origin_airport;
  std::string dest_airport;
  double distance_nmi = 0;
  int seats = 0;
  double departures_per_day = 0;
  double jet_fuel_burn_per_flight_kg = 0;
};

struct Airport {
  std::string code;
  double latitude = 0;
  double longitude = 0;
  std::string country;
};

struct Zone {
  std::string zone_id;
  double latitude = 0;
  double longitude = 0;
  std::string country;
};

enum class Carrier { electricity, h2_gas, h2_liquid };

inline const char* carrier_name(Carrier c) {
  switch (c) {
    case Carrier::electricity: return "electricity";
    case Carrier::h2_gas: return "h2_gas";
    case Carrier::h2_liquid: return "h2_liquid";
  }
  return "?";
}

// Zonal hourly demand series. Electricity in MWh, hydrogen in tonnes.
struct DemandProfile {
  std::string zone_id;
  Carrier carrier;
  std::vector<double> series;  // 8760 values, all >= 0
};

// Months assigned to the "summer" half of the base-demand split (1-based).
struct SeasonConfig {
  std::vector<int> summer_months = {5, 6, 7, 8, 9, 10};
};

inline const int kMonthDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

// Month (1..12) containing a given hour of the 365-day modeling year.
inline int month_of_hour(int hour) {
  int day = hour / 24;
  for (int m = 0; m < 12; ++m) {
    if (day < kMonthDays[m]) return m + 1;
    day -= kMonthDays[m];
  }
  throw ValidationError("hour index out of range");
}

// Keeps the regional segment convertible to hydrogen: under 1000 nmi,
// at most 220 seats, departing from one of the study countries.
inline std::vector<FlightRecord> filter_flights(
    const std::vector<FlightRecord>& records,
    const std::map<std::string, Airport>& airports,
    const std::vector<std::string>& countries) {
  std::vector<FlightRecord> out;
  for (const auto& r : records) {
    if (!(r.distance_nmi < kMaxRangeNmi)) continue;
    if (r.seats > kMaxSeats) continue;
    auto it = airports.find(r.origin_airport);
    if (it == airports.end()) continue;
    if (std::find(countries.begin(), countries.end(), it->second.country) ==
        countries.end())
      continue;
    out.push_back(r);
  }
  return out;
}

// Jet fuel energy (MJ) to hydrogen mass (kg): energy-equivalent hydrogen plus
// a 10% uplift for the heavier retrofit aircraft.
inline double jet_fuel_to_h2_kg(double fuel_energy_mj) {
  if (fuel_energy_mj < 0) throw ValidationError("jet_fuel_to_h2: negative energy");
  return fuel_energy_mj / 120.0 * kRetrofitMassUplift;
}

// Synthetic fallback fuel-burn estimator for test fixtures only; real runs
// take per-flight fuel burn from the input data.
inline double synthetic_fuel_burn_kg(double distance_nmi, int seats,
                                     double coefficient = 0.035) {
  return distance_nmi * seats * coefficient;
}

struct Allocation {
  std::string airport;
  std::string zone_id;  // empty when out of scope
  double distance_km = 0;
  bool in_scope = false;
};

// Nearest zone by great-circle distance; airports beyond the cutoff are
// reported out-of-scope rather than dropped silently. Ties go to the lowest
// zone_id.
inline std::vector<Allocation> allocate_airports(const std::vector<Airport>& airports,
                                                 const std::vector<Zone>& zones) {
  if (zones.empty()) throw ValidationError("allocate_airports: no zones");
  std::vector<Allocation> out;
  out.reserve(airports.size());
  for (const auto& a : airports) {
    Allocation alloc;
    alloc.airport = a.code;
    double best = -1;
    for (const auto& z : zones) {
      double d = geo::haversine_km(a.latitude, a.longitude, z.latitude, z.longitude);
      if (best < 0 || d < best - 1e-9 ||
          (std::abs(d - best) <= 1e-9 && z.zone_id < alloc.zone_id)) {
        best = d;
        alloc.zone_id = z.zone_id;
      }
    }
    alloc.distance_km = best;
    alloc.in_scope = best <= kAllocationCutoffKm;
    if (!alloc.in_scope) alloc.zone_id.clear();
    out.push_back(alloc);
  }
  return out;
}

// Distance below which a fraction q of the in-scope airports fall
// (inclusive empirical quantile over allocation distances).
inline double allocation_distance_quantile(const std::vector<Allocation>& alloc,
                                           double q) {
  if (q < 0 || q > 1) throw ValidationError("quantile: q outside [0,1]");
  std::vector<double> d;
  for (const auto& a : alloc)
    if (a.in_scope) d.push_back(a.distance_km);
  if (d.empty()) throw ValidationError("quantile: no in-scope airports");
  std::sort(d.begin(), d.end());
  size_t idx = static_cast<size_t>(std::ceil(q * d.size()));
  if (idx > 0) --idx;
  return d[idx];
}

struct ProfileInputs {
  std::vector<FlightRecord> flights;          // already filtered
  std::vector<Allocation> allocation;
  std::vector<Zone> zones;
  std::map<std::string, double> base_demand_by_country;   // tonnes/yr gaseous H2
  std::map<std::string, std::vector<double>> elec_load_by_zone;  // raw hourly MWh
  std::map<std::string, double> elec_2040_by_country_twh;  // scaling targets
  SeasonConfig seasons;
};

struct ProfileSet {
  std::vector<DemandProfile> profiles;
  double aviation_total_tonnes = 0;  // annual, in-scope only
  double out_of_scope_tonnes = 0;    // dropped with the allocation report

  const DemandProfile* find(const std::string& zone, Carrier c) const {
    for (const auto& p : profiles)
      if (p.zone_id == zone && p.carrier == c) return &p;
    return nullptr;
  }
};

inline ProfileSet build_profiles(const ProfileInputs& in) {
  ProfileSet out;
  const int H = static_cast<int>(kHoursPerYear);

  std::map<std::string, const Allocation*> alloc_by_airport;
  for (const auto& a : in.allocation) alloc_by_airport[a.airport] = &a;

  // Aviation liquid H2: per-zone daily totals spread evenly over each day.
  std::map<std::string, double> daily_kg_by_zone;
  for (const auto& f : in.flights) {
    auto it = alloc_by_airport.find(f.origin_airport);
    if (it == alloc_by_airport.end())
      throw MissingAllocation("no allocation for airport " + f.origin_airport);
    double kg_per_day = jet_fuel_to_h2_kg(f.jet_fuel_burn_per_flight_kg *
                                          kJetFuelMjPerKg) *
                        f.departures_per_day;
    if (!it->second->in_scope) {
      out.out_of_scope_tonnes += kg_per_day * kDaysPerYear / 1000.0;
      continue;
    }
    daily_kg_by_zone[it->second->zone_id] += kg_per_day;
  }

  for (const auto& z : in.zones) {
    DemandProfile p;
    p.zone_id = z.zone_id;
    p.carrier = Carrier::h2_liquid;
    double hourly_t = 0;
    if (auto it = daily_kg_by_zone.find(z.zone_id); it != daily_kg_by_zone.end())
      hourly_t = it->second / 24.0 / 1000.0;
    p.series.assign(H, hourly_t);
    out.aviation_total_tonnes += hourly_t * H;
    out.profiles.push_back(std::move(p));
  }

  // Base gaseous H2: country total split by zonal annual electric load, then
  // 45% of annual mass uniform over summer hours and 55% over winter hours.
  std::vector<bool> is_summer(H);
  int summer_hours = 0;
  for (int h = 0; h < H; ++h) {
    int m = month_of_hour(h);
    is_summer[h] = std::find(in.seasons.summer_months.begin(),
                             in.seasons.summer_months.end(),
                             m) != in.seasons.summer_months.end();
    if (is_summer[h]) ++summer_hours;
  }
  int winter_hours = H - summer_hours;

  std::map<std::string, double> country_load;
  std::map<std::string, double> zone_load;
  for (const auto& z : in.zones) {
    auto it = in.elec_load_by_zone.find(z.zone_id);
    if (it == in.elec_load_by_zone.end())
      throw ValidationError("no electric load series for zone " + z.zone_id);
    if (it->second.size() != static_cast<size_t>(H))
      throw ValidationError("electric load series for zone " + z.zone_id +
                            " is not 8760 hours");
    double annual = 0;
    for (double v : it->second) annual += v;
    zone_load[z.zone_id] = annual;
    country_load[z.country] += annual;
  }

  for (const auto& z : in.zones) {
    DemandProfile p;
    p.zone_id = z.zone_id;
    p.carrier = Carrier::h2_gas;
    p.series.assign(H, 0.0);
    double country_total = 0;
    if (auto it = in.base_demand_by_country.find(z.country);
        it != in.base_demand_by_country.end())
      country_total = it->second;
    if (country_total > 0 && country_load[z.country] > 0) {
      double zone_total = country_total * zone_load[z.zone_id] / country_load[z.country];
      double summer_per_hour = 0.45 * zone_total / summer_hours;
      double winter_per_hour = 0.55 * zone_total / winter_hours;
      for (int h = 0; h < H; ++h)
        p.series[h] = is_summer[h] ? summer_per_hour : winter_per_hour;
    }
    out.profiles.push_back(std::move(p));
  }

  // Electricity: pass raw profiles through, scaled to 2040 country totals.
  std::map<std::string, double> scale_by_country;
  for (const auto& [country, twh] : in.elec_2040_by_country_twh) {
    auto it = country_load.find(country);
    if (it != country_load.end() && it->second > 0)
      scale_by_country[country] = twh * 1e6 / it->second;
  }
  for (const auto& z : in.zones) {
    DemandProfile p;
    p.zone_id = z.zone_id;
    p.carrier = Carrier::electricity;
    p.series = in.elec_load_by_zone.at(z.zone_id);
    double s = 1.0;
    if (auto it = scale_by_country.find(z.country); it != scale_by_country.end())
      s = it->second;
    for (double& v : p.series) v *= s;
    out.profiles.push_back(std::move(p));
  }

  return out;
}

inline void write_allocation_csv(const std::string& path,
                                 const std::vector<Allocation>& alloc) {
  csv::Writer w(path);
  w.row({"airport", "zone", "km", "in_scope"});
  for (const auto& a : alloc)
    w.row({a.airport, a.zone_id, csv::num(a.distance_km), a.in_scope ? "1" : "0"});
}

inline void write_profiles_csv(const std::string& dir, const ProfileSet& set) {
  for (Carrier c : {Carrier::electricity, Carrier::h2_gas, Carrier::h2_liquid}) {
    std::vector<const DemandProfile*> cols;
    for (const auto& p : set.profiles)
      if (p.carrier == c) cols.push_back(&p);
    if (cols.empty()) continue;
    csv::Writer w(dir + "/demand_" + carrier_name(c) + ".csv");
    std::vector<std::string> header = {"hour"};
    for (auto* p : cols) header.push_back(p->zone_id);
    w.row(header);
    for (int h = 0; h < static_cast<int>(kHoursPerYear); ++h) {
      std::vector<std::string> row = {std::to_string(h)};
      for (auto* p : cols) row.push_back(csv::num(p->series[h]));
      w.row(row);
    }
  }
}

}  // namespace h2plan::demand
