// Generates the bundled 3-zone toy dataset under data/toy (or argv[1]).
// Everything is a closed-form function of the hour index, so the output is
// byte-identical on every run.

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "h2plan/csv.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

double elec_load(int zone, int h) {
  double base[] = {2000, 6000, 5000};
  int day = h / 24, hod = h % 24;
  double diurnal = 1.0 + 0.15 * std::sin(2 * kPi * hod / 24.0 - kPi / 2);
  double seasonal = 1.0 + 0.10 * std::cos(2 * kPi * day / 365.0);
  return base[zone] * diurnal * seasonal;
}

double solar_cf(int zone, int h) {
  int day = h / 24, hod = h % 24;
  double sun = std::sin(kPi * (hod - 6) / 12.0);
  if (sun < 0) sun = 0;
  double seasonal = 0.7 + 0.3 * std::cos(2 * kPi * (day - 172) / 365.0);
  double site[] = {0.85, 0.80, 0.95};
  return sun * seasonal * site[zone];
}

double wind_cf(int zone, int h) {
  int day = h / 24, hod = h % 24;
  double v = 0.35 + 0.20 * std::sin(2 * kPi * day / 365.0 + zone) +
             0.15 * std::sin(2 * kPi * hod / 24.0 + 2.0 * zone);
  if (v < 0.05) v = 0.05;
  if (v > 1.0) v = 1.0;
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  using h2plan::csv::Writer;
  using h2plan::csv::num;
  std::string dir = argc > 1 ? argv[1] : "data/toy";
  std::filesystem::create_directories(dir);
  auto p = [&](const std::string& f) { return dir + "/" + f; };

  {
    Writer w(p("zones.csv"));
    w.row({"zone_id", "lat", "lon", "country"});
    w.row({"Z1", "52.0", "4.5", "NL"});
    w.row({"Z2", "52.5", "13.4", "DE"});
    w.row({"Z3", "48.8", "2.3", "FR"});
  }
  {
    Writer w(p("airports.csv"));
    w.row({"code", "lat", "lon", "country"});
    w.row({"AMS", "52.31", "4.76", "NL"});
    w.row({"BER", "52.37", "13.50", "DE"});
    w.row({"CDG", "49.01", "2.55", "FR"});
    w.row({"MUC", "48.35", "11.79", "DE"});  // beyond the allocation cutoff
    w.row({"LIS", "38.77", "-9.13", "PT"});  // outside the study countries
  }
  {
    Writer w(p("flights.csv"));
    w.row({"origin_airport", "dest_airport", "distance_nmi", "seats",
           "departures_per_day", "jet_fuel_burn_per_flight_kg"});
    w.row({"AMS", "BER", "310", "150", "6", "1600"});
    w.row({"AMS", "CDG", "230", "180", "8", "1200"});
    w.row({"BER", "CDG", "470", "150", "4", "2400"});
    w.row({"BER", "AMS", "310", "150", "6", "1600"});
    w.row({"CDG", "AMS", "230", "180", "8", "1200"});
    w.row({"CDG", "BER", "470", "150", "4", "2400"});
    w.row({"MUC", "AMS", "360", "160", "4", "1900"});   // in-country, unallocable
    w.row({"AMS", "LIS", "1000", "180", "2", "5200"});  // at the range limit
    w.row({"CDG", "JFK", "3150", "300", "3", "40000"}); // long-haul widebody
    w.row({"LIS", "AMS", "1000", "180", "2", "5200"});  // foreign origin
  }
  {
    Writer w(p("technologies.csv"));
    w.row({"name", "sector", "lifetime_yr", "capex", "capex_charge", "fom",
           "vom", "heat_rate_mmbtu_per_mwh", "efficiency", "fuel",
           "co2_t_per_mmbtu", "capture_rate", "electricity_use_kwh_per_kg",
           "boiloff", "expandable", "charge_efficiency", "stores_liquid",
           "is_nuclear", "zone_whitelist", "cf_profile"});
    w.row({"ccgt", "power", "25", "940", "0", "27.8", "3.5", "6.36", "0",
           "natural_gas", "0.0531", "0", "0", "0", "1", "1", "0", "0", "", ""});
    w.row({"ccgt_ccs", "power", "25", "1800", "0", "46", "6", "7.12", "0",
           "natural_gas", "0.0531", "0.9", "0", "0", "1", "1", "0", "0", "", ""});
    w.row({"nuclear", "power", "30", "4776", "0", "128.8", "8", "10.44", "0",
           "uranium", "0", "0", "0", "0", "1", "1", "0", "1", "", ""});
    w.row({"solar", "power", "30", "490", "0", "9.2", "0", "0", "0", "", "0",
           "0", "0", "0", "1", "1", "0", "0", "", "solar"});
    w.row({"onwind", "power", "30", "1040", "0", "34", "0", "0", "0", "", "0",
           "0", "0", "0", "1", "1", "0", "0", "", "wind"});
    w.row({"bio", "power", "25", "2000", "0", "40", "5", "9.0", "0", "biomass",
           "0", "0", "0", "0", "1", "1", "0", "0", "", ""});
    w.row({"battery", "power_storage", "15", "122", "167", "3", "0", "0", "0",
           "", "0", "0", "0", "0", "1", "0.9", "0", "0", "", ""});
    w.row({"electrolyzer", "h2_production", "10", "375.4", "0", "7.5", "0",
           "0", "0.65", "electricity", "0", "0", "0", "0", "1", "1", "0", "0",
           "", ""});
    w.row({"atr_ccs", "h2_production", "30", "851.7", "0", "34", "0", "0",
           "0.675", "natural_gas_ccs", "0.0531", "0.94", "0", "0", "1", "1",
           "0", "0", "", ""});
    w.row({"smr", "h2_production", "30", "602", "0", "24", "0", "0", "0.72",
           "natural_gas", "0.0531", "0", "0", "0", "1", "1", "0", "0", "", ""});
    w.row({"h2_ccgt", "h2_gas_to_power", "25", "940", "0", "27.8", "3", "0",
           "0.55", "", "0", "0", "0", "0", "1", "1", "0", "0", "", ""});
    w.row({"salt_cavern", "h2_storage", "30", "500", "1.47", "10", "0", "0",
           "0", "", "0", "0", "1", "0", "1", "1", "0", "0", "Z1;Z2", ""});
    w.row({"liquid_tank", "h2_storage", "20", "25000", "0.8", "500", "0", "0",
           "0", "", "0", "0", "0.6", "0", "1", "1", "1", "0", "", ""});
    w.row({"liquefier", "liquefier", "40", "2732.7", "0", "54.7", "0", "0",
           "0", "", "0", "0", "9", "0.02", "1", "1", "0", "0", "", ""});
  }
  {
    Writer w(p("edges.csv"));
    w.row({"kind", "from_zone", "to_zone", "length_km", "existing_capacity",
           "max_expansion", "capex_per_unit", "lifetime_yr",
           "loss_pct_per_100km"});
    w.row({"hvac", "Z1", "Z2", "600", "2000", "inf", "720000", "25", "0.625"});
    w.row({"hvac", "Z1", "Z3", "450", "2000", "inf", "540000", "25", "0.625"});
    w.row({"hvdc", "Z2", "Z3", "900", "1000", "inf", "990000", "25", "0.625"});
    w.row({"pipeline", "Z1", "Z2", "600", "0", "inf", "4200000", "40", "0.1"});
    w.row({"pipeline", "Z1", "Z3", "450", "0", "inf", "3150000", "40", "0.1"});
    w.row({"truck_route", "Z1", "Z3", "450", "0", "inf", "180000", "12", "0"});
    w.row({"truck_route", "Z2", "Z3", "900", "0", "inf", "180000", "12", "0"});
  }
  {
    Writer w(p("existing_capacity.csv"));
    w.row({"zone_id", "tech", "capacity", "charge_capacity"});
    w.row({"Z1", "ccgt", "4000", "0"});
    w.row({"Z2", "ccgt", "9000", "0"});
    w.row({"Z3", "ccgt", "5000", "0"});
    w.row({"Z3", "nuclear", "8000", "0"});
    w.row({"Z1", "onwind", "1500", "0"});
    w.row({"Z2", "onwind", "4000", "0"});
    w.row({"Z3", "onwind", "3000", "0"});
    w.row({"Z1", "solar", "1000", "0"});
    w.row({"Z2", "solar", "3000", "0"});
    w.row({"Z3", "solar", "4000", "0"});
    w.row({"Z2", "salt_cavern", "5000", "50"});
  }
  {
    Writer w(p("fuels.csv"));
    w.row({"fuel", "price_eur_per_mmbtu", "co2_t_per_mmbtu"});
    w.row({"natural_gas", "4.5", "0.0531"});
    w.row({"natural_gas_ccs", "5.5", "0.0531"});
    w.row({"biomass", "8.0", "0"});
    w.row({"uranium", "0.7", "0"});
  }
  {
    Writer w(p("country_demand.csv"));
    w.row({"country", "base_h2_tonnes_per_year", "elec_2040_twh"});
    w.row({"NL", "60000", "25"});
    w.row({"DE", "150000", "60"});
    w.row({"FR", "120000", "50"});
  }
  {
    Writer w(p("trucks.csv"));
    w.row({"capacity_tonnes", "speed_kmh", "opex_eur_per_km", "fuel_kg_per_km"});
    w.row({"4", "50", "1.4", "0.09"});
  }
  {
    Writer w(p("elec_load.csv"));
    w.row({"hour", "Z1", "Z2", "Z3"});
    for (int h = 0; h < 8760; ++h)
      w.row({std::to_string(h), num(elec_load(0, h)), num(elec_load(1, h)),
             num(elec_load(2, h))});
  }
  {
    Writer w(p("vre_cf.csv"));
    w.row({"hour", "Z1:solar", "Z2:solar", "Z3:solar", "Z1:onwind",
           "Z2:onwind", "Z3:onwind"});
    for (int h = 0; h < 8760; ++h)
      w.row({std::to_string(h), num(solar_cf(0, h)), num(solar_cf(1, h)),
             num(solar_cf(2, h)), num(wind_cf(0, h)), num(wind_cf(1, h)),
             num(wind_cf(2, h))});
  }
  {
    std::ofstream out(p("presets.cfg"), std::ios::binary);
    out << "# Scenario presets for the bundled toy dataset.\n"
           "# Keys: aviation_demand_on, nuclear_expansion, ccs_allowed,\n"
           "# ccs_zones, pipelines_allowed, trucks_allowed, emissions_cap_tonnes.\n"
           "\n"
           "[Base]\n"
           "aviation_demand_on = 0\n"
           "nuclear_expansion = 0\n"
           "ccs_allowed = 1\n"
           "ccs_zones = Z2;Z3\n"
           "pipelines_allowed = 1\n"
           "trucks_allowed = 0\n"
           "emissions_cap_tonnes = 2000000\n"
           "\n"
           "[Base + Aviation]\n"
           "aviation_demand_on = 1\n"
           "nuclear_expansion = 0\n"
           "ccs_allowed = 1\n"
           "ccs_zones = Z2;Z3\n"
           "pipelines_allowed = 1\n"
           "trucks_allowed = 0\n"
           "emissions_cap_tonnes = 2000000\n"
           "\n"
           "[With Nuclear Expansion]\n"
           "aviation_demand_on = 1\n"
           "nuclear_expansion = 1\n"
           "ccs_allowed = 1\n"
           "ccs_zones = Z2;Z3\n"
           "pipelines_allowed = 1\n"
           "trucks_allowed = 0\n"
           "emissions_cap_tonnes = 2000000\n"
           "\n"
           "[No Carbon Capture]\n"
           "aviation_demand_on = 1\n"
           "nuclear_expansion = 0\n"
           "ccs_allowed = 0\n"
           "pipelines_allowed = 1\n"
           "trucks_allowed = 0\n"
           "emissions_cap_tonnes = 2000000\n"
           "\n"
           "[No CCS with Nuclear Exp.]\n"
           "aviation_demand_on = 1\n"
           "nuclear_expansion = 1\n"
           "ccs_allowed = 0\n"
           "pipelines_allowed = 1\n"
           "trucks_allowed = 0\n"
           "emissions_cap_tonnes = 2000000\n"
           "\n"
           "[Liquid Trucking]\n"
           "aviation_demand_on = 1\n"
           "nuclear_expansion = 0\n"
           "ccs_allowed = 1\n"
           "ccs_zones = Z2;Z3\n"
           "pipelines_allowed = 1\n"
           "trucks_allowed = 1\n"
           "emissions_cap_tonnes = 2000000\n"
           "\n"
           "[No Pipelines]\n"
           "aviation_demand_on = 1\n"
           "nuclear_expansion = 0\n"
           "ccs_allowed = 1\n"
           "ccs_zones = Z2;Z3\n"
           "pipelines_allowed = 0\n"
           "trucks_allowed = 0\n"
           "emissions_cap_tonnes = 2000000\n";
  }
  return 0;
}
