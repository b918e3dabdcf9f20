#pragma once

#include <cmath>
#include <ostream>
#include <vector>

#include "h2plan/common.hpp"
#include "h2plan/csv.hpp"

namespace h2plan::retrofit {

// Weight-constrained retrofit model for converting a regional turboprop to a
// fuel-cell electric powertrain. The retrofit powertrain (motors + fuel cell
// + full hydrogen tank) must fit within the weight envelope freed by removing
// the original engines and maximum fuel load; any excess comes out of payload.

struct AircraftSpec {
  double max_range_nmi = 1100.0;
  double full_tank_energy_kwh = 65600.0;   // onboard jet fuel energy at max fuel
  double engine_thermal_efficiency = 0.35;
  double engine_rated_power_kw = 7562.0;
  double engine_specific_power_kw_per_kg = 5.0;
  double max_fuel_weight_kg = 5287.6;
  double weight_envelope_kg = 6800.0;      // max fuel + engines
  double payload_max_kg = 8480.0;

  double engine_mass_kg() const {
    return engine_rated_power_kw / engine_specific_power_kw_per_kg;
  }

  void validate() const {
    if (max_range_nmi <= 0 || full_tank_energy_kwh <= 0 ||
        engine_rated_power_kw <= 0 || engine_specific_power_kw_per_kg <= 0 ||
        max_fuel_weight_kg <= 0 || weight_envelope_kg <= 0 || payload_max_kg <= 0)
      throw ValidationError("AircraftSpec: all fields must be > 0");
    if (engine_thermal_efficiency <= 0 || engine_thermal_efficiency > 1)
      throw ValidationError("AircraftSpec: engine_thermal_efficiency must be in (0,1]");
    double sum = max_fuel_weight_kg + engine_mass_kg();
    if (std::abs(sum - weight_envelope_kg) > 1e-3 * weight_envelope_kg)
      throw ValidationError("AircraftSpec: envelope must equal max fuel + engine mass");
  }
};

struct PowertrainAssumptions {
  double fc_efficiency_avg = 0.60;          // trip-average fuel cell efficiency
  double fc_specific_power_kw_per_kg = 1.0; // system level, at max power
  double tank_gravimetric_index = 0.35;     // H2 mass / full tank mass
  double motor_specific_power_kw_per_kg = 12.0;
  double h2_lhv_kwh_per_kg = kH2LhvKwhPerKg;

  void validate() const {
    if (fc_efficiency_avg <= 0 || fc_efficiency_avg >= 1)
      throw ValidationError("PowertrainAssumptions: fc_efficiency_avg must be in (0,1)");
    if (tank_gravimetric_index <= 0 || tank_gravimetric_index > 1)
      throw ValidationError("PowertrainAssumptions: tank_gravimetric_index must be in (0,1]");
    if (fc_specific_power_kw_per_kg <= 0 || motor_specific_power_kw_per_kg <= 0 ||
        h2_lhv_kwh_per_kg <= 0)
      throw ValidationError("PowertrainAssumptions: specific powers and LHV must be > 0");
  }
};

struct RetrofitBreakdown {
  double range_nmi = 0;
  double energy_required_kwh = 0;
  double hydrogen_mass_kg = 0;
  double tank_mass_full_kg = 0;
  double fuel_cell_mass_kg = 0;
  double motor_mass_kg = 0;
  // Positive: payload must shrink by this much to keep MTOW constant.
  // Negative: the new powertrain is lighter than the envelope (spare capacity).
  double payload_reduction_mass_kg = 0;
  double payload_reduction_fraction = 0;
};

// Energy delivered to the propeller shafts for a mission of the given range.
// The linear range-energy relationship is only valid from 500 nmi up to the
// aircraft's maximum range; shorter missions are rejected.
inline double mission_energy(double range_nmi, const AircraftSpec& spec) {
  spec.validate();
  if (range_nmi < 500.0 || range_nmi > spec.max_range_nmi)
    throw RangeOutOfModelValidity(
        "range " + std::to_string(range_nmi) +
        " nmi outside model validity [500, " + std::to_string(spec.max_range_nmi) + "]");
  return range_nmi / spec.max_range_nmi * spec.full_tank_energy_kwh *
         spec.engine_thermal_efficiency;
}

inline RetrofitBreakdown solve_retrofit(double range_nmi, const AircraftSpec& spec,
                                        const PowertrainAssumptions& pa) {
  pa.validate();
  RetrofitBreakdown b;
  b.range_nmi = range_nmi;
  b.energy_required_kwh = mission_energy(range_nmi, spec);
  b.hydrogen_mass_kg =
      b.energy_required_kwh / (pa.h2_lhv_kwh_per_kg * pa.fc_efficiency_avg);
  b.tank_mass_full_kg = b.hydrogen_mass_kg / pa.tank_gravimetric_index;
  b.fuel_cell_mass_kg = spec.engine_rated_power_kw / pa.fc_specific_power_kw_per_kg;
  b.motor_mass_kg = spec.engine_rated_power_kw / pa.motor_specific_power_kw_per_kg;
  b.payload_reduction_mass_kg = b.motor_mass_kg + b.fuel_cell_mass_kg +
                                b.tank_mass_full_kg - spec.weight_envelope_kg;
  b.payload_reduction_fraction = b.payload_reduction_mass_kg / spec.payload_max_kg;
  return b;
}

// Residual of the weight balance: the payload reduction must exactly absorb
// whatever the new powertrain exceeds the envelope by. Evaluated with the
// same association as solve_retrofit so it is exactly zero, not merely small.
inline double weight_balance_residual(const RetrofitBreakdown& b, const AircraftSpec& spec) {
  return b.payload_reduction_mass_kg - (b.motor_mass_kg + b.fuel_cell_mass_kg +
                                        b.tank_mass_full_kg - spec.weight_envelope_kg);
}

// Fuel cell specific power needed so that the retrofit exactly fills the
// envelope with no payload reduction.
inline double required_specific_power_zero_payload(double range_nmi, double gi,
                                                   const AircraftSpec& spec,
                                                   PowertrainAssumptions pa) {
  pa.tank_gravimetric_index = gi;
  pa.validate();
  double energy = mission_energy(range_nmi, spec);
  double h2 = energy / (pa.h2_lhv_kwh_per_kg * pa.fc_efficiency_avg);
  double tank = h2 / gi;
  double motor = spec.engine_rated_power_kw / pa.motor_specific_power_kw_per_kg;
  double budget = spec.weight_envelope_kg - tank - motor;
  if (budget <= 0)
    throw InfeasibleRetrofit("tank and motors alone exceed the weight envelope");
  return spec.engine_rated_power_kw / budget;
}

struct SweepCell {
  double range_nmi, gi, sp;
  RetrofitBreakdown breakdown;
  bool feasible;  // false when the powertrain exceeds envelope + full payload
};

// Full-factorial design-space sweep, range-major then GI then SP.
inline std::vector<SweepCell> sweep_grid(const std::vector<double>& ranges,
                                         const std::vector<double>& gis,
                                         const std::vector<double>& sps,
                                         const AircraftSpec& spec,
                                         const PowertrainAssumptions& base) {
  if (ranges.empty() || gis.empty() || sps.empty())
    throw ValidationError("sweep_grid: empty axis");
  std::vector<SweepCell> out;
  out.reserve(ranges.size() * gis.size() * sps.size());
  for (double r : ranges)
    for (double gi : gis)
      for (double sp : sps) {
        PowertrainAssumptions pa = base;
        pa.tank_gravimetric_index = gi;
        pa.fc_specific_power_kw_per_kg = sp;
        SweepCell cell{r, gi, sp, solve_retrofit(r, spec, pa), true};
        cell.feasible = cell.breakdown.payload_reduction_mass_kg <= spec.payload_max_kg;
        out.push_back(cell);
      }
  return out;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepCell>& cells) {
  out << "range_nmi,gi,sp_kw_per_kg,h2_kg,tank_kg,fc_kg,motor_kg,"
         "payload_red_kg,payload_red_frac,feasible\n";
  for (const auto& c : cells) {
    const auto& b = c.breakdown;
    out << csv::num(c.range_nmi) << ',' << csv::num(c.gi) << ',' << csv::num(c.sp)
        << ',' << csv::num(b.hydrogen_mass_kg) << ',' << csv::num(b.tank_mass_full_kg)
        << ',' << csv::num(b.fuel_cell_mass_kg) << ',' << csv::num(b.motor_mass_kg)
        << ',' << csv::num(b.payload_reduction_mass_kg) << ','
        << csv::num(b.payload_reduction_fraction) << ',' << (c.feasible ? "1" : "0")
        << '\n';
  }
}

}  // namespace h2plan::retrofit
