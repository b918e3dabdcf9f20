#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "h2plan/retrofit.hpp"

using namespace h2plan;
using namespace h2plan::retrofit;

namespace {
const AircraftSpec dash8{};          // defaults model the Dash 8-400
const PowertrainAssumptions base{};  // eta 0.60, SP 1, GI 0.35, motors 12
}  // namespace

TEST_CASE("mission energy anchors") {
  // full tank at max range: 65600 kWh * 0.35
  CHECK(mission_energy(1100, dash8) == Catch::Approx(22960.0).epsilon(1e-12));
  CHECK(mission_energy(1100, dash8) == Catch::Approx(23000.0).epsilon(0.01));
  // hand evaluation at the 500 nmi baseline: 65600 * 0.35 * 500/1100
  CHECK(mission_energy(500, dash8) == Catch::Approx(10436.363636).epsilon(1e-9));
  // constant per-nmi slope of about 21 kWh/nmi
  CHECK(mission_energy(1100, dash8) / 1100.0 == Catch::Approx(20.872727).epsilon(1e-6));
}

TEST_CASE("ranges outside the validity window are rejected") {
  CHECK_THROWS_AS(mission_energy(499.999, dash8), RangeOutOfModelValidity);
  CHECK_THROWS_AS(mission_energy(1100.001, dash8), RangeOutOfModelValidity);
  CHECK_NOTHROW(mission_energy(500.0, dash8));
  CHECK_NOTHROW(mission_energy(1100.0, dash8));
  CHECK_THROWS_AS(solve_retrofit(400, dash8, base), RangeOutOfModelValidity);
}

TEST_CASE("500 nmi baseline masses") {
  auto b = solve_retrofit(500, dash8, base);
  // hand arithmetic: 10436.36 / (33.333 * 0.60) and /0.35 for the tank
  CHECK(b.hydrogen_mass_kg == Catch::Approx(521.8234).epsilon(1e-5));
  CHECK(b.tank_mass_full_kg == Catch::Approx(1490.924).epsilon(1e-5));
  CHECK(b.hydrogen_mass_kg == Catch::Approx(522.0).epsilon(0.01));
  CHECK(b.tank_mass_full_kg == Catch::Approx(1491.0).epsilon(0.01));
  CHECK(b.fuel_cell_mass_kg == Catch::Approx(7562.0));
  CHECK(b.motor_mass_kg == Catch::Approx(7562.0 / 12.0));
  // reduction = motors + fuel cell + tank - envelope, as a hand total
  CHECK(b.payload_reduction_mass_kg ==
        Catch::Approx(630.1667 + 7562.0 + 1490.924 - 6800.0).epsilon(1e-5));
  CHECK(b.payload_reduction_fraction ==
        Catch::Approx(b.payload_reduction_mass_kg / 8480.0));
  CHECK(weight_balance_residual(b, dash8) == 0.0);
}

TEST_CASE("degenerate limit: vanishing tank leaves fc + motors - envelope") {
  PowertrainAssumptions pa = base;
  pa.tank_gravimetric_index = 1.0;
  pa.fc_efficiency_avg = 0.999999999;
  pa.h2_lhv_kwh_per_kg = 1e15;
  auto b = solve_retrofit(1000, dash8, pa);
  CHECK(b.tank_mass_full_kg < 1e-9);
  CHECK(b.payload_reduction_mass_kg ==
        Catch::Approx(b.fuel_cell_mass_kg + b.motor_mass_kg - 6800.0).margin(1e-8));
}

TEST_CASE("weight balance residual is exactly zero across a random sweep") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> r(500, 1100), gi(0.2, 1.0), sp(0.5, 6.0),
      eta(0.3, 0.9);
  for (int i = 0; i < 2000; ++i) {
    PowertrainAssumptions pa = base;
    pa.tank_gravimetric_index = gi(rng);
    pa.fc_specific_power_kw_per_kg = sp(rng);
    pa.fc_efficiency_avg = eta(rng);
    auto b = solve_retrofit(r(rng), dash8, pa);
    REQUIRE(weight_balance_residual(b, dash8) == 0.0);
    REQUIRE(b.tank_mass_full_kg >= b.hydrogen_mass_kg);
  }
}

TEST_CASE("payload reduction monotonicity") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> r(500, 1050), gi(0.2, 0.9), sp(0.5, 5.0),
      eta(0.35, 0.85), bump(0.01, 0.2);
  for (int i = 0; i < 500; ++i) {
    PowertrainAssumptions pa = base;
    pa.tank_gravimetric_index = gi(rng);
    pa.fc_specific_power_kw_per_kg = sp(rng);
    pa.fc_efficiency_avg = eta(rng);
    double range = r(rng);
    double ref = solve_retrofit(range, dash8, pa).payload_reduction_mass_kg;

    // nondecreasing in range
    CHECK(solve_retrofit(range + 40, dash8, pa).payload_reduction_mass_kg >= ref);
    // nonincreasing in fuel cell specific power
    PowertrainAssumptions q = pa;
    q.fc_specific_power_kw_per_kg += bump(rng);
    CHECK(solve_retrofit(range, dash8, q).payload_reduction_mass_kg <= ref);
    // nonincreasing in gravimetric index
    q = pa;
    q.tank_gravimetric_index = std::min(1.0, q.tank_gravimetric_index + bump(rng));
    CHECK(solve_retrofit(range, dash8, q).payload_reduction_mass_kg <= ref);
    // nonincreasing in fuel cell efficiency
    q = pa;
    q.fc_efficiency_avg = std::min(0.99, q.fc_efficiency_avg + bump(rng));
    CHECK(solve_retrofit(range, dash8, q).payload_reduction_mass_kg <= ref);
  }
}

TEST_CASE("hydrogen mass is linear in range") {
  PowertrainAssumptions pa = base;
  double m500 = solve_retrofit(500, dash8, pa).hydrogen_mass_kg;
  double m1000 = solve_retrofit(1000, dash8, pa).hydrogen_mass_kg;
  CHECK(m1000 == Catch::Approx(2.0 * m500).epsilon(1e-12));
  double m750 = solve_retrofit(750, dash8, pa).hydrogen_mass_kg;
  CHECK(m750 == Catch::Approx(1.5 * m500).epsilon(1e-12));
}

TEST_CASE("zero-payload specific power anchors and round trip") {
  double sp50 = required_specific_power_zero_payload(1000, 0.50, dash8, base);
  double sp35 = required_specific_power_zero_payload(1000, 0.35, dash8, base);
  CHECK(sp50 == Catch::Approx(1.9).margin(0.07));
  CHECK(sp35 == Catch::Approx(2.37).margin(0.07));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> r(500, 1050), gi(0.3, 1.0);
  for (int i = 0; i < 200; ++i) {
    double range = r(rng), g = gi(rng);
    double sp;
    try {
      sp = required_specific_power_zero_payload(range, g, dash8, base);
    } catch (const InfeasibleRetrofit&) {
      continue;
    }
    PowertrainAssumptions pa = base;
    pa.tank_gravimetric_index = g;
    pa.fc_specific_power_kw_per_kg = sp;
    auto b = solve_retrofit(range, dash8, pa);
    CHECK(std::abs(b.payload_reduction_mass_kg) <= 1e-9 * dash8.weight_envelope_kg);
  }
}

TEST_CASE("infeasible retrofit when tank and motors exceed the envelope") {
  // GI small enough that tank alone fills the envelope
  CHECK_THROWS_AS(required_specific_power_zero_payload(1000, 0.1, dash8, base),
                  InfeasibleRetrofit);
}

TEST_CASE("sweep grid ordering and consistency") {
  auto cells = sweep_grid({500, 1000}, {0.35, 0.5}, {1.0, 2.0}, dash8, base);
  REQUIRE(cells.size() == 8);
  // range-major, then gi, then sp
  CHECK(cells[0].range_nmi == 500);
  CHECK(cells[0].gi == 0.35);
  CHECK(cells[0].sp == 1.0);
  CHECK(cells[1].sp == 2.0);
  CHECK(cells[2].gi == 0.5);
  CHECK(cells[4].range_nmi == 1000);

  for (const auto& c : cells) {
    PowertrainAssumptions pa = base;
    pa.tank_gravimetric_index = c.gi;
    pa.fc_specific_power_kw_per_kg = c.sp;
    auto b = solve_retrofit(c.range_nmi, dash8, pa);
    CHECK(c.breakdown.payload_reduction_mass_kg ==
          Catch::Approx(b.payload_reduction_mass_kg));
  }

  // the 1000 nmi SP 1 -> 2 pair spans a large reduction drop; the SP=2 cell
  // lands near 8% of payload
  CHECK(cells[4].breakdown.payload_reduction_fraction >
        cells[5].breakdown.payload_reduction_fraction);
  CHECK(cells[5].breakdown.payload_reduction_fraction ==
        Catch::Approx(0.08).margin(0.05));
}

TEST_CASE("zero-payload breakeven range near 540 nmi at GI 0.5, SP 1.5") {
  PowertrainAssumptions pa = base;
  pa.tank_gravimetric_index = 0.5;
  pa.fc_specific_power_kw_per_kg = 1.5;
  double lo = 500, hi = 1100;
  REQUIRE(solve_retrofit(lo, dash8, pa).payload_reduction_mass_kg < 0);
  REQUIRE(solve_retrofit(hi, dash8, pa).payload_reduction_mass_kg > 0);
  for (int i = 0; i < 60; ++i) {
    double mid = 0.5 * (lo + hi);
    (solve_retrofit(mid, dash8, pa).payload_reduction_mass_kg > 0 ? hi : lo) = mid;
  }
  double breakeven = 0.5 * (lo + hi);
  CHECK(breakeven == Catch::Approx(540.0).epsilon(0.02));
  CHECK(breakeven == Catch::Approx(600.0).epsilon(0.15));
}

TEST_CASE("sweep CSV header and rows") {
  auto cells = sweep_grid({500}, {0.35}, {1.0}, dash8, base);
  std::ostringstream os;
  write_sweep_csv(os, cells);
  std::istringstream is(os.str());
  std::string header, row;
  std::getline(is, header);
  CHECK(header ==
        "range_nmi,gi,sp_kw_per_kg,h2_kg,tank_kg,fc_kg,motor_kg,"
        "payload_red_kg,payload_red_frac,feasible");
  REQUIRE(std::getline(is, row));
  CHECK(row.substr(0, 13) == "500,0.35,1,52");  // h2 column starts with 521.8...
}
