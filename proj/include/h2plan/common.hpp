#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace h2plan {

// Unit constants shared across modules.
// Money is EUR throughout; power MW / energy MWh; hydrogen tonnes.
inline constexpr double kH2LhvKwhPerKg = 33.333;      // 120 MJ/kg
inline constexpr double kH2LhvMwhPerTonne = 33.333;
inline constexpr double kH2HhvMwhPerTonne = 39.405;
inline constexpr double kJetFuelMjPerKg = 44.0;
inline constexpr double kMjPerMmbtu = 1055.05585262;
inline constexpr double kMmbtuPerMwh = 3.412141633;
inline constexpr double kHoursPerYear = 8760;
inline constexpr double kDaysPerYear = 365;
inline constexpr double kEarthRadiusKm = 6371.0;

struct RangeOutOfModelValidity : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfeasibleRetrofit : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingAllocation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownPreset : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericalBreakdown : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivisionDomain : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapNotBinding : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyCluster : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool approx_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace h2plan
