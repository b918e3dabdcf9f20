#pragma once

#include <cmath>

#include "h2plan/common.hpp"

namespace h2plan::geo {

inline double deg2rad(double d) { return d * M_PI / 180.0; }

// Great-circle distance on a spherical earth (haversine), km.
inline double haversine_km(double lat1, double lon1, double lat2, double lon2) {
  double phi1 = deg2rad(lat1), phi2 = deg2rad(lat2);
  double dphi = deg2rad(lat2 - lat1);
  double dlmb = deg2rad(lon2 - lon1);
  double a = std::sin(dphi / 2) * std::sin(dphi / 2) +
             std::cos(phi1) * std::cos(phi2) * std::sin(dlmb / 2) * std::sin(dlmb / 2);
  a = std::min(1.0, std::max(0.0, a));
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(a));
}

}  // namespace h2plan::geo
