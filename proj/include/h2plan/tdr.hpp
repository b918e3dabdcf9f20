#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "h2plan/common.hpp"
#include "h2plan/csv.hpp"

namespace h2plan::tdr {

// Time-domain reduction: clusters the 365 days of all zonal hourly series
// into k weighted representative days (k-means over min-max normalized day
// vectors, medoid representatives, per-series annual rescaling).

struct SeriesBundle {
  std::vector<std::string> names;
  std::vector<std::vector<double>> series;  // each 8760 long, aligned

  void add(const std::string& name, std::vector<double> s) {
    if (s.size() != static_cast<size_t>(kHoursPerYear))
      throw ValidationError("tdr: series " + name + " is not 8760 hours");
    names.push_back(name);
    series.push_back(std::move(s));
  }
};

struct RepresentativePeriod {
  int period_id = 0;
  double weight = 0;                         // days per year, sum = 365
  int source_day = 0;                        // calendar day of the medoid
  std::vector<std::vector<double>> slices;   // per series, 24 hourly values
};

struct Reduction {
  std::vector<RepresentativePeriod> periods;
  std::vector<int> day_to_period;  // 365 entries
};

namespace detail {

inline double sqdist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace detail

inline Reduction reduce(const SeriesBundle& bundle, int k, uint64_t seed) {
  const int days = static_cast<int>(kDaysPerYear);
  if (k < 1 || k > days) throw ValidationError("tdr: k must be in [1, 365]");
  if (bundle.series.empty()) throw ValidationError("tdr: empty bundle");
  const int ns = static_cast<int>(bundle.series.size());
  const int dim = ns * 24;

  // Min-max normalize each series over the full year so that series with
  // different units weigh equally in the distance metric.
  std::vector<double> lo(ns, std::numeric_limits<double>::infinity());
  std::vector<double> hi(ns, -std::numeric_limits<double>::infinity());
  for (int s = 0; s < ns; ++s)
    for (double v : bundle.series[s]) {
      lo[s] = std::min(lo[s], v);
      hi[s] = std::max(hi[s], v);
    }

  std::vector<std::vector<double>> pts(days, std::vector<double>(dim));
  for (int d = 0; d < days; ++d)
    for (int s = 0; s < ns; ++s) {
      double span = hi[s] - lo[s];
      for (int h = 0; h < 24; ++h) {
        double v = bundle.series[s][d * 24 + h];
        pts[d][s * 24 + h] = span > 0 ? (v - lo[s]) / span : 0.0;
      }
    }

  std::vector<int> assign(days, 0);
  std::vector<std::vector<double>> centroids;

  if (k == days) {
    // Identity reduction, no clustering needed.
    for (int d = 0; d < days; ++d) assign[d] = d;
  } else {
    // k-means++ seeding with a fixed RNG, then Lloyd iterations.
    std::mt19937_64 rng(seed);
    std::vector<int> centers;
    std::uniform_int_distribution<int> first(0, days - 1);
    centers.push_back(first(rng));
    std::vector<double> mind(days);
    while (static_cast<int>(centers.size()) < k) {
      double total = 0;
      for (int d = 0; d < days; ++d) {
        double best = std::numeric_limits<double>::infinity();
        for (int c : centers) best = std::min(best, detail::sqdist(pts[d], pts[c]));
        mind[d] = best;
        total += best;
      }
      int next = -1;
      if (total <= 0) {
        for (int d = 0; d < days; ++d) {
          bool used = false;
          for (int c : centers) used = used || c == d;
          if (!used) { next = d; break; }
        }
      } else {
        std::uniform_real_distribution<double> u(0.0, total);
        double target = u(rng), acc = 0;
        for (int d = 0; d < days; ++d) {
          acc += mind[d];
          if (acc >= target) { next = d; break; }
        }
        if (next < 0) next = days - 1;
      }
      centers.push_back(next);
    }
    centroids.resize(k);
    for (int c = 0; c < k; ++c) centroids[c] = pts[centers[c]];

    for (int iter = 0; iter < 500; ++iter) {
      bool changed = false;
      for (int d = 0; d < days; ++d) {
        int best = 0;
        double bestd = detail::sqdist(pts[d], centroids[0]);
        for (int c = 1; c < k; ++c) {
          double dd = detail::sqdist(pts[d], centroids[c]);
          if (dd < bestd - 1e-15) { bestd = dd; best = c; }
        }
        if (assign[d] != best) { assign[d] = best; changed = true; }
      }
      // Recompute centroids; an empty cluster is re-seeded from the point
      // farthest from its current centroid (deterministic).
      std::vector<int> count(k, 0);
      std::vector<std::vector<double>> sum(k, std::vector<double>(dim, 0.0));
      for (int d = 0; d < days; ++d) {
        ++count[assign[d]];
        for (int i = 0; i < dim; ++i) sum[assign[d]][i] += pts[d][i];
      }
      for (int c = 0; c < k; ++c) {
        if (count[c] == 0) {
          int far = 0;
          double fard = -1;
          for (int d = 0; d < days; ++d) {
            double dd = detail::sqdist(pts[d], centroids[assign[d]]);
            if (dd > fard + 1e-15) { fard = dd; far = d; }
          }
          centroids[c] = pts[far];
          assign[far] = c;
          changed = true;
        } else {
          for (int i = 0; i < dim; ++i) centroids[c][i] = sum[c][i] / count[c];
        }
      }
      if (!changed) break;
    }
  }

  // Relabel clusters in order of first appearance so period ids are stable.
  std::map<int, int> relabel;
  Reduction out;
  out.day_to_period.resize(days);
  for (int d = 0; d < days; ++d) {
    auto [it, inserted] = relabel.emplace(assign[d], static_cast<int>(relabel.size()));
    out.day_to_period[d] = it->second;
  }
  int nper = static_cast<int>(relabel.size());
  out.periods.resize(nper);

  for (int p = 0; p < nper; ++p) {
    std::vector<int> members;
    for (int d = 0; d < days; ++d)
      if (out.day_to_period[d] == p) members.push_back(d);
    // Medoid: member closest to the cluster mean in normalized space.
    std::vector<double> mean(dim, 0.0);
    for (int d : members)
      for (int i = 0; i < dim; ++i) mean[i] += pts[d][i];
    for (int i = 0; i < dim; ++i) mean[i] /= members.size();
    int medoid = members[0];
    double bestd = std::numeric_limits<double>::infinity();
    for (int d : members) {
      double dd = detail::sqdist(pts[d], mean);
      if (dd < bestd - 1e-15) { bestd = dd; medoid = d; }
    }
    auto& per = out.periods[p];
    per.period_id = p;
    per.weight = static_cast<double>(members.size());
    per.source_day = medoid;
    per.slices.resize(ns, std::vector<double>(24));
    for (int s = 0; s < ns; ++s)
      for (int h = 0; h < 24; ++h)
        per.slices[s][h] = bundle.series[s][medoid * 24 + h];
  }

  // One scale factor per series so the weighted annual sum matches the
  // original exactly (unless the weighted sum is zero).
  for (int s = 0; s < ns; ++s) {
    double orig = 0;
    for (double v : bundle.series[s]) orig += v;
    double red = 0;
    for (const auto& per : out.periods)
      for (double v : per.slices[s]) red += per.weight * v;
    if (red != 0) {
      double f = orig / red;
      for (auto& per : out.periods)
        for (double& v : per.slices[s]) v *= f;
    }
  }
  return out;
}

inline void write_reduction_csv(const std::string& dir, const SeriesBundle& bundle,
                                const Reduction& red) {
  {
    csv::Writer w(dir + "/periods.csv");
    w.row({"period_id", "weight"});
    for (const auto& p : red.periods)
      w.row({std::to_string(p.period_id), csv::num(p.weight)});
  }
  {
    csv::Writer w(dir + "/day_map.csv");
    w.row({"day", "period_id"});
    for (size_t d = 0; d < red.day_to_period.size(); ++d)
      w.row({std::to_string(d), std::to_string(red.day_to_period[d])});
  }
  {
    csv::Writer w(dir + "/period_slices.csv");
    std::vector<std::string> header = {"period_id", "hour"};
    for (const auto& n : bundle.names) header.push_back(n);
    w.row(header);
    for (const auto& p : red.periods)
      for (int h = 0; h < 24; ++h) {
        std::vector<std::string> row = {std::to_string(p.period_id), std::to_string(h)};
        for (size_t s = 0; s < bundle.names.size(); ++s)
          row.push_back(csv::num(p.slices[s][h]));
        w.row(row);
      }
  }
}

}  // namespace h2plan::tdr
