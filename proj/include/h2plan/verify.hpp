#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "h2plan/common.hpp"
#include "h2plan/lp.hpp"

namespace h2plan::lp {

// Independent optimality check: recomputes residuals, duality gap and
// complementary slackness straight from the LP data, without touching any
// solver internals.
struct VerifyReport {
  std::vector<std::string> violations;
  double max_primal_residual = 0;
  double max_bound_violation = 0;
  double duality_gap = 0;
  bool ok() const { return violations.empty(); }
};

inline VerifyReport verify_solution(const LinearProgram& p, const SolveResult& r,
                                    double tol = 1e-6) {
  VerifyReport rep;
  if (r.status != SolveStatus::optimal) {
    rep.violations.push_back("result status is not optimal");
    return rep;
  }
  int n = p.num_cols(), m = p.num_rows();
  double bnorm = 0;
  for (double b : p.rhs) bnorm = std::max(bnorm, std::abs(b));
  double scale = 1.0 + bnorm;

  // row activities
  std::vector<double> ax(m, 0.0);
  for (const auto& t : p.entries) ax[t.row] += t.value * r.primal[t.col];

  for (int i = 0; i < m; ++i) {
    double viol = 0;
    switch (p.sense[i]) {
      case RowSense::LE: viol = std::max(0.0, ax[i] - p.rhs[i]); break;
      case RowSense::GE: viol = std::max(0.0, p.rhs[i] - ax[i]); break;
      case RowSense::EQ: viol = std::abs(ax[i] - p.rhs[i]); break;
    }
    rep.max_primal_residual = std::max(rep.max_primal_residual, viol);
    if (viol > tol * scale)
      rep.violations.push_back("row " + p.row_names[i] + " violated by " +
                               std::to_string(viol));
  }
  for (int j = 0; j < n; ++j) {
    double v = std::max(std::max(0.0, p.lower[j] - r.primal[j]),
                        std::max(0.0, r.primal[j] - p.upper[j]));
    rep.max_bound_violation = std::max(rep.max_bound_violation, v);
    if (v > tol * (1.0 + std::abs(r.primal[j])))
      rep.violations.push_back("bounds of " + p.col_names[j] + " violated by " +
                               std::to_string(v));
  }

  // dual feasibility and complementary slackness (minimization convention;
  // a maximization problem is checked on its negated form)
  std::vector<double> y = r.dual;
  std::vector<double> c(p.cost);
  if (p.maximize) {
    for (auto& v : y) v = -v;
    for (auto& v : c) v = -v;
  }
  for (int i = 0; i < m; ++i) {
    if (p.sense[i] == RowSense::LE && y[i] > tol)
      rep.violations.push_back("dual sign on <= row " + p.row_names[i]);
    if (p.sense[i] == RowSense::GE && y[i] < -tol)
      rep.violations.push_back("dual sign on >= row " + p.row_names[i]);
    double slack = p.rhs[i] - ax[i];
    if (std::abs(y[i] * slack) > tol * scale * (1.0 + std::abs(y[i])))
      rep.violations.push_back("complementary slackness on row " + p.row_names[i]);
  }

  std::vector<double> d(c);
  for (const auto& t : p.entries) d[t.col] -= t.value * y[t.row];
  double dual_obj = 0;
  for (int i = 0; i < m; ++i) dual_obj += y[i] * p.rhs[i];
  for (int j = 0; j < n; ++j) {
    double dn = 1.0 + std::abs(c[j]);
    if (d[j] > tol * dn) {
      if (p.lower[j] <= -kInf)
        rep.violations.push_back("dual infeasibility on free-below column " +
                                 p.col_names[j]);
      else {
        dual_obj += d[j] * p.lower[j];
        if (r.primal[j] - p.lower[j] > tol * (1.0 + std::abs(p.lower[j])) &&
            d[j] * (r.primal[j] - p.lower[j]) > tol * dn)
          rep.violations.push_back("complementary slackness on column " + p.col_names[j]);
      }
    } else if (d[j] < -tol * dn) {
      if (p.upper[j] >= kInf)
        rep.violations.push_back("dual infeasibility on free-above column " +
                                 p.col_names[j]);
      else {
        dual_obj += d[j] * p.upper[j];
        if (p.upper[j] - r.primal[j] > tol * (1.0 + std::abs(p.upper[j])) &&
            -d[j] * (p.upper[j] - r.primal[j]) > tol * dn)
          rep.violations.push_back("complementary slackness on column " + p.col_names[j]);
      }
    }
  }

  double pobj = 0;
  for (int j = 0; j < n; ++j) pobj += c[j] * r.primal[j];
  rep.duality_gap = std::abs(pobj - dual_obj);
  if (rep.duality_gap > tol * (1.0 + std::abs(pobj)))
    rep.violations.push_back("duality gap " + std::to_string(rep.duality_gap));
  return rep;
}

}  // namespace h2plan::lp
