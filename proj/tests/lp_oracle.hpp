#pragma once

// Brute-force LP oracle used by the tests: enumerates every vertex of the
// feasible region (choices of tight rows plus variables fixed at a bound),
// independent of the simplex implementation it is checking.

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "h2plan/lp.hpp"

namespace oracle {

using h2plan::lp::LinearProgram;
using h2plan::lp::RowSense;

struct Vertex {
  std::vector<double> x;
  double obj;
  std::vector<int> tight_rows;
  std::vector<int> fixed_vars;  // at lower (encoded j) or upper (encoded j+n)
};

inline bool solve_dense(std::vector<std::vector<double>> a, std::vector<double> b,
                        std::vector<double>& x) {
  int n = static_cast<int>(b.size());
  x.assign(n, 0.0);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    double best = 1e-10;
    for (int r = col; r < n; ++r)
      if (std::abs(a[r][col]) > best) {
        best = std::abs(a[r][col]);
        piv = r;
      }
    if (piv < 0) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = a[r][col] / a[col][col];
      if (f == 0) continue;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

struct OracleResult {
  bool feasible = false;
  double objective = std::numeric_limits<double>::infinity();
  Vertex best;
};

// All variables must have finite bounds (the region is then bounded, so an
// optimum, when feasible, is attained at a vertex).
inline OracleResult enumerate_vertices(const LinearProgram& p) {
  int n = p.num_cols(), m = p.num_rows();
  std::vector<std::vector<double>> A(m, std::vector<double>(n, 0.0));
  for (const auto& t : p.entries) A[t.row][t.col] += t.value;

  OracleResult res;
  double sign = p.maximize ? -1.0 : 1.0;

  std::vector<int> rowsel;
  // enumerate subsets of rows of size r <= n
  std::vector<int> idx;
  auto check_point = [&](const std::vector<double>& x, const std::vector<int>& tr,
                         const std::vector<int>& fv) {
    const double tol = 1e-7;
    for (int j = 0; j < n; ++j)
      if (x[j] < p.lower[j] - tol || x[j] > p.upper[j] + tol) return;
    for (int i = 0; i < m; ++i) {
      double ax = 0;
      for (int j = 0; j < n; ++j) ax += A[i][j] * x[j];
      double s = 1.0 + std::abs(p.rhs[i]);
      if (p.sense[i] == RowSense::LE && ax > p.rhs[i] + tol * s) return;
      if (p.sense[i] == RowSense::GE && ax < p.rhs[i] - tol * s) return;
      if (p.sense[i] == RowSense::EQ && std::abs(ax - p.rhs[i]) > tol * s) return;
    }
    double obj = 0;
    for (int j = 0; j < n; ++j) obj += p.cost[j] * x[j];
    res.feasible = true;
    if (sign * obj < sign * res.objective - 1e-12) {
      res.objective = obj;
      res.best = {x, obj, tr, fv};
    }
  };

  // choose r tight rows, fix n-r variables at one of their bounds, solve
  std::vector<int> rows(m);
  for (int i = 0; i < m; ++i) rows[i] = i;

  std::vector<int> rowset;
  std::function<void(int, int)> pick_rows = [&](int start, int need) {
    if (need == 0) {
      int nfree = n - 0;
      int nfix = n - static_cast<int>(rowset.size());
      // choose nfix variables to fix
      std::vector<int> vars;
      std::function<void(int, int)> pick_vars = [&](int vstart, int vneed) {
        if (vneed == 0) {
          // each fixed var at lower or upper
          int k = static_cast<int>(vars.size());
          for (int mask = 0; mask < (1 << k); ++mask) {
            std::vector<double> fixedval(n, 0.0);
            std::vector<bool> isfixed(n, false);
            std::vector<int> fv;
            bool bad = false;
            for (int t = 0; t < k; ++t) {
              int j = vars[t];
              bool up = mask & (1 << t);
              double v = up ? p.upper[j] : p.lower[j];
              if (std::abs(v) >= h2plan::lp::kInf) { bad = true; break; }
              fixedval[j] = v;
              isfixed[j] = true;
              fv.push_back(up ? j + n : j);
            }
            if (bad) continue;
            // free variables solved from tight rows
            std::vector<int> freev;
            for (int j = 0; j < n; ++j)
              if (!isfixed[j]) freev.push_back(j);
            int fsz = static_cast<int>(freev.size());
            std::vector<std::vector<double>> M(fsz, std::vector<double>(fsz, 0.0));
            std::vector<double> rhs(fsz, 0.0);
            for (int r = 0; r < fsz; ++r) {
              int row = rowset[r];
              rhs[r] = p.rhs[row];
              for (int j = 0; j < n; ++j) {
                if (isfixed[j]) rhs[r] -= A[row][j] * fixedval[j];
              }
              for (int c = 0; c < fsz; ++c) M[r][c] = A[row][freev[c]];
            }
            std::vector<double> sol;
            if (fsz > 0 && !solve_dense(M, rhs, sol)) continue;
            std::vector<double> x(n);
            for (int j = 0; j < n; ++j) x[j] = fixedval[j];
            for (int c = 0; c < fsz; ++c) x[freev[c]] = sol[c];
            check_point(x, rowset, fv);
          }
          return;
        }
        for (int v = vstart; v <= n - vneed; ++v) {
          vars.push_back(v);
          pick_vars(v + 1, vneed - 1);
          vars.pop_back();
        }
      };
      pick_vars(0, nfix);
      (void)nfree;
      return;
    }
    for (int i = start; i <= m - need; ++i) {
      rowset.push_back(i);
      pick_rows(i + 1, need - 1);
      rowset.pop_back();
    }
  };
  for (int r = 0; r <= std::min(n, m); ++r) pick_rows(0, r);
  return res;
}

// Duals at a nondegenerate optimal vertex: solves c = A_R' y + sum d_j e_j
// over the active set. Returns nullopt when the vertex is degenerate.
inline std::optional<std::vector<double>> vertex_duals(const LinearProgram& p,
                                                       const std::vector<double>& x) {
  int n = p.num_cols(), m = p.num_rows();
  std::vector<std::vector<double>> A(m, std::vector<double>(n, 0.0));
  for (const auto& t : p.entries) A[t.row][t.col] += t.value;
  const double tol = 1e-6;
  std::vector<int> tight_rows, bound_vars;
  for (int i = 0; i < m; ++i) {
    double ax = 0;
    for (int j = 0; j < n; ++j) ax += A[i][j] * x[j];
    if (std::abs(ax - p.rhs[i]) < tol * (1.0 + std::abs(p.rhs[i]))) tight_rows.push_back(i);
  }
  for (int j = 0; j < n; ++j)
    if (std::abs(x[j] - p.lower[j]) < tol || std::abs(x[j] - p.upper[j]) < tol)
      bound_vars.push_back(j);
  if (static_cast<int>(tight_rows.size() + bound_vars.size()) != n) return std::nullopt;

  // unknowns: y for tight rows, d for bound vars; equations: c_j = sum A_ij y_i + d_j
  int k = n;
  std::vector<std::vector<double>> M(k, std::vector<double>(k, 0.0));
  std::vector<double> rhs(k, 0.0);
  for (int j = 0; j < n; ++j) {
    rhs[j] = p.cost[j];
    for (size_t r = 0; r < tight_rows.size(); ++r) M[j][r] = A[tight_rows[r]][j];
    for (size_t b = 0; b < bound_vars.size(); ++b)
      if (bound_vars[b] == j) M[j][tight_rows.size() + b] = 1.0;
  }
  std::vector<double> sol;
  if (!solve_dense(M, rhs, sol)) return std::nullopt;
  std::vector<double> y(m, 0.0);
  for (size_t r = 0; r < tight_rows.size(); ++r) y[tight_rows[r]] = sol[r];
  return y;
}

}  // namespace oracle
