#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "h2plan/common.hpp"

namespace h2plan::lp {

inline constexpr double kInf = 1e30;  // treated as infinity for bounds

enum class RowSense : char { LE = 'L', EQ = 'E', GE = 'G' };

struct Triplet {
  int row;
  int col;
  double value;
};

// Sparse LP in triplet form: min (or max) c'x  s.t.  Ax {<=,=,>=} b, l<=x<=u.
struct LinearProgram {
  bool maximize = false;
  std::string name = "h2plan";

  std::vector<std::string> col_names;
  std::vector<double> cost;
  std::vector<double> lower;
  std::vector<double> upper;

  std::vector<std::string> row_names;
  std::vector<RowSense> sense;
  std::vector<double> rhs;

  std::vector<Triplet> entries;

  int num_cols() const { return static_cast<int>(col_names.size()); }
  int num_rows() const { return static_cast<int>(row_names.size()); }

  int add_col(const std::string& n, double lo, double hi, double c) {
    col_names.push_back(n);
    lower.push_back(lo);
    upper.push_back(hi);
    cost.push_back(c);
    return num_cols() - 1;
  }
  int add_row(const std::string& n, RowSense s, double b) {
    row_names.push_back(n);
    sense.push_back(s);
    rhs.push_back(b);
    return num_rows() - 1;
  }
  void add_entry(int r, int c, double v) {
    if (v != 0.0) entries.push_back({r, c, v});
  }

  void validate() const {
    if (cost.size() != col_names.size() || lower.size() != col_names.size() ||
        upper.size() != col_names.size())
      throw ValidationError("lp: inconsistent column arrays");
    if (sense.size() != row_names.size() || rhs.size() != row_names.size())
      throw ValidationError("lp: inconsistent row arrays");
    std::map<std::string, int> seen;
    for (int j = 0; j < num_cols(); ++j) {
      if (!std::isfinite(cost[j])) throw ValidationError("lp: non-finite cost " + col_names[j]);
      if (lower[j] > upper[j])
        throw ValidationError("lp: empty bound interval on " + col_names[j]);
      if (++seen[col_names[j]] > 1)
        throw ValidationError("lp: duplicate column name " + col_names[j]);
    }
    seen.clear();
    for (int i = 0; i < num_rows(); ++i) {
      if (!std::isfinite(rhs[i])) throw ValidationError("lp: non-finite rhs " + row_names[i]);
      if (++seen[row_names[i]] > 1)
        throw ValidationError("lp: duplicate row name " + row_names[i]);
    }
    for (const auto& t : entries) {
      if (t.row < 0 || t.row >= num_rows() || t.col < 0 || t.col >= num_cols())
        throw ValidationError("lp: triplet index out of range");
      if (!std::isfinite(t.value)) throw ValidationError("lp: non-finite coefficient");
    }
  }
};

enum class SolveStatus { optimal, infeasible, unbounded };

inline const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unbounded: return "unbounded";
  }
  return "?";
}

struct SolveResult {
  SolveStatus status = SolveStatus::optimal;
  double objective = 0;
  std::vector<double> primal;        // per column
  std::vector<double> dual;          // per row
  std::vector<double> reduced_cost;  // per column
  std::vector<int> basis;            // basic variable index per row (diagnostics)
  std::vector<double> certificate;   // Farkas ray (infeasible) / primal ray (unbounded)
  int64_t iterations = 0;

  double value(const LinearProgram& p, const std::string& col) const {
    for (int j = 0; j < p.num_cols(); ++j)
      if (p.col_names[j] == col) return primal[j];
    throw ValidationError("no column named " + col);
  }
  double row_dual(const LinearProgram& p, const std::string& row) const {
    for (int i = 0; i < p.num_rows(); ++i)
      if (p.row_names[i] == row) return dual[i];
    throw ValidationError("no row named " + row);
  }
};

}  // namespace h2plan::lp
