#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "h2plan/common.hpp"
#include "h2plan/csv.hpp"
#include "h2plan/lp.hpp"

namespace h2plan::lp {

// Fixed-layout MPS writer. The layout is canonical so exports are bit-exact
// across platforms and re-exporting an imported file reproduces it byte for
// byte:
//   - sections: NAME, OBJSENSE, ROWS, COLUMNS, RHS, BOUNDS, ENDATA
//   - one coefficient per COLUMNS/RHS line, name fields left-justified to 16
//     characters (longer names extend the field), values rendered with %.12g
//   - rows in construction order; COLUMNS sorted by (column, row) with
//     duplicate triplets merged; zero RHS entries omitted
//   - bounds: FX when fixed, otherwise MI/LO/UP/FR relative to the [0, inf)
//     default, LO omitted when the lower bound is 0

namespace detail {

inline std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline std::string pad(const std::string& s, size_t w = 16) {
  if (s.size() >= w) return s + "  ";
  return s + std::string(w - s.size(), ' ');
}

}  // namespace detail

inline void export_model(const LinearProgram& p, std::ostream& out) {
  p.validate();
  using detail::fmt_num;
  using detail::pad;

  out << "NAME            " << p.name << "\n";
  out << "OBJSENSE\n    " << (p.maximize ? "MAX" : "MIN") << "\n";
  out << "ROWS\n";
  out << " N  COST\n";
  for (int i = 0; i < p.num_rows(); ++i)
    out << " " << static_cast<char>(p.sense[i]) << "  " << p.row_names[i] << "\n";

  // canonical triplet order: by column, then row, duplicates merged
  std::vector<Triplet> ts(p.entries);
  std::sort(ts.begin(), ts.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  std::vector<Triplet> merged;
  for (const auto& t : ts) {
    if (!merged.empty() && merged.back().col == t.col && merged.back().row == t.row)
      merged.back().value += t.value;
    else
      merged.push_back(t);
  }

  out << "COLUMNS\n";
  size_t k = 0;
  for (int j = 0; j < p.num_cols(); ++j) {
    if (p.cost[j] != 0)
      out << "    " << pad(p.col_names[j]) << pad("COST") << fmt_num(p.cost[j]) << "\n";
    for (; k < merged.size() && merged[k].col == j; ++k)
      if (merged[k].value != 0)
        out << "    " << pad(p.col_names[j]) << pad(p.row_names[merged[k].row])
            << fmt_num(merged[k].value) << "\n";
  }

  out << "RHS\n";
  for (int i = 0; i < p.num_rows(); ++i)
    if (p.rhs[i] != 0)
      out << "    " << pad("RHS") << pad(p.row_names[i]) << fmt_num(p.rhs[i]) << "\n";

  out << "BOUNDS\n";
  for (int j = 0; j < p.num_cols(); ++j) {
    double lo = p.lower[j], hi = p.upper[j];
    if (lo <= -kInf && hi >= kInf) {
      out << " FR " << pad("BND") << p.col_names[j] << "\n";
    } else if (lo == hi) {
      out << " FX " << pad("BND") << pad(p.col_names[j]) << fmt_num(lo) << "\n";
    } else {
      if (lo <= -kInf)
        out << " MI " << pad("BND") << p.col_names[j] << "\n";
      else if (lo != 0)
        out << " LO " << pad("BND") << pad(p.col_names[j]) << fmt_num(lo) << "\n";
      if (hi < kInf)
        out << " UP " << pad("BND") << pad(p.col_names[j]) << fmt_num(hi) << "\n";
    }
  }
  out << "ENDATA\n";
}

inline void export_model(const LinearProgram& p, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  export_model(p, f);
  if (!f.good()) throw IoError("write failed for " + path);
}

inline LinearProgram import_model(std::istream& in) {
  LinearProgram p;
  std::map<std::string, int> rows, cols;
  std::string line, section;
  auto tokens = [](const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> t;
    std::string w;
    while (iss >> w) t.push_back(w);
    return t;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '*') continue;
    if (line[0] != ' ') {
      auto t = tokens(line);
      section = t[0];
      if (section == "NAME" && t.size() > 1) p.name = t[1];
      if (section == "ENDATA") break;
      continue;
    }
    auto t = tokens(line);
    if (t.empty()) continue;
    if (section == "OBJSENSE") {
      p.maximize = t[0] == "MAX" || t[0] == "MAXIMIZE";
    } else if (section == "ROWS") {
      if (t.size() < 2) throw IoError("mps: malformed ROWS line");
      if (t[0] == "N") continue;  // objective row, coefficients go to cost
      RowSense s;
      if (t[0] == "L") s = RowSense::LE;
      else if (t[0] == "G") s = RowSense::GE;
      else if (t[0] == "E") s = RowSense::EQ;
      else throw IoError("mps: unknown row type " + t[0]);
      rows[t[1]] = p.add_row(t[1], s, 0.0);
    } else if (section == "COLUMNS") {
      if (t.size() < 3) throw IoError("mps: malformed COLUMNS line");
      auto [it, inserted] = cols.try_emplace(t[0], p.num_cols());
      if (inserted) p.add_col(t[0], 0.0, kInf, 0.0);
      int j = it->second;
      for (size_t f = 1; f + 1 < t.size(); f += 2) {
        double v = std::stod(t[f + 1]);
        if (t[f] == "COST")
          p.cost[j] = v;
        else {
          auto rit = rows.find(t[f]);
          if (rit == rows.end()) throw IoError("mps: unknown row " + t[f]);
          p.add_entry(rit->second, j, v);
        }
      }
    } else if (section == "RHS") {
      for (size_t f = 1; f + 1 < t.size(); f += 2) {
        auto rit = rows.find(t[f]);
        if (rit == rows.end()) throw IoError("mps: unknown rhs row " + t[f]);
        p.rhs[rit->second] = std::stod(t[f + 1]);
      }
    } else if (section == "BOUNDS") {
      if (t.size() < 3) throw IoError("mps: malformed BOUNDS line");
      auto cit = cols.find(t[2]);
      if (cit == cols.end()) throw IoError("mps: unknown bound column " + t[2]);
      int j = cit->second;
      const std::string& kind = t[0];
      double v = t.size() > 3 ? std::stod(t[3]) : 0.0;
      if (kind == "LO") p.lower[j] = v;
      else if (kind == "UP") p.upper[j] = v;
      else if (kind == "FX") p.lower[j] = p.upper[j] = v;
      else if (kind == "FR") { p.lower[j] = -kInf; p.upper[j] = kInf; }
      else if (kind == "MI") p.lower[j] = -kInf;
      else if (kind == "PL") p.upper[j] = kInf;
      else throw IoError("mps: unknown bound type " + kind);
    }
  }
  p.validate();
  return p;
}

inline LinearProgram import_model(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  return import_model(f);
}

// External-solver escape hatch: read back a solution produced outside the
// toolkit so analytics can run on paper-scale instances.
//   solution.csv : column,value     duals.csv : row,dual
inline SolveResult import_solution(const LinearProgram& p,
                                   const std::string& solution_csv,
                                   const std::string& duals_csv) {
  SolveResult r;
  r.status = SolveStatus::optimal;
  r.primal.assign(p.num_cols(), 0.0);
  r.dual.assign(p.num_rows(), 0.0);
  r.reduced_cost.assign(p.num_cols(), 0.0);
  std::map<std::string, int> cols, rows;
  for (int j = 0; j < p.num_cols(); ++j) cols[p.col_names[j]] = j;
  for (int i = 0; i < p.num_rows(); ++i) rows[p.row_names[i]] = i;

  auto sol = csv::read_file(solution_csv);
  int cc = sol.col("column"), cv = sol.col("value");
  for (const auto& row : sol.rows) {
    auto it = cols.find(row[cc]);
    if (it == cols.end()) throw ValidationError("solution.csv: unknown column " + row[cc]);
    r.primal[it->second] = csv::to_double(row[cv], solution_csv);
  }
  auto du = csv::read_file(duals_csv);
  int dc = du.col("row"), dv = du.col("dual");
  for (const auto& row : du.rows) {
    auto it = rows.find(row[dc]);
    if (it == rows.end()) throw ValidationError("duals.csv: unknown row " + row[dc]);
    r.dual[it->second] = csv::to_double(row[dv], duals_csv);
  }
  r.objective = 0;
  for (int j = 0; j < p.num_cols(); ++j) r.objective += p.cost[j] * r.primal[j];
  return r;
}

}  // namespace h2plan::lp
