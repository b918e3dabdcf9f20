#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "h2plan/common.hpp"

namespace h2plan::csv {

// Minimal CSV support: comma separated, no quoting (the file formats used
// here never embed commas), '#' comment lines and blank lines skipped.

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int col(const std::string& name) const {
    for (size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<int>(i);
    throw ValidationError("csv: missing column '" + name + "'");
  }
  bool has_col(const std::string& name) const {
    for (const auto& h : header)
      if (h == name) return true;
    return false;
  }
};

inline std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline Table read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  Table t;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_line(line);
    if (!have_header) {
      t.header = std::move(fields);
      have_header = true;
    } else {
      t.rows.push_back(std::move(fields));
    }
  }
  if (!have_header) throw IoError("empty csv file " + path);
  return t;
}

inline double to_double(const std::string& s, const std::string& ctx) {
  if (s.empty()) throw ValidationError("csv: empty numeric field in " + ctx);
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw ValidationError("csv: bad number '" + s + "' in " + ctx);
    return v;
  } catch (const std::invalid_argument&) {
    throw ValidationError("csv: bad number '" + s + "' in " + ctx);
  }
}

inline bool to_bool(const std::string& s, const std::string& ctx) {
  if (s == "1" || s == "true" || s == "yes") return true;
  if (s == "0" || s == "false" || s == "no") return false;
  throw ValidationError("csv: bad bool '" + s + "' in " + ctx);
}

// Fixed numeric rendering so outputs are byte-stable across runs.
inline std::string num(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

// Round-trip-exact rendering for values that are read back (solutions, duals).
inline std::string num_exact(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class Writer {
 public:
  explicit Writer(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) throw IoError("cannot write " + path);
  }
  void row(const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ << ',';
      out_ << fields[i];
    }
    out_ << '\n';
  }
  std::ofstream& stream() { return out_; }

 private:
  std::ofstream out_;
};

}  // namespace h2plan::csv
