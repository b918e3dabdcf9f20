#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "h2plan/common.hpp"

namespace h2plan::manifest {

// Run manifest: records option values plus content digests of every input
// and output file so a finished run directory is tamper-evident. Digest is
// 64-bit FNV-1a, rendered as 16 hex chars.

inline std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for digest");
  std::ostringstream ss;
  ss << in.rdbuf();
  return fnv1a_hex(ss.str());
}

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> options;
  std::map<std::string, std::string> input_digests;   // path -> digest
  std::map<std::string, std::string> output_digests;  // relative path -> digest
  std::string solver_status;
  double objective = 0;
  double wall_seconds = 0;

  void add_input(const std::string& path) { input_digests[path] = digest_file(path); }
  void add_output(const std::string& dir, const std::string& rel) {
    output_digests[rel] = digest_file((std::filesystem::path(dir) / rel).string());
  }
};

inline void write(const RunManifest& m, const std::string& path) {
  nlohmann::json j;
  j["command"] = m.command;
  j["options"] = m.options;
  j["inputs"] = m.input_digests;
  j["outputs"] = m.output_digests;
  j["solver_status"] = m.solver_status;
  j["objective"] = m.objective;
  j["wall_seconds"] = m.wall_seconds;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(2) << '\n';
}

inline RunManifest read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open manifest " + path);
  nlohmann::json j;
  in >> j;
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.options = j.at("options").get<std::map<std::string, std::string>>();
  m.input_digests = j.at("inputs").get<std::map<std::string, std::string>>();
  m.output_digests = j.at("outputs").get<std::map<std::string, std::string>>();
  m.solver_status = j.at("solver_status").get<std::string>();
  m.objective = j.at("objective").get<double>();
  m.wall_seconds = j.at("wall_seconds").get<double>();
  return m;
}

// Re-digests every output listed in the manifest; returns the relative paths
// whose bytes no longer match (empty = intact).
inline std::vector<std::string> verify_outputs(const RunManifest& m,
                                               const std::string& dir) {
  std::vector<std::string> bad;
  for (const auto& [rel, digest] : m.output_digests) {
    std::string path = (std::filesystem::path(dir) / rel).string();
    std::error_code ec;
    if (!std::filesystem::exists(path, ec) || digest_file(path) != digest)
      bad.push_back(rel);
  }
  return bad;
}

// Advisory single-writer lock on an output directory. Holds a lock file for
// the object's lifetime; a stale file from a crashed run must be removed by
// hand (the error says so).
class DirectoryLock {
 public:
  explicit DirectoryLock(const std::string& dir)
      : path_((std::filesystem::path(dir) / ".h2plan.lock").string()) {
    std::filesystem::create_directories(dir);
    if (std::filesystem::exists(path_))
      throw IoError("output directory " + dir +
                    " is locked by another run (remove " + path_ +
                    " if that run crashed)");
    std::ofstream out(path_);
    if (!out) throw IoError("cannot create lock file " + path_);
    out << "locked\n";
  }
  ~DirectoryLock() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  DirectoryLock(const DirectoryLock&) = delete;
  DirectoryLock& operator=(const DirectoryLock&) = delete;

 private:
  std::string path_;
};

}  // namespace h2plan::manifest
