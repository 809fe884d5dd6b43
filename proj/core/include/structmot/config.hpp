#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>

#include "structmot/tracker.hpp"

namespace structmot {

// Flat `key=value` config text: one pair per line, '#' comments, blank lines
// ignored. Used for tracker configs and synthetic scenarios.
std::map<std::string, std::string> parse_kv_file(const std::filesystem::path& path);
std::map<std::string, std::string> parse_kv_text(const std::string& text);

// Typed accessor over a parsed kv map that remembers which keys were read and
// rejects leftovers (typo protection).
class KvReader {
 public:
  explicit KvReader(const std::map<std::string, std::string>& kv) : kv_(kv) {}

  bool get(const std::string& key, int& out);
  bool get(const std::string& key, std::uint64_t& out);
  bool get(const std::string& key, double& out);
  bool get(const std::string& key, bool& out);
  bool get(const std::string& key, std::string& out);

  // Throws DataError naming any key that was never consumed.
  void finish(const std::string& what) const;

 private:
  const std::string* find(const std::string& key);
  const std::map<std::string, std::string>& kv_;
  std::set<std::string> seen_;
};

// Tracker configuration from/to kv text. Unset keys keep their defaults;
// motion_scale=0 and phi_s=0 mean "derive from the image size".
TrackerConfig tracker_config_from_kv(const std::map<std::string, std::string>& kv);
TrackerConfig load_tracker_config(const std::filesystem::path& path);
std::string dump_tracker_config(const TrackerConfig& cfg);

}  // namespace structmot
