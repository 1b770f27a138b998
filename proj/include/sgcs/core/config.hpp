#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sgcs {

/// Key-value text config ("key = value" lines, '#' comments). Used for
/// scenario files and experiment parameter blocks.
class KvConfig {
 public:
  KvConfig() = default;

  static KvConfig parse_file(const std::string& path);
  static KvConfig parse_string(const std::string& text);

  bool has(const std::string& key) const { return kv_.count(key) > 0; }

  std::string get_str(const std::string& key, const std::string& fallback) const;
  std::string require_str(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  /// Comma-separated list of doubles.
  std::vector<double> get_doubles(const std::string& key) const;

  void set(const std::string& key, const std::string& value) { kv_[key] = value; }

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace sgcs
