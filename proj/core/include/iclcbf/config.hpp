#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace iclcbf {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key=value configuration with section prefixes ("icl.iterations=5").
// Lines starting with '#' are comments. Serialization is sorted, so
// parse -> serialize -> parse is the identity on the stored map.
class Config {
 public:
  Config() = default;

  static Config parse(const std::string& text);
  static Config parse_file(const std::string& path);

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  void set_double(const std::string& key, double value);
  void set_int(const std::string& key, int64_t value);
  void set_bool(const std::string& key, bool value);

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int64_t get_int(const std::string& key, int64_t fallback) const;
  uint64_t get_u64(const std::string& key, uint64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_double_list(const std::string& key,
                                      const std::vector<double>& fallback) const;

  // Entries of `other` win.
  void merge(const Config& other);

  std::string serialize() const;
  void write_file(const std::string& path) const;

  const std::map<std::string, std::string>& values() const { return values_; }

  bool operator==(const Config& other) const { return values_ == other.values_; }

 private:
  std::map<std::string, std::string> values_;
};

// Formats a double with enough digits that parsing recovers the exact bits.
std::string format_full(double value);

}  // namespace iclcbf
