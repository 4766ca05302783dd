#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace edss {

// Flat `key = value` configuration ('#' starts a comment).  Typed getters
// with defaults; reading tracks which keys were consumed so unknown (likely
// misspelled) keys can be rejected in one place.
class Config {
 public:
  Config() = default;

  static Config from_file(const std::string& path);   // Errors: IoError, ParseError
  static Config from_text(const std::string& text, const std::string& origin = "<config>");

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  double get_double(const std::string& key, double fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  // Comma-separated doubles.
  std::vector<double> get_doubles(const std::string& key,
                                  const std::vector<double>& fallback) const;

  // Errors: InvalidConfig naming the first key never consumed by a getter.
  void reject_unknown_keys() const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
  mutable std::map<std::string, bool> consumed_;
};

}  // namespace edss
