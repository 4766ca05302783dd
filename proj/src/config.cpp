#include "edss/config.hpp"

#include <cerrno>
#include <cstdlib>

#include "edss/csv.hpp"
#include "edss/errors.hpp"

namespace edss {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& raw) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(raw.c_str(), &end);
  if (errno != 0 || raw.empty() || end != raw.c_str() + raw.size()) {
    throw Error(Err::InvalidConfig, "key '" + key + "': bad number '" + raw + "'");
  }
  return v;
}

}  // namespace

Config Config::from_file(const std::string& path) {
  return from_text(read_text_file(path), path);
}

Config Config::from_text(const std::string& text, const std::string& origin) {
  Config config;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trimmed(line);
    if (line.empty()) continue;

    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(Err::ParseError,
                  origin + " line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    std::string key = trimmed(line.substr(0, eq));
    std::string value = trimmed(line.substr(eq + 1));
    if (key.empty()) {
      throw Error(Err::ParseError, origin + " line " + std::to_string(line_no) + ": empty key");
    }
    if (!config.entries_.emplace(key, value).second) {
      throw Error(Err::ParseError,
                  origin + " line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
  }
  return config;
}

bool Config::has(const std::string& key) const {
  return entries_.find(key) != entries_.end();
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
  consumed_[key] = true;
  auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

std::int64_t Config::get_int(const std::string& key, std::int64_t fallback) const {
  consumed_[key] = true;
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(it->second.c_str(), &end, 10);
  if (errno != 0 || it->second.empty() || end != it->second.c_str() + it->second.size()) {
    throw Error(Err::InvalidConfig, "key '" + key + "': bad integer '" + it->second + "'");
  }
  return v;
}

double Config::get_double(const std::string& key, double fallback) const {
  consumed_[key] = true;
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  return to_double(key, it->second);
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  consumed_[key] = true;
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  if (it->second == "true" || it->second == "1" || it->second == "yes") return true;
  if (it->second == "false" || it->second == "0" || it->second == "no") return false;
  throw Error(Err::InvalidConfig, "key '" + key + "': bad boolean '" + it->second + "'");
}

std::vector<double> Config::get_doubles(const std::string& key,
                                        const std::vector<double>& fallback) const {
  consumed_[key] = true;
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  std::vector<double> out;
  std::string field;
  for (char c : it->second + ",") {
    if (c == ',') {
      field = trimmed(field);
      if (field.empty()) {
        throw Error(Err::InvalidConfig, "key '" + key + "': empty list entry");
      }
      out.push_back(to_double(key, field));
      field.clear();
    } else {
      field += c;
    }
  }
  return out;
}

void Config::reject_unknown_keys() const {
  for (const auto& [key, value] : entries_) {
    if (consumed_.find(key) == consumed_.end()) {
      throw Error(Err::InvalidConfig, "unknown config key '" + key + "'");
    }
  }
}

}  // namespace edss
