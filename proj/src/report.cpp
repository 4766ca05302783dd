#include "edss/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include <json.hpp>

#include "edss/csv.hpp"

namespace edss {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

RunManifest::RunManifest(const std::string& tool_version, const std::string& command,
                         std::uint64_t seed)
    : tool_version_(tool_version), command_(command), seed_(seed) {}

void RunManifest::set_config(const Config& config) {
  config_.clear();
  for (const auto& [key, value] : config.entries()) config_[key] = value;
}

void RunManifest::add_input(const std::string& path) {
  inputs_.emplace_back(path, fnv1a_hex(read_text_file(path)));
}

void RunManifest::add_artifact(const std::string& path) { artifacts_.push_back(path); }

void RunManifest::add_warning(const std::string& message) { warnings_.push_back(message); }

void RunManifest::write(const std::string& path) {
  add_artifact(path);

  nlohmann::ordered_json doc;
  doc["tool_version"] = tool_version_;
  doc["command"] = command_;
  doc["seed"] = seed_;

  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  doc["generated_at"] = stamp;

  doc["config"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config_) doc["config"][key] = value;

  doc["inputs"] = nlohmann::ordered_json::array();
  for (const auto& [input, digest] : inputs_) {
    doc["inputs"].push_back({{"path", input}, {"fnv1a64", digest}});
  }

  doc["artifacts"] = artifacts_;
  doc["warnings"] = warnings_;

  write_text_file(path, doc.dump(2) + "\n");
}

}  // namespace edss
