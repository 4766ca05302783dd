#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "edss/config.hpp"

namespace edss {

// FNV-1a 64-bit digest, hex-encoded; cheap and stable across platforms.
std::string fnv1a_hex(const std::string& bytes);

// Provenance record written next to every command's outputs: the config
// snapshot, input digests, seed, and every artifact emitted.
class RunManifest {
 public:
  RunManifest(const std::string& tool_version, const std::string& command, std::uint64_t seed);

  void set_config(const Config& config);
  void add_input(const std::string& path);     // digests the file's bytes
  void add_artifact(const std::string& path);  // output file, manifest-relative name
  void add_warning(const std::string& message);

  // Serialize as JSON (pretty, stable key order) and write to path; the
  // manifest lists itself last.
  void write(const std::string& path);

  const std::vector<std::string>& artifacts() const { return artifacts_; }

 private:
  std::string tool_version_;
  std::string command_;
  std::uint64_t seed_;
  std::map<std::string, std::string> config_;
  std::vector<std::pair<std::string, std::string>> inputs_;  // path, digest
  std::vector<std::string> artifacts_;
  std::vector<std::string> warnings_;
};

}  // namespace edss
