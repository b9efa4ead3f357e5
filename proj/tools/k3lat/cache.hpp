#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace k3lat::cli {

// On-disk memo for pure computations. Entries are files
// <kind>-<fnv1a(key)>.json holding {"key": ..., "value": ...}; a file whose
// key does not match, or that fails to parse, is reported and ignored.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);

  std::optional<nlohmann::ordered_json> get(const std::string& kind, const std::string& key, std::string& warnings) const;
  // Write-then-rename; failures become warnings.
  void put(const std::string& kind, const std::string& key, const nlohmann::ordered_json& value,
           std::string& warnings) const;

  std::filesystem::path path_for(const std::string& kind, const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

std::uint64_t fnv1a(const std::string& text);

}  // namespace k3lat::cli
