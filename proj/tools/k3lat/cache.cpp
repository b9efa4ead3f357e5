#include "cache.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace k3lat::cli {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path Cache::path_for(const std::string& kind, const std::string& key) const {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(kind + "\n" + key)));
  return dir_ / (kind + "-" + hex + ".json");
}

std::optional<nlohmann::ordered_json> Cache::get(const std::string& kind, const std::string& key,
                                                 std::string& warnings) const {
  const auto path = path_for(kind, key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  auto doc = nlohmann::ordered_json::parse(buf.str(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("key") || !doc.contains("value") ||
      doc["key"] != key) {
    warnings += "warning: ignoring corrupt cache entry " + path.string() + "\n";
    return std::nullopt;
  }
  return doc["value"];
}

void Cache::put(const std::string& kind, const std::string& key, const nlohmann::ordered_json& value,
                std::string& warnings) const {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    warnings += "warning: cannot create cache directory " + dir_.string() + ": " + ec.message() + "\n";
    return;
  }
  const auto path = path_for(kind, key);
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp);
    nlohmann::ordered_json doc;
    doc["key"] = key;
    doc["value"] = value;
    out << doc.dump() << "\n";
    if (!out) {
      warnings += "warning: cannot write cache entry " + tmp.string() + "\n";
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    warnings += "warning: cannot store cache entry " + path.string() + ": " + ec.message() + "\n";
    std::filesystem::remove(tmp, ec);
  }
}

}  // namespace k3lat::cli
