#include "liemf/cache.hpp"

#include <fstream>
#include <system_error>

namespace liemf {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  enabled_ = !ec && std::filesystem::is_directory(dir_);
}

Json Cache::make_key(const std::string& op, const Json& inputs) {
  Json key;
  key["op"] = op;
  key["inputs"] = inputs;
  key["algo_version"] = kAlgoVersion;
  return key;
}

std::filesystem::path Cache::path_for(const Json& key) const {
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(key.dump())));
  return dir_ / (std::string(buf) + ".json");
}

std::optional<Json> Cache::get(const Json& key) const {
  if (!enabled_) return std::nullopt;
  auto p = path_for(key);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  Json stored = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (stored.is_discarded() || !stored.contains("key") || stored["key"] != key ||
      !stored.contains("value")) {
    // corrupt or collided entry: evict, never trust
    std::error_code ec;
    std::filesystem::remove(p, ec);
    return std::nullopt;
  }
  return stored["value"];
}

void Cache::put(const Json& key, const Json& value) const {
  if (!enabled_) return;
  Json stored;
  stored["key"] = key;
  stored["value"] = value;
  auto p = path_for(key);
  auto tmp = p;
  tmp += ".tmp" + std::to_string(static_cast<unsigned>(::getpid()));
  {
    std::ofstream out(tmp);
    out << stored.dump();
  }
  std::error_code ec;
  std::filesystem::rename(tmp, p, ec); // atomic replacement keeps readers safe
  if (ec) std::filesystem::remove(tmp, ec);
}

} // namespace liemf
