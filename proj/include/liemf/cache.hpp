#pragma once

#include <filesystem>
#include <optional>

#include "liemf/serialize.hpp"

namespace liemf {

// Content-addressed result store.  The fingerprint covers the operation, the
// system, the inputs, and the algorithm version, so stale math is invalidated
// by a version bump.  Writes go through a temp file and an atomic rename;
// entries that fail to parse or whose stored key disagrees are evicted.
class Cache {
public:
  static constexpr int kAlgoVersion = 1;

  Cache() = default; // disabled
  explicit Cache(std::filesystem::path dir);

  bool enabled() const { return enabled_; }

  std::optional<Json> get(const Json& key) const;
  void put(const Json& key, const Json& value) const;

  static Json make_key(const std::string& op, const Json& inputs);

private:
  std::filesystem::path path_for(const Json& key) const;
  bool enabled_ = false;
  std::filesystem::path dir_;
};

std::uint64_t fnv1a64(std::string_view s);

} // namespace liemf
