#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace liemf {

// Resource caps.  Hitting one raises Errc::ResourceLimit; callers that
// implement tri-state verdicts catch it and report Unknown.
struct Limits {
  std::int64_t max_dominant_entries = 50'000'000; // dominant support of one character
  std::int64_t max_enumeration = 25'000'000;      // full weight multiset walk
  std::int64_t max_levels = 64;                   // level-peeling depth
  std::optional<std::chrono::steady_clock::time_point> deadline;

  bool out_of_time() const {
    return deadline && std::chrono::steady_clock::now() > *deadline;
  }
  void set_budget_seconds(double s) {
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(s));
  }
};

} // namespace liemf
