#pragma once

#include <memory>

#include "liemf/limits.hpp"
#include "liemf/root_system.hpp"

namespace liemf {

using SystemPtr = std::shared_ptr<const RootSystem>;

// Interned root systems; cheap to pass around and hash-cons'd so memo tables
// can key on (family, rank).
SystemPtr get_system(Family f, int rank);

// A Weyl-invariant character stored on its dominant support only.
struct DominantCharacter {
  SystemPtr sys;
  WeightMap<Mult> table;

  bool genuine() const {
    for (auto& [w, m] : table)
      if (m < 0) return false;
    return true;
  }
};

using CharPtr = std::shared_ptr<const DominantCharacter>;

// Exact dimension of the irreducible with highest weight lambda.
BigInt weyl_dim(const RootSystem& R, const Weight& lambda);

// Freudenthal weight multiplicities; memoized per (system, lambda).
CharPtr dominant_character(const SystemPtr& sys, const Weight& lambda, const Limits& lim = {});

BigInt char_dim(const DominantCharacter& c);

// Streams the full weight multiset (orbit expansion of the dominant support).
// fn receives the epsilon-sparse orbit element and the multiplicity of its
// dominant representative.
void for_each_full_weight(const DominantCharacter& c,
                          const std::function<void(const RootSystem::SparseOrbitElement&, Mult)>& fn);

// Adams operation: scales every weight by k.
DominantCharacter adams(const DominantCharacter& c, long k);

void add_scaled(DominantCharacter& into, const DominantCharacter& c, Mult scale);

} // namespace liemf
