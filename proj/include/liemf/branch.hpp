#pragma once

#include "liemf/irrep_sum.hpp"

namespace liemf {

// One simple factor of a Levi subgroup: the retained nodes of the parent
// diagram (0-based, in the factor's own Bourbaki order) and their induced
// classical type.
struct LeviFactor {
  Family family;
  int rank;
  std::vector<int> nodes;
};

struct ParabolicSpec {
  SystemPtr sys;
  std::vector<int> removed; // 0-based, sorted
  std::vector<LeviFactor> factors;

  // removed_labels are 1-based simple-root indices.
  static ParabolicSpec make(SystemPtr sys, std::vector<int> removed_labels);
  int levi_rank() const {
    int r = 0;
    for (auto& f : factors) r += f.rank;
    return r;
  }
};

// Key of one Levi constituent: the factor highest weights concatenated in
// factor order (doubled labels), plus the central charge vector (doubled
// coefficients of the removed simple roots in lambda - weight).
struct LeviTerm {
  Weight factor_labels;
  Weight charge;
};

struct LeviTermLess {
  bool operator()(const LeviTerm& a, const LeviTerm& b) const {
    if (WeightLess{}(a.charge, b.charge)) return true;
    if (WeightLess{}(b.charge, a.charge)) return false;
    return WeightLess{}(a.factor_labels, b.factor_labels);
  }
};

using LeviDecomposition = std::map<LeviTerm, Mult, LeviTermLess>;

LeviDecomposition levi_restrict(const Weight& lambda, const ParabolicSpec& P,
                                const Limits& lim = {});

// Levels: Levi constituents grouped by the total removed-root coefficient.
// levels[d] holds the degree-d piece (so levels[0] is the top quotient).
struct LevelDecomposition {
  ParabolicSpec parabolic;
  std::vector<std::map<Weight, Mult, WeightLess>> levels; // factor_labels -> mult
};

LevelDecomposition levels(const Weight& lambda, const ParabolicSpec& P, const Limits& lim = {});

// Fast path for type A with the last node removed: Levi constituents by the
// one-row interlacing rule.  Entry d is the degree-d piece as a module over
// A_{rank-1}.  Requires rank >= 2.
std::vector<IrrepSum> levels_a_endnode(const SystemPtr& sys, const Weight& lambda);

// Highest weight of the maximal-S-value Levi constituent of the top level of
// the last factor, for a self-dual dominant delta of A_{l+1} under the
// end-node parabolic.  Also reports the number k of that factor.
struct TopFactor {
  Weight weight; // over A_l
  long k;
};
TopFactor level_top_factor(const SystemPtr& a_sys, const Weight& delta);

BigInt level_dim(const ParabolicSpec& P, const std::map<Weight, Mult, WeightLess>& level);

} // namespace liemf
