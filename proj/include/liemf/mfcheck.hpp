#pragma once

#include "liemf/embed.hpp"

namespace liemf {

enum class Strategy { Direct, Constructed, LevelPeel, Auto };
enum class Verdict { MF, NotMF, Unknown };

const char* to_string(Strategy s);
const char* to_string(Verdict v);

struct MfLimits : Limits {
  std::int64_t direct_dim_cap = 2'000'000;
};

struct MfReport {
  EmbeddingPtr E;
  Weight lambda;
  Verdict verdict = Verdict::Unknown;
  Strategy method = Strategy::Auto;
  IrrepSum factors;
  std::vector<std::pair<Weight, Mult>> witnesses; // multiplicity >= 2, sorted
  BigInt dimension;
  double seconds = 0;
  std::string note;
};

MfReport is_mf(const EmbeddingPtr& E, const Weight& lambda, Strategy strategy = Strategy::Auto,
               const MfLimits& lim = {});

// Cross-checks a restriction against the level ladder: each graded piece of
// V_Y(lambda) must equal the stacked own-levels of the found factors, and any
// repeated Levi constituent must obey the S-value growth bound.
struct ConsistencyReport {
  bool pass = false;
  std::string detail;
};
ConsistencyReport level_consistency_check(const EmbeddingPtr& E, const Weight& lambda,
                                          const IrrepSum& found, const MfLimits& lim = {});

// Bounded classification scan: every dominant lambda with S-value <= max_s and
// dim <= dim_cap is classified.
struct ScanResult {
  std::vector<Weight> mf;       // the multiplicity-free highest weights found
  std::vector<Weight> examined; // all candidates within bounds
  bool complete = true;         // false if any verdict was Unknown
  std::vector<MfReport> reports;
};
ScanResult scan_candidates(const EmbeddingPtr& E, Coord max_s, const BigInt& dim_cap,
                           const MfLimits& lim = {}, int threads = 1);

// Triality normalization for D_4 weights: outer automorphisms permute the
// labels at nodes 1, 3, 4; the canonical representative sorts them.
Weight normalize_triality_d4(const Weight& w);

} // namespace liemf
