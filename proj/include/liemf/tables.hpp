#pragma once

#include "liemf/mfcheck.hpp"

namespace liemf {

// One concrete (X, delta, lambda) triple from the classification catalog.
// Over-cap parameter values are emitted with skipped=true so no instance is
// ever silently dropped.
struct TableInstance {
  int l = 0;
  Weight delta;
  Weight lambda; // over Y
  std::string row_id;
  std::string text; // printable instance, e.g. "A5 d=0,0,1,0,0 C10 l1+l2"
  bool skipped = false;
  std::string skip_reason;
};

struct TableRow {
  int table = 0;
  std::string id;
  // Instances whose Y-module dimension is at most `cap`; parameterized
  // families are additionally bounded by the catalog's parameter ranges.
  std::function<std::vector<TableInstance>(const BigInt& cap)> instantiate;
};

const std::vector<TableRow>& classification_rows();

// The 36 composition factors of the half-spin restriction through the
// two-level quartic embedding of A_7, with the level each first appears at.
const std::vector<std::pair<Weight, long>>& spin_a7_factors();

struct InstanceReport {
  TableInstance inst;
  Verdict verdict = Verdict::Unknown;
  bool skipped = false; // over-cap parameter, reported rather than dropped
  std::string note;
  double seconds = 0;
};

std::vector<InstanceReport> verify_table(int table, int row /* -1 = all */, const BigInt& cap,
                                         const MfLimits& lim = {}, int threads = 1);

// Round-trip helpers for row identifiers.
std::string row_to_string(const TableRow& row);
const TableRow* row_from_string(const std::string& id);

} // namespace liemf
