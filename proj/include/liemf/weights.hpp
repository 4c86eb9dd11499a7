#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

#include "liemf/errors.hpp"

namespace liemf {

// All weight coordinates are stored doubled, so that half-integral entries
// (spin weights in epsilon coordinates, intermediate pushforwards) remain
// exact integers.  A weight lies in the weight lattice iff every doubled
// entry is even.
using Coord = std::int64_t;
using Weight = Eigen::Matrix<Coord, Eigen::Dynamic, 1>;
using Mult = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

inline Weight weight_of(std::initializer_list<Coord> labels) {
  Weight w(static_cast<Eigen::Index>(labels.size()));
  Eigen::Index i = 0;
  for (Coord c : labels) w[i++] = 2 * c;
  return w;
}

inline Weight weight_from_labels(const std::vector<Coord>& labels) {
  Weight w(static_cast<Eigen::Index>(labels.size()));
  for (size_t i = 0; i < labels.size(); ++i) w[static_cast<Eigen::Index>(i)] = 2 * labels[i];
  return w;
}

inline Weight zero_weight(int rank) { return Weight::Zero(rank); }

// k-th fundamental weight (1-based), true value 1.
inline Weight fundamental(int rank, int k) {
  Weight w = Weight::Zero(rank);
  w[k - 1] = 2;
  return w;
}

inline bool is_dominant(const Weight& w) { return (w.array() >= 0).all(); }
inline bool is_integral(const Weight& w) {
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w[i] & 1) return false;
  return true;
}
inline bool is_zero(const Weight& w) { return (w.array() == 0).all(); }

inline Weight reversed(const Weight& w) { return w.reverse(); }

// True-value coordinate sum and nonzero count (S- and L-values).
inline Coord s_value(const Weight& w) {
  if (!is_dominant(w)) fail(Errc::NotDominant, "s_value requires a dominant weight");
  return w.sum() / 2;
}
inline int l_value(const Weight& w) {
  if (!is_dominant(w)) fail(Errc::NotDominant, "l_value requires a dominant weight");
  int n = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) n += (w[i] != 0);
  return n;
}

struct WeightHash {
  size_t operator()(const Weight& w) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      h ^= static_cast<std::uint64_t>(w[i]);
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};
struct WeightEq {
  bool operator()(const Weight& a, const Weight& b) const {
    return a.size() == b.size() && (a.array() == b.array()).all();
  }
};
struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

template <class V>
using WeightMap = std::unordered_map<Weight, V, WeightHash, WeightEq>;
template <class V>
using WeightOrderedMap = std::map<Weight, V, WeightLess>;

inline Mult checked_add(Mult a, Mult b) {
  Mult r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::MultiplicityOverflow, "multiplicity sum overflow");
  return r;
}
inline Mult checked_mul(Mult a, Mult b) {
  Mult r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::MultiplicityOverflow, "multiplicity product overflow");
  return r;
}

std::string to_label_string(const Weight& w);

} // namespace liemf
