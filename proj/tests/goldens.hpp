#pragma once

// Golden decompositions of the small symmetric/alternating powers of
// V(omega_1 + omega_m) and friends, shared by the unit and acceptance suites.

#include <string>
#include <vector>

#include "liemf/irrep_sum.hpp"

namespace liemf::golden {

inline Weight pat(int rank, std::initializer_list<std::pair<int, Coord>> entries) {
  Weight w = Weight::Zero(rank);
  for (auto& [i, v] : entries) w[i - 1] += 2 * v;
  return w;
}

inline IrrepSum sum_of(SystemPtr sys, std::initializer_list<std::pair<Weight, Mult>> terms) {
  IrrepSum s = IrrepSum::zero(sys);
  for (auto& [w, m] : terms) s.add(w, m);
  return s;
}

struct Plethysm {
  std::string name;
  bool exterior;
  long k;
  SystemPtr sys;
  Weight input;
  IrrepSum expected;
};

inline std::vector<Plethysm> plethysm_cases() {
  std::vector<Plethysm> v;
  auto add = [&](std::string name, bool ext, long k, int m, Weight in, IrrepSum want) {
    v.push_back({std::move(name), ext, k, get_system(Family::A, m), std::move(in),
                 std::move(want)});
  };

  {
    auto a2 = get_system(Family::A, 2);
    Weight adj = pat(2, {{1, 1}, {2, 1}});
    add("S2(11)", false, 2, 2, adj,
        sum_of(a2, {{pat(2, {{1, 2}, {2, 2}}), 1}, {adj, 1}, {zero_weight(2), 1}}));
    add("L2(11)", true, 2, 2, adj,
        sum_of(a2, {{pat(2, {{1, 3}}), 1}, {pat(2, {{2, 3}}), 1}, {adj, 1}}));
    add("L3(11)", true, 3, 2, adj,
        sum_of(a2, {{adj, 1},
                    {pat(2, {{1, 2}, {2, 2}}), 1},
                    {pat(2, {{1, 3}}), 1},
                    {pat(2, {{2, 3}}), 1},
                    {zero_weight(2), 1}}));
    add("S3(11)", false, 3, 2, adj,
        sum_of(a2, {{weight_of({3, 3}), 1},
                    {weight_of({2, 2}), 1},
                    {weight_of({1, 1}), 1},
                    {weight_of({3, 0}), 1},
                    {weight_of({0, 3}), 1},
                    {zero_weight(2), 1}}));
  }

  for (int m : {3, 4, 5, 6}) {
    auto am = get_system(Family::A, m);
    Weight in = pat(m, {{1, 1}, {m, 1}});
    add("S2(10..01) m=" + std::to_string(m), false, 2, m, in,
        sum_of(am, {{pat(m, {{1, 2}, {m, 2}}), 1},
                    {in, 1},
                    {pat(m, {{2, 1}, {m - 1, 1}}), 1},
                    {zero_weight(m), 1}}));
    add("L2(10..01) m=" + std::to_string(m), true, 2, m, in,
        sum_of(am, {{pat(m, {{2, 1}, {m, 2}}), 1}, {pat(m, {{1, 2}, {m - 1, 1}}), 1}, {in, 1}}));
  }

  {
    auto a3 = get_system(Family::A, 3);
    add("L3(101)", true, 3, 3, weight_of({1, 0, 1}),
        sum_of(a3, {{weight_of({1, 0, 1}), 1},
                    {weight_of({0, 2, 0}), 1},
                    {weight_of({1, 2, 1}), 1},
                    {weight_of({2, 0, 2}), 1},
                    {weight_of({2, 1, 0}), 1},
                    {weight_of({0, 1, 2}), 1},
                    {weight_of({4, 0, 0}), 1},
                    {weight_of({0, 0, 4}), 1},
                    {zero_weight(3), 1}}));
    add("S3(101)", false, 3, 3, weight_of({1, 0, 1}),
        sum_of(a3, {{weight_of({3, 0, 3}), 1},
                    {weight_of({2, 0, 2}), 1},
                    {weight_of({1, 0, 1}), 2},
                    {weight_of({1, 2, 1}), 1},
                    {weight_of({0, 1, 2}), 1},
                    {weight_of({2, 1, 0}), 1},
                    {zero_weight(3), 1}}));
  }
  {
    auto a4 = get_system(Family::A, 4);
    add("S3(1001)", false, 3, 4, weight_of({1, 0, 0, 1}),
        sum_of(a4, {{weight_of({3, 0, 0, 3}), 1},
                    {weight_of({2, 0, 0, 2}), 1},
                    {weight_of({1, 0, 0, 1}), 2},
                    {weight_of({1, 1, 1, 1}), 1},
                    {weight_of({0, 1, 0, 2}), 1},
                    {weight_of({2, 0, 1, 0}), 1},
                    {weight_of({0, 1, 1, 0}), 1},
                    {zero_weight(4), 1}}));
  }

  for (int m : {4, 5, 6}) {
    auto am = get_system(Family::A, m);
    Weight in = pat(m, {{1, 1}, {m, 1}});
    add("L3(10..01) m=" + std::to_string(m), true, 3, m, in,
        sum_of(am, {{pat(m, {{1, 1}, {2, 1}, {m - 1, 1}, {m, 1}}), 1},
                    {pat(m, {{1, 2}, {m, 2}}), 1},
                    {in, 1},
                    {pat(m, {{2, 1}, {m - 1, 1}}), 1},
                    {pat(m, {{1, 3}, {m - 2, 1}}), 1},
                    {pat(m, {{3, 1}, {m, 3}}), 1},
                    {pat(m, {{1, 2}, {m - 1, 1}}), 1},
                    {pat(m, {{2, 1}, {m, 2}}), 1},
                    {zero_weight(m), 1}}));
  }
  for (int m : {5, 6}) {
    auto am = get_system(Family::A, m);
    Weight in = pat(m, {{1, 1}, {m, 1}});
    add("S3(10..01) m=" + std::to_string(m), false, 3, m, in,
        sum_of(am, {{pat(m, {{1, 3}, {m, 3}}), 1},
                    {pat(m, {{1, 2}, {m, 2}}), 1},
                    {in, 2},
                    {pat(m, {{2, 1}, {m - 1, 1}}), 1},
                    {pat(m, {{3, 1}, {m - 2, 1}}), 1},
                    {pat(m, {{1, 1}, {2, 1}, {m - 1, 1}, {m, 1}}), 1},
                    {pat(m, {{1, 2}, {m - 1, 1}}), 1},
                    {pat(m, {{2, 1}, {m, 2}}), 1},
                    {zero_weight(m), 1}}));
  }
  return v;
}

// Containment checks: (input, k, weight, minimum multiplicity).
struct Containment {
  std::string name;
  bool exterior;
  long k;
  SystemPtr sys;
  Weight input;
  Weight inside;
  Mult at_least;
};

inline std::vector<Containment> plethysm_containments() {
  std::vector<Containment> v;
  auto a2 = get_system(Family::A, 2);
  auto a3 = get_system(Family::A, 3);
  v.push_back({"S4(101) >= (202)^3", false, 4, a3, weight_of({1, 0, 1}), weight_of({2, 0, 2}), 3});
  v.push_back({"S5(1001) >= (3003)^3", false, 5, get_system(Family::A, 4),
               weight_of({1, 0, 0, 1}), weight_of({3, 0, 0, 3}), 3});
  v.push_back({"S6(11) >= (33)^3", false, 6, a2, weight_of({1, 1}), weight_of({3, 3}), 3});
  v.push_back({"L3(12) >= (33)^2", true, 3, a2, weight_of({1, 2}), weight_of({3, 3}), 2});
  v.push_back({"L3(21) >= (33)^2", true, 3, a2, weight_of({2, 1}), weight_of({3, 3}), 2});
  return v;
}

} // namespace liemf::golden
