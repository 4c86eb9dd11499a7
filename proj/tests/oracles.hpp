#pragma once

// Test-only oracles, independent of the Freudenthal/Klimyk implementation
// paths they are used to check.

#include <map>

#include "liemf/character.hpp"
#include "liemf/irrep_sum.hpp"

namespace liemf::oracle {

using Poly = WeightOrderedMap<Mult>; // exponential lattice polynomial

// Alternating Weyl sum of e^{w(v)} over the orbit of a regular dominant v.
inline Poly alternating_sum(const RootSystem& R, const Weight& v) {
  Poly p;
  R.for_each_orbit_eps(v, [&](const Weight& eps) {
    Weight w = R.from_eps(eps);
    auto [dom, sign] = R.dominant_conjugate(w);
    (void)dom;
    p[w] += sign;
  });
  return p;
}

// Full weight multiset of V(lambda) by exact division of the two alternating
// sums (Weyl character formula evaluated in the group ring).
inline Poly full_character(const SystemPtr& sys, const Weight& lambda) {
  const RootSystem& R = *sys;
  Poly num = alternating_sum(R, lambda + R.rho());
  Poly den = alternating_sum(R, R.rho());
  // Leading term of den is e^{rho} with coefficient 1; divide greedily by the
  // height order.
  auto height_top = [&](const Poly& p) {
    auto best = p.end();
    Coord hb = 0;
    for (auto it = p.begin(); it != p.end(); ++it) {
      if (it->second == 0) continue;
      Coord h = R.height2(it->first);
      if (best == p.end() || h > hb || (h == hb && WeightLess{}(best->first, it->first))) {
        best = it;
        hb = h;
      }
    }
    return best;
  };
  Poly q;
  Weight rho = R.rho();
  for (;;) {
    auto top = height_top(num);
    if (top == num.end()) break;
    Weight shift = top->first - rho;
    Mult c = top->second;
    q[shift] += c;
    for (auto& [w, m] : den) {
      if (m == 0) continue;
      num[shift + w] -= c * m;
    }
  }
  for (auto it = q.begin(); it != q.end();) {
    if (it->second == 0) it = q.erase(it);
    else ++it;
  }
  return q;
}

inline Poly dominant_part(const Poly& p) {
  Poly d;
  for (auto& [w, m] : p)
    if (is_dominant(w) && m != 0) d[w] = m;
  return d;
}

// Pointwise product of full weight multisets.
inline Poly convolve(const Poly& a, const Poly& b) {
  Poly p;
  for (auto& [wa, ma] : a)
    for (auto& [wb, mb] : b) {
      Mult& s = p[wa + wb];
      s += ma * mb;
    }
  for (auto it = p.begin(); it != p.end();) {
    if (it->second == 0) it = p.erase(it);
    else ++it;
  }
  return p;
}

// Peel a full character into irreducibles using only oracle characters.
inline IrrepSum peel(const SystemPtr& sys, Poly full) {
  const RootSystem& R = *sys;
  IrrepSum out = IrrepSum::zero(sys);
  for (;;) {
    // maximal dominant weight by height
    bool found = false;
    Weight top;
    Coord hb = 0;
    for (auto& [w, m] : full) {
      if (m == 0 || !is_dominant(w)) continue;
      Coord h = R.height2(w);
      if (!found || h > hb || (h == hb && WeightLess{}(top, w))) {
        top = w;
        hb = h;
        found = true;
      }
    }
    if (!found) break;
    Mult c = full[top];
    out.add(top, c);
    for (auto& [w, m] : full_character(sys, top)) full[w] -= c * m;
  }
  return out;
}

} // namespace liemf::oracle
