#include "liemf/character.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

namespace liemf {

namespace {

std::mutex g_sys_mutex;
std::map<std::pair<char, int>, SystemPtr> g_systems;

struct CharKey {
  Family f;
  int rank;
  Weight w;
  bool operator<(const CharKey& o) const {
    if (f != o.f) return f < o.f;
    if (rank != o.rank) return rank < o.rank;
    return WeightLess{}(w, o.w);
  }
};

std::mutex g_char_mutex;
std::map<CharKey, CharPtr> g_chars;

} // namespace

SystemPtr get_system(Family f, int rank) {
  std::lock_guard<std::mutex> lock(g_sys_mutex);
  auto key = std::make_pair(static_cast<char>(f), rank);
  auto it = g_systems.find(key);
  if (it != g_systems.end()) return it->second;
  auto sys = std::make_shared<RootSystem>(RootSystem::build(f, rank));
  g_systems.emplace(key, sys);
  return sys;
}

BigInt weyl_dim(const RootSystem& R, const Weight& lambda) {
  if (!is_dominant(lambda)) fail(Errc::NotDominant, "weyl_dim requires a dominant weight");
  Weight le = R.to_eps(lambda);
  Weight re = R.to_eps(R.rho());
  BigInt num = 1, den = 1;
  R.for_each_positive_root([&](const PosRoot& a) {
    Coord ll = 0, la = 0, ra = 0;
    for (int k = 0; k < a.ne; ++k) {
      auto [i, v] = a.eps2[k];
      ll += v * v;
      la += v * le[i];
      ra += v * re[i];
    }
    if (la == 0) return; // the ratio degenerates to 1
    // true coroot pairings: 2*(w,alpha)/(alpha,alpha)
    Coord n = 2 * (la + ra) / ll;
    Coord d = 2 * ra / ll;
    num *= n;
    den *= d;
  });
  BigInt q, r;
  divide_qr(num, den, q, r);
  if (r != 0) fail(Errc::NonIntegralDivision, "Weyl dimension product not integral");
  return q;
}

namespace {

// All dominant weights <= lambda (root-lattice order).  Covers in the
// dominance order on dominant weights differ by a positive root, so a BFS
// with positive-root steps reaches every one of them.
std::vector<Weight> dominant_weights_below(const RootSystem& R, const Weight& lambda,
                                           const Limits& lim) {
  WeightMap<char> seen;
  std::vector<Weight> out{lambda};
  seen.emplace(lambda, 1);
  for (size_t q = 0; q < out.size(); ++q) {
    if ((q & 1023) == 0 && lim.out_of_time())
      fail(Errc::ResourceLimit, "wall-clock budget exceeded");
    Weight mu = out[q];
    R.for_each_positive_root([&](const PosRoot& a) {
      Weight nu = mu;
      for (int k = 0; k < a.nf; ++k) nu[a.fund2[k].first] -= 2 * a.fund2[k].second;
      if (!is_dominant(nu)) return;
      if (seen.emplace(nu, 1).second) {
        out.push_back(std::move(nu));
        if (static_cast<std::int64_t>(out.size()) > lim.max_dominant_entries)
          fail(Errc::ResourceLimit, "dominant support cap exceeded");
      }
    });
  }
  return out;
}

} // namespace

CharPtr dominant_character(const SystemPtr& sys, const Weight& lambda, const Limits& lim) {
  if (!is_dominant(lambda)) fail(Errc::NotDominant, "character of a non-dominant weight");
  if (!is_integral(lambda)) fail(Errc::NonRepresentable, "character of a non-integral weight");
  CharKey key{sys->family(), sys->rank(), lambda};
  {
    std::lock_guard<std::mutex> lock(g_char_mutex);
    auto it = g_chars.find(key);
    if (it != g_chars.end()) return it->second;
  }

  const RootSystem& R = *sys;
  auto doms = dominant_weights_below(R, lambda, lim);
  // Order by decreasing height so every recursion input is already known.
  std::sort(doms.begin(), doms.end(), [&](const Weight& a, const Weight& b) {
    Coord ha = R.height2(a), hb = R.height2(b);
    if (ha != hb) return ha > hb;
    return WeightLess{}(a, b);
  });

  auto result = std::make_shared<DominantCharacter>();
  result->sys = sys;
  auto& table = result->table;
  table.reserve(doms.size());
  table[lambda] = 1;

  Weight lr = lambda + R.rho();
  Weight lr_eps = R.to_eps(lr);

  for (size_t qi = 1; qi < doms.size(); ++qi) {
    if ((qi & 255) == 0 && lim.out_of_time())
      fail(Errc::ResourceLimit, "wall-clock budget exceeded");
    const Weight& mu = doms[qi];
    Weight mu_eps = R.to_eps(mu);
    Coord num2 = 0; // doubled^2 scale, consistent on both sides
    Weight nu(R.rank()), nu_eps(R.eps_dim());
    R.for_each_positive_root([&](const PosRoot& a) {
      nu = mu;
      nu_eps = mu_eps;
      for (Coord k = 1;; ++k) {
        for (int t = 0; t < a.nf; ++t) nu[a.fund2[t].first] += 2 * a.fund2[t].second;
        for (int t = 0; t < a.ne; ++t) nu_eps[a.eps2[t].first] += a.eps2[t].second;
        Mult m;
        {
          auto [dom, sg] = R.dominant_conjugate(nu);
          (void)sg;
          auto it = table.find(dom);
          if (it == table.end()) break; // weight strings are contiguous
          m = it->second;
        }
        Coord pair2 = 0;
        for (int t = 0; t < a.ne; ++t) pair2 += a.eps2[t].second * nu_eps[a.eps2[t].first];
        num2 += m * pair2;
      }
    });
    // Denominator (lambda+mu+2rho, lambda-mu): expand lambda-mu over the
    // simple roots so every epsilon pairing is against a traceless vector
    // (the type-A epsilon section is only canonical up to trace shifts).
    Weight x_eps = lr_eps + R.to_eps(mu + R.rho());
    Weight rc = R.root_coordinates(lambda - mu);
    Coord den2 = 0;
    for (int i = 0; i < R.rank(); ++i) {
      if (rc[i] == 0) continue;
      Coord s = 0;
      for (auto& [j, v] : R.simples_eps()[static_cast<size_t>(i)]) s += v * x_eps[j];
      den2 += rc[i] * s;
    }
    if (den2 == 0 || (4 * num2) % den2 != 0)
      fail(Errc::NonIntegralDivision, "Freudenthal recursion not integral");
    Mult m = 4 * num2 / den2;
    if (m != 0) table[mu] = m;
  }

  std::lock_guard<std::mutex> lock(g_char_mutex);
  auto [it, inserted] = g_chars.emplace(key, result);
  return inserted ? result : it->second;
}

BigInt char_dim(const DominantCharacter& c) {
  BigInt d = 0;
  for (auto& [w, m] : c.table) d += m * c.sys->orbit_size(w);
  return d;
}

void for_each_full_weight(
    const DominantCharacter& c,
    const std::function<void(const RootSystem::SparseOrbitElement&, Mult)>& fn) {
  for (auto& [w, m] : c.table) {
    Mult mm = m;
    c.sys->for_each_orbit_sparse(w, [&](const RootSystem::SparseOrbitElement& el) { fn(el, mm); });
  }
}

DominantCharacter adams(const DominantCharacter& c, long k) {
  if (k < 1) fail(Errc::Usage, "Adams operation needs k >= 1");
  DominantCharacter out;
  out.sys = c.sys;
  out.table.reserve(c.table.size());
  for (auto& [w, m] : c.table) out.table.emplace(Weight(w * k), m);
  return out;
}

void add_scaled(DominantCharacter& into, const DominantCharacter& c, Mult scale) {
  for (auto& [w, m] : c.table) {
    Mult& slot = into.table[w];
    slot = checked_add(slot, checked_mul(m, scale));
    if (slot == 0) into.table.erase(w);
  }
}

} // namespace liemf
