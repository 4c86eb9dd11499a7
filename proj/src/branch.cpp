#include "liemf/branch.hpp"

#include <algorithm>
#include <numeric>

namespace liemf {

ParabolicSpec ParabolicSpec::make(SystemPtr sys, std::vector<int> removed_labels) {
  ParabolicSpec P;
  P.sys = std::move(sys);
  const int n = P.sys->rank();
  if (removed_labels.empty()) fail(Errc::Usage, "a parabolic needs at least one removed node");
  for (int r : removed_labels) {
    if (r < 1 || r > n) fail(Errc::Usage, "removed node out of range");
    P.removed.push_back(r - 1);
  }
  std::sort(P.removed.begin(), P.removed.end());
  P.removed.erase(std::unique(P.removed.begin(), P.removed.end()), P.removed.end());

  std::vector<bool> gone(n, false);
  for (int r : P.removed) gone[r] = true;
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (gone[s] || seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = true;
    for (size_t q = 0; q < comp.size(); ++q)
      for (int j = 0; j < n; ++j)
        if (!gone[j] && !seen[j] && P.sys->adjacent(comp[q], j)) {
          seen[j] = true;
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    LeviFactor f;
    f.rank = static_cast<int>(comp.size());
    f.nodes = comp;
    bool has_last = comp.back() == n - 1;
    bool has_two_last = f.rank >= 2 && comp[f.rank - 2] == n - 2 && has_last;
    switch (P.sys->family()) {
      case Family::A: f.family = Family::A; break;
      case Family::B: f.family = (has_last && f.rank >= 2) ? Family::B : Family::A; break;
      case Family::C: f.family = (has_last && f.rank >= 2) ? Family::C : Family::A; break;
      case Family::D:
        f.family = (has_two_last && f.rank >= 3) ? Family::D : Family::A;
        break;
    }
    P.factors.push_back(std::move(f));
  }
  std::sort(P.factors.begin(), P.factors.end(),
            [](const LeviFactor& a, const LeviFactor& b) { return a.nodes[0] < b.nodes[0]; });
  return P;
}

namespace {

// Shared accumulation: stream the full weight multiset of V(lambda), keep the
// Levi-dominant weights, key them by (factor labels, charge-projection).
template <class KeyFn, class Map>
void accumulate_levi(const Weight& lambda, const ParabolicSpec& P, const Limits& lim,
                     KeyFn&& key_of, Map& raw) {
  const RootSystem& R = *P.sys;
  if (weyl_dim(R, lambda) > lim.max_enumeration)
    fail(Errc::ResourceLimit, "Levi restriction would enumerate too many weights");
  CharPtr ch = dominant_character(P.sys, lambda, lim);

  const int n = R.rank();
  std::vector<int> keep;
  for (auto& f : P.factors) keep.insert(keep.end(), f.nodes.begin(), f.nodes.end());

  Weight eps(R.eps_dim());
  Weight w(n);
  for_each_full_weight(*ch, [&](const RootSystem::SparseOrbitElement& el, Mult m) {
    eps.setConstant(el.base2);
    for (auto& [i, v] : el.entries) eps[i] = v;
    w = R.from_eps(eps);
    for (int i : keep)
      if (w[i] < 0) return;
    Weight diff = lambda - w;
    Weight rc = R.root_coordinates(diff);
    auto key = key_of(w, rc);
    auto& slot = raw[std::move(key)];
    slot = checked_add(slot, m);
  });
}

// Peel a raw Levi-dominant weight count table into irreducible constituents.
// Keys are concatenated factor labels; height is the sum of per-factor
// heights, a linear extension of the product dominance order.
struct FactorChars {
  const ParabolicSpec& P;
  std::vector<SystemPtr> systems;

  explicit FactorChars(const ParabolicSpec& p) : P(p) {
    for (auto& f : P.factors) systems.push_back(get_system(f.family, f.rank));
  }

  Coord height(const Weight& concat) const {
    Coord h = 0;
    int off = 0;
    for (size_t i = 0; i < P.factors.size(); ++i) {
      h += systems[i]->height2(concat.segment(off, P.factors[i].rank));
      off += P.factors[i].rank;
    }
    return h;
  }

  // Outer product of the factor dominant characters of `hw`, visiting each
  // (concatenated dominant weight, multiplicity).
  void for_each_product_weight(const Weight& hw, const Limits& lim,
                               const std::function<void(const Weight&, Mult)>& fn) const {
    std::vector<CharPtr> chars;
    int off = 0;
    for (size_t i = 0; i < P.factors.size(); ++i) {
      chars.push_back(dominant_character(systems[i], hw.segment(off, P.factors[i].rank), lim));
      off += P.factors[i].rank;
    }
    Weight buf(hw.size());
    std::function<void(size_t, int, Mult)> rec = [&](size_t fi, int o, Mult m) {
      if (fi == chars.size()) {
        fn(buf, m);
        return;
      }
      for (auto& [w, c] : chars[fi]->table) {
        buf.segment(o, P.factors[fi].rank) = w;
        rec(fi + 1, o + P.factors[fi].rank, checked_mul(m, c));
      }
    };
    rec(0, 0, 1);
  }
};

std::map<Weight, Mult, WeightLess> peel_levi(const FactorChars& fc,
                                             std::map<Weight, Mult, WeightLess>&& raw,
                                             const Limits& lim) {
  using Key = std::pair<Coord, Weight>;
  struct KeyGreater {
    bool operator()(const Key& a, const Key& b) const {
      if (a.first != b.first) return a.first > b.first;
      return WeightLess{}(b.second, a.second);
    }
  };
  std::map<Key, Mult, KeyGreater> work;
  for (auto& [w, m] : raw)
    if (m != 0) work.emplace(Key{fc.height(w), w}, m);

  std::map<Weight, Mult, WeightLess> out;
  while (!work.empty()) {
    auto top = work.begin();
    Weight hw = top->first.second;
    Mult mult = top->second;
    if (mult < 0) fail(Errc::InconsistentResidual, "negative Levi constituent");
    out[hw] = mult;
    fc.for_each_product_weight(hw, lim, [&](const Weight& w, Mult m) {
      Key k{fc.height(w), w};
      auto it = work.find(k);
      Mult nv = checked_add(it == work.end() ? 0 : it->second, checked_mul(-mult, m));
      if (nv == 0) {
        if (it != work.end()) work.erase(it);
      } else if (it == work.end()) {
        work.emplace(k, nv);
      } else {
        it->second = nv;
      }
    });
  }
  return out;
}

} // namespace

LeviDecomposition levi_restrict(const Weight& lambda, const ParabolicSpec& P, const Limits& lim) {
  if (!is_dominant(lambda)) fail(Errc::NotDominant, "levi_restrict of a non-dominant weight");
  FactorChars fc(P);
  const int n = P.sys->rank();

  std::vector<int> keep;
  for (auto& f : P.factors) keep.insert(keep.end(), f.nodes.begin(), f.nodes.end());

  // Group raw counts by central charge first, then peel each block.
  std::map<Weight, std::map<Weight, Mult, WeightLess>, WeightLess> blocks;
  {
    std::map<std::pair<Weight, Weight>, Mult,
             bool (*)(const std::pair<Weight, Weight>&, const std::pair<Weight, Weight>&)>
        raw(+[](const std::pair<Weight, Weight>& a, const std::pair<Weight, Weight>& b) {
          if (WeightLess{}(a.first, b.first)) return true;
          if (WeightLess{}(b.first, a.first)) return false;
          return WeightLess{}(a.second, b.second);
        });
    accumulate_levi(
        lambda, P, lim,
        [&](const Weight& w, const Weight& rc) {
          Weight charge(static_cast<Eigen::Index>(P.removed.size()));
          for (size_t i = 0; i < P.removed.size(); ++i) charge[i] = rc[P.removed[i]];
          Weight labels(static_cast<Eigen::Index>(keep.size()));
          for (size_t i = 0; i < keep.size(); ++i) labels[i] = w[keep[i]];
          return std::make_pair(std::move(charge), std::move(labels));
        },
        raw);
    for (auto& [key, m] : raw) blocks[key.first][key.second] = m;
  }

  LeviDecomposition out;
  for (auto& [charge, tbl] : blocks) {
    auto peeled = peel_levi(fc, std::move(tbl), lim);
    for (auto& [labels, m] : peeled)
      if (m != 0) out.emplace(LeviTerm{labels, charge}, m);
  }
  (void)n;
  return out;
}

LevelDecomposition levels(const Weight& lambda, const ParabolicSpec& P, const Limits& lim) {
  if (!is_dominant(lambda)) fail(Errc::NotDominant, "levels of a non-dominant weight");
  FactorChars fc(P);
  std::vector<int> keep;
  for (auto& f : P.factors) keep.insert(keep.end(), f.nodes.begin(), f.nodes.end());

  std::map<Coord, std::map<Weight, Mult, WeightLess>> per_level;
  {
    std::map<std::pair<Weight, Weight>, Mult,
             bool (*)(const std::pair<Weight, Weight>&, const std::pair<Weight, Weight>&)>
        raw(+[](const std::pair<Weight, Weight>& a, const std::pair<Weight, Weight>& b) {
          if (WeightLess{}(a.first, b.first)) return true;
          if (WeightLess{}(b.first, a.first)) return false;
          return WeightLess{}(a.second, b.second);
        });
    accumulate_levi(
        lambda, P, lim,
        [&](const Weight& w, const Weight& rc) {
          Coord d = 0;
          for (int r : P.removed) d += rc[r];
          Weight dd(1);
          dd[0] = d;
          Weight labels(static_cast<Eigen::Index>(keep.size()));
          for (size_t i = 0; i < keep.size(); ++i) labels[i] = w[keep[i]];
          return std::make_pair(std::move(dd), std::move(labels));
        },
        raw);
    for (auto& [key, m] : raw) per_level[key.first[0]][key.second] = m;
  }

  LevelDecomposition out;
  out.parabolic = P;
  if (per_level.empty()) return out;
  // Level degrees are doubled root coefficients, hence even and >= 0.
  Coord max_d = per_level.rbegin()->first;
  out.levels.resize(static_cast<size_t>(max_d / 2) + 1);
  for (auto& [d2, tbl] : per_level) {
    if (d2 < 0 || d2 % 2) fail(Errc::Mismatch, "unexpected level grading");
    out.levels[static_cast<size_t>(d2 / 2)] = peel_levi(fc, std::move(tbl), lim);
  }
  return out;
}

BigInt level_dim(const ParabolicSpec& P, const std::map<Weight, Mult, WeightLess>& level) {
  FactorChars fc(P);
  BigInt total = 0;
  for (auto& [labels, m] : level) {
    BigInt d = 1;
    int off = 0;
    for (size_t i = 0; i < P.factors.size(); ++i) {
      d *= weyl_dim(*fc.systems[i], labels.segment(off, P.factors[i].rank));
      off += P.factors[i].rank;
    }
    total += m * d;
  }
  return total;
}

std::vector<IrrepSum> levels_a_endnode(const SystemPtr& sys, const Weight& lambda) {
  if (sys->family() != Family::A || sys->rank() < 2)
    fail(Errc::Usage, "interlacing levels need type A of rank >= 2");
  if (!is_dominant(lambda) || !is_integral(lambda))
    fail(Errc::NotDominant, "interlacing levels of a non-dominant weight");
  const int n = sys->rank();
  SystemPtr levi = get_system(Family::A, n - 1);

  // Partition form (true values), p[n] = 0.
  std::vector<Coord> p(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) p[i] = p[i + 1] + lambda[i] / 2;
  Coord total = std::accumulate(p.begin(), p.end(), Coord{0});

  Coord max_drop = 0;
  for (int i = 0; i < n; ++i) max_drop += p[i] - p[i + 1] > 0 ? p[i] - p[i + 1] : 0;
  std::vector<IrrepSum> out(static_cast<size_t>(max_drop) + 1, IrrepSum::zero(levi));

  // Odometer over interlacing q: p[i+1] <= q[i] <= p[i].
  std::vector<Coord> q(n);
  for (int i = 0; i < n; ++i) q[i] = p[i];
  for (;;) {
    Coord qsum = std::accumulate(q.begin(), q.end(), Coord{0});
    Weight w(n - 1);
    for (int i = 0; i + 1 < n; ++i) w[i] = 2 * (q[i] - q[i + 1]);
    out[static_cast<size_t>(total - qsum)].add(w, 1);
    int i = n - 1;
    while (i >= 0 && q[i] == p[i + 1]) {
      q[i] = p[i];
      --i;
    }
    if (i < 0) break;
    --q[i];
  }
  return out;
}

TopFactor level_top_factor(const SystemPtr& a_sys, const Weight& delta) {
  if (a_sys->family() != Family::A) fail(Errc::Usage, "level_top_factor needs type A");
  const int m = a_sys->rank(); // m = l + 1
  if (!is_dominant(delta)) fail(Errc::NotDominant, "delta must be dominant");
  if (!WeightEq{}(delta, reversed(delta))) fail(Errc::NotSelfDual, "delta must be self-dual");
  if (m < 2) fail(Errc::Usage, "level_top_factor needs rank >= 2");

  Weight top(m - 1);
  long k = 0;
  if (m % 2 == 0) {
    // delta = (a_1..a_s, a_s..a_1)
    int s = m / 2;
    for (int i = 0; i < s; ++i) k += delta[i] / 2;
    top = delta.head(m - 1);
    top[s - 1] = 2 * delta[s - 1]; // 2 a_s in the middle
    for (int i = s; i < m - 1; ++i) top[i] = delta[i + 1];
  } else {
    int s = (m - 1) / 2; // labels a_1..a_s, c, a_s..a_1
    Coord c = delta[s] / 2;
    for (int i = 0; i < s; ++i) k += delta[i] / 2;
    k += c / 2; // floor(c/2) for both parities
    top = delta.head(m - 1);
    if (c % 2 == 0) {
      top[s - 1] += c; // a_s + c/2, doubled
      top[s] = top[s - 1];
    } else {
      top[s - 1] += c - 1; // a_s + (c-1)/2
      top[s] = top[s - 1] + 2;
    }
    for (int i = s + 1; i < m - 1; ++i) top[i] = delta[i + 1];
  }
  return {top, k};
}

} // namespace liemf
