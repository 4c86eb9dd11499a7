#include "liemf/irrep_sum.hpp"

#include <algorithm>
#include <sstream>

namespace liemf {

IrrepSum IrrepSum::irrep(SystemPtr s, const Weight& hw, Mult mult) {
  if (!is_dominant(hw)) fail(Errc::NotDominant, "irreducible with non-dominant highest weight");
  IrrepSum r{std::move(s), {}};
  if (mult != 0) r.terms.emplace(hw, mult);
  return r;
}

void IrrepSum::add(const Weight& w, Mult m) {
  if (m == 0) return;
  Mult& slot = terms[w];
  slot = checked_add(slot, m);
  if (slot == 0) terms.erase(w);
}

IrrepSum& IrrepSum::operator+=(const IrrepSum& o) {
  for (auto& [w, m] : o.terms) add(w, m);
  return *this;
}

IrrepSum& IrrepSum::operator-=(const IrrepSum& o) {
  for (auto& [w, m] : o.terms) add(w, -m);
  return *this;
}

std::string IrrepSum::str() const {
  if (terms.empty()) return "0 (empty)";
  // Highest terms first reads like a decomposition.
  std::vector<std::pair<Weight, Mult>> v(terms.begin(), terms.end());
  std::sort(v.begin(), v.end(), [&](auto& a, auto& b) {
    Coord ha = sys->height2(a.first), hb = sys->height2(b.first);
    if (ha != hb) return ha > hb;
    return WeightLess{}(b.first, a.first);
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [w, m] : v) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_label_string(w) << ")";
    if (m != 1) os << "^" << m;
  }
  return os.str();
}

BigInt dim(const IrrepSum& m) {
  BigInt d = 0;
  for (auto& [w, c] : m.terms) d += c * weyl_dim(*m.sys, w);
  return d;
}

DominantCharacter char_of(const IrrepSum& m, const Limits& lim) {
  DominantCharacter out;
  out.sys = m.sys;
  for (auto& [w, c] : m.terms) add_scaled(out, *dominant_character(m.sys, w, lim), c);
  return out;
}

IrrepSum decompose(const DominantCharacter& c, const Limits& lim) {
  IrrepSum out = IrrepSum::zero(c.sys);
  const RootSystem& R = *c.sys;
  // Height-ordered working copy; any linear extension of dominance works.
  using Key = std::pair<Coord, Weight>;
  struct KeyGreater {
    bool operator()(const Key& a, const Key& b) const {
      if (a.first != b.first) return a.first > b.first;
      return WeightLess{}(b.second, a.second);
    }
  };
  std::map<Key, Mult, KeyGreater> work;
  for (auto& [w, m] : c.table)
    if (m != 0) work.emplace(Key{R.height2(w), w}, m);

  while (!work.empty()) {
    auto top = work.begin();
    Weight hw = top->first.second;
    Mult mult = top->second;
    out.add(hw, mult);
    const DominantCharacter& hc = *dominant_character(c.sys, hw, lim);
    for (auto& [w, m] : hc.table) {
      Key k{R.height2(w), w};
      auto it = work.find(k);
      Mult nv = checked_add(it == work.end() ? 0 : it->second, checked_mul(-mult, m));
      if (nv == 0) {
        if (it != work.end()) work.erase(it);
      } else if (it == work.end()) {
        work.emplace(k, nv);
      } else {
        it->second = nv;
      }
    }
  }
  return out;
}

namespace {

// chi(t): the rho-shifted reflection of t into the dominant chamber, as a
// signed irreducible; zero on walls.  t is given rho-shifted already.
inline void accumulate_chi(const RootSystem& R, Weight t, Mult coeff, IrrepSum& into) {
  auto [dom, sign] = R.dominant_conjugate_strict(std::move(t));
  if (sign == 0) return;
  into.add(dom - R.rho(), sign > 0 ? coeff : -coeff);
}

// ch(V(kappa)) * M where M runs over a full weight multiset scaled by `scale`.
void klimyk_product(const DominantCharacter& multiset, long scale, const Weight& kappa,
                    Mult coeff, IrrepSum& into) {
  const RootSystem& R = *multiset.sys;
  Weight kr = kappa + R.rho();
  Weight t(R.rank());
  Weight eps(R.eps_dim());
  for_each_full_weight(multiset, [&](const RootSystem::SparseOrbitElement& el, Mult m) {
    eps.setConstant(el.base2 * scale);
    for (auto& [i, v] : el.entries) eps[i] = v * scale;
    t = kr + R.from_eps(eps);
    accumulate_chi(R, t, checked_mul(coeff, m), into);
  });
}

} // namespace

IrrepSum tensor(const IrrepSum& a, const IrrepSum& b, const Limits& lim) {
  if (a.sys != b.sys) fail(Errc::Usage, "tensor of modules over different systems");
  IrrepSum out = IrrepSum::zero(a.sys);
  for (auto& [wa, ma] : a.terms) {
    BigInt da = weyl_dim(*a.sys, wa);
    for (auto& [wb, mb] : b.terms) {
      BigInt db = weyl_dim(*b.sys, wb);
      const Weight& small = (da <= db) ? wa : wb;
      const Weight& big = (da <= db) ? wb : wa;
      BigInt small_dim = (da <= db) ? da : db;
      if (small_dim > lim.max_enumeration)
        fail(Errc::ResourceLimit, "tensor factor too large to enumerate");
      klimyk_product(*dominant_character(a.sys, small, lim), 1, big, checked_mul(ma, mb), out);
    }
  }
  return out;
}

namespace {

std::vector<IrrepSum> newton_powers(long k, const IrrepSum& m, bool exterior, const Limits& lim) {
  if (k < 0) fail(Errc::Usage, "negative power");
  if (!m.genuine()) fail(Errc::Usage, "sym/ext power of a virtual module");
  if (dim(m) > lim.max_enumeration) fail(Errc::ResourceLimit, "power base too large to enumerate");
  DominantCharacter base = char_of(m, lim);
  std::vector<IrrepSum> p;
  p.reserve(k + 1);
  p.push_back(IrrepSum::trivial(m.sys));
  for (long j = 1; j <= k; ++j) {
    if (lim.out_of_time()) fail(Errc::ResourceLimit, "wall-clock budget exceeded");
    IrrepSum acc = IrrepSum::zero(m.sys);
    for (long i = 1; i <= j; ++i) {
      Mult sign = (exterior && (i % 2 == 0)) ? -1 : 1;
      for (auto& [kappa, c] : p[j - i].terms)
        klimyk_product(base, i, kappa, checked_mul(sign, c), acc);
    }
    IrrepSum next = IrrepSum::zero(m.sys);
    for (auto& [w, c] : acc.terms) {
      if (c % j != 0) fail(Errc::NonIntegralDivision, "Newton identity division failed");
      next.add(w, c / j);
    }
    p.push_back(std::move(next));
  }
  return p;
}

} // namespace

IrrepSum sym_power(long k, const IrrepSum& m, const Limits& lim) {
  return newton_powers(k, m, false, lim).back();
}

IrrepSum ext_power(long k, const IrrepSum& m, const Limits& lim) {
  return newton_powers(k, m, true, lim).back();
}

std::vector<IrrepSum> ext_powers_up_to(long k, const IrrepSum& m, const Limits& lim) {
  return newton_powers(k, m, true, lim);
}

IrrepSum dual(const IrrepSum& m) {
  IrrepSum out = IrrepSum::zero(m.sys);
  for (auto& [w, c] : m.terms) out.add(m.sys->dual_weight(w), c);
  return out;
}

Coord s_value(const IrrepSum& m) {
  Coord s = 0;
  for (auto& [w, c] : m.terms) s = std::max(s, s_value(w));
  return s;
}

} // namespace liemf
