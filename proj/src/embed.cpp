#include "liemf/embed.hpp"

#include <algorithm>
#include <limits>

namespace liemf {

namespace {

// z = prod over positive roots of h_alpha(-1) acts on V(delta) by
// (-1)^{<delta, 2 rho^vee>}; the representation is symplectic when that sign
// is -1 and orthogonal when +1 (for self-dual delta).
int steinberg_sign_of(const RootSystem& X, const Weight& delta) {
  Coord e = 0;
  Weight de = X.to_eps(delta);
  X.for_each_positive_root([&](const PosRoot& a) {
    Coord ll = 0, la = 0;
    for (int k = 0; k < a.ne; ++k) {
      auto [i, v] = a.eps2[k];
      ll += v * v;
      la += v * de[i];
    }
    e += 2 * la / ll; // <delta, alpha^vee>
  });
  return (e % 2 == 0) ? 1 : -1;
}

} // namespace

EmbeddingPtr build_embedding(int l, const Weight& delta, const Limits& lim) {
  if (l < 0) fail(Errc::InvalidRank, "l must be nonnegative");
  auto E = std::make_shared<EmbeddingSpec>();
  E->l = l;
  E->x_sys = get_system(Family::A, l + 1);
  if (delta.size() != l + 1) fail(Errc::Usage, "delta has the wrong rank");
  if (!is_dominant(delta) || !is_integral(delta)) fail(Errc::NotDominant, "delta must be dominant");
  if (is_zero(delta)) fail(Errc::TrivialDelta, "delta must be nonzero");
  if (!WeightEq{}(delta, reversed(delta))) fail(Errc::NotSelfDual, "delta must be self-dual");
  E->delta = delta;
  E->dim_w = weyl_dim(*E->x_sys, delta);
  E->steinberg_sign = steinberg_sign_of(*E->x_sys, delta);

  BigInt half = E->dim_w / 2;
  if (half > std::numeric_limits<int>::max())
    fail(Errc::ResourceLimit, "embedding target rank too large");
  int n = static_cast<int>(half);
  bool odd = (E->dim_w % 2) != 0;
  Family yf;
  if (E->steinberg_sign < 0) {
    if (odd) fail(Errc::Mismatch, "symplectic module of odd dimension");
    yf = Family::C;
  } else {
    yf = odd ? Family::B : Family::D;
  }
  E->y_sys = get_system(yf, n);

  // Choose the torus map: walk the weights of W in (height, lex) descending
  // order, pairing each remaining weight with its negative.
  if (E->dim_w > lim.max_enumeration) fail(Errc::ResourceLimit, "W too large to enumerate");
  const RootSystem& X = *E->x_sys;
  WeightMap<Mult> remaining;
  {
    CharPtr ch = dominant_character(E->x_sys, delta, lim);
    Weight eps(X.eps_dim());
    for_each_full_weight(*ch, [&](const RootSystem::SparseOrbitElement& el, Mult m) {
      eps.setConstant(el.base2);
      for (auto& [i, v] : el.entries) eps[i] = v;
      Weight w = X.from_eps(eps);
      remaining[w] += m;
    });
  }
  std::vector<Weight> order;
  order.reserve(remaining.size());
  for (auto& [w, m] : remaining) order.push_back(w);
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    Coord ha = X.height2(a), hb = X.height2(b);
    if (ha != hb) return ha > hb;
    return WeightLess{}(b, a);
  });
  for (const Weight& w : order) {
    Mult r = remaining[w];
    if (r <= 0) continue;
    Weight neg = -w;
    if (WeightEq{}(w, neg)) {
      for (Mult i = 0; i + 1 < r; i += 2) E->nu.push_back(w);
      remaining[w] = r % 2; // a lone zero weight feeds the odd-dimensional slot
    } else {
      for (Mult i = 0; i < r; ++i) E->nu.push_back(w);
      remaining[w] = 0;
      remaining[neg] = 0;
    }
  }
  if (static_cast<int>(E->nu.size()) != n) fail(Errc::Mismatch, "torus map has the wrong size");
  for (auto& w : E->nu) E->nu_half.push_back(w / 2);
  return E;
}

Weight push_eps(const EmbeddingSpec& E, const Weight& eps2) {
  Weight x = Weight::Zero(E.l + 1);
  for (int j = 0; j < E.y_rank(); ++j)
    if (eps2[j] != 0) x += eps2[j] * E.nu_half[static_cast<size_t>(j)];
  return x;
}

Coord lambda_t_exponent2(const EmbeddingSpec& E, const Weight& lambda_y) {
  // Maximize sum(|eps_i| * g_{sigma(i)}) over pairings; the grading functional
  // pulled back to Y-weight space is linear, so the maximum over the weight
  // polytope is attained on the Weyl orbit of lambda.
  const RootSystem& Y = *E.y_sys;
  TorusGrader T = E.grader();
  Weight le = Y.to_eps(lambda_y);
  int n = E.y_rank();
  std::vector<Coord> a(n), g(n);
  for (int i = 0; i < n; ++i) a[i] = std::llabs(le[i]);
  for (int i = 0; i < n; ++i) g[i] = std::llabs(T.exp2(E.nu_half[static_cast<size_t>(i)]));
  std::sort(a.begin(), a.end(), std::greater<Coord>());
  std::sort(g.begin(), g.end(), std::greater<Coord>());
  Coord best2 = 0; // doubled exponent of the maximizing orbit element
  Coord min_term = std::numeric_limits<Coord>::max();
  bool any_zero = false;
  for (int i = 0; i < n; ++i) {
    best2 += a[i] * g[i];
    if (a[i] == 0 || g[i] == 0) any_zero = true;
    else min_term = std::min(min_term, a[i] * g[i]);
  }
  if (Y.family() == Family::D && !any_zero) {
    // Count sign flips against lambda's own pattern; an odd count is not in
    // the orbit, fix it up at the cheapest slot.
    int minus = 0;
    for (int i = 0; i < n; ++i)
      if (le[i] < 0) ++minus;
    // The maximizing assignment uses all-plus signs on |eps|; its flip count
    // parity relative to lambda equals minus mod 2.
    if (minus % 2 == 1) best2 -= 2 * min_term;
  }
  if (best2 % 2) fail(Errc::Mismatch, "grading exponent not integral");
  return best2;
}

IrrepSum restrict_direct(const EmbeddingSpec& E, const Weight& lambda_y, const Limits& lim) {
  const RootSystem& Y = *E.y_sys;
  if (!is_dominant(lambda_y)) fail(Errc::NotDominant, "restriction of a non-dominant weight");
  BigInt dv = weyl_dim(Y, lambda_y);
  if (dv > lim.max_enumeration) fail(Errc::ResourceLimit, "module too large for direct restriction");

  CharPtr ch = dominant_character(E.y_sys, lambda_y, lim);
  const int m = E.l + 1;
  std::int64_t walked = 0;
  DominantCharacter pushed;
  pushed.sys = E.x_sys;
  Weight x(m);
  for_each_full_weight(*ch, [&](const RootSystem::SparseOrbitElement& el, Mult mult) {
    if ((++walked & 65535) == 0 && lim.out_of_time())
      fail(Errc::ResourceLimit, "wall-clock budget exceeded");
    x.setZero();
    for (auto& [j, v] : el.entries) x += v * E.nu_half[static_cast<size_t>(j)];
    for (int i = 0; i < m; ++i)
      if (x[i] < 0) return;
    if (!is_integral(x))
      fail(Errc::NonIntegralWeight, "pushforward leaves the X weight lattice");
    Mult& slot = pushed.table[x];
    slot = checked_add(slot, mult);
  });

  IrrepSum out = decompose(pushed, lim);
  if (dim(out) != dv) fail(Errc::Mismatch, "dimension lost in direct restriction");
  return out;
}

namespace {

// V_Y(lambda_i) restricted to X, from alternating powers of W.
IrrepSum fund_restriction(const EmbeddingSpec& E, long i,
                          const std::vector<IrrepSum>& wedge, const Limits& lim) {
  (void)lim;
  SystemPtr xs = E.x_sys;
  if (i < 0) return IrrepSum::zero(xs);
  if (i == 0) return IrrepSum::trivial(xs);
  long n = E.y_rank();
  switch (E.y_family()) {
    case Family::C:
      if (i > n) fail(Errc::UnsupportedShape, "fundamental index out of range");
      return wedge[i] - (i >= 2 ? wedge[i - 2] : IrrepSum::zero(xs));
    case Family::B:
      if (i <= n - 1) return wedge[i];
      fail(Errc::UnsupportedShape, "spin fundamental not covered by wedge constructions");
    case Family::D:
      if (i <= n - 2) return wedge[i];
      fail(Errc::UnsupportedShape, "spin fundamental not covered by wedge constructions");
    default: break;
  }
  fail(Errc::UnsupportedShape, "unexpected family");
}

} // namespace

IrrepSum restrict_constructed(const EmbeddingSpec& E, const Weight& lambda_y, const Limits& lim) {
  const long n = E.y_rank();
  if (!is_dominant(lambda_y) || !is_integral(lambda_y))
    fail(Errc::NotDominant, "restriction of a non-dominant weight");
  SystemPtr xs = E.x_sys;
  IrrepSum W = IrrepSum::irrep(xs, E.delta);
  bool symplectic = E.y_family() == Family::C;

  // Wedge powers are the workhorse; compute them lazily up to what the shape
  // needs.
  auto wedges = [&](long k) { return ext_powers_up_to(k, W, lim); };

  std::vector<long> nz;
  for (long i = 0; i < n; ++i)
    if (lambda_y[i] != 0) nz.push_back(i);

  if (nz.empty()) return IrrepSum::trivial(xs);

  // a * lambda_1
  if (nz.size() == 1 && nz[0] == 0) {
    long a = lambda_y[0] / 2;
    IrrepSum s = sym_power(a, W, lim);
    if (!symplectic && a >= 2) s -= sym_power(a - 2, W, lim);
    return s;
  }
  // lambda_i
  if (nz.size() == 1 && lambda_y[nz[0]] == 2) {
    long i = nz[0] + 1;
    if (E.y_family() == Family::D && i == n - 1) {
      // Lambda^{n-1} W = V(lambda_{n-1} + lambda_n): not a single fundamental.
      fail(Errc::UnsupportedShape, "lambda_{n-1} of D is spin-adjacent");
    }
    auto w = wedges(std::min(i, n));
    return fund_restriction(E, i, w, lim);
  }
  // 2 lambda_2
  if (nz.size() == 1 && nz[0] == 1 && lambda_y[1] == 4) {
    if (!symplectic || n < 4) fail(Errc::UnsupportedShape, "2*lambda_2 construction needs C_n, n >= 4");
    auto w = wedges(4);
    IrrepSum v2 = fund_restriction(E, 2, w, lim);
    return sym_power(2, v2, lim) - fund_restriction(E, 4, w, lim) - v2 - IrrepSum::trivial(xs);
  }
  // lambda_1 + lambda_i
  if (nz.size() == 2 && nz[0] == 0 && lambda_y[0] == 2 && lambda_y[nz[1]] == 2) {
    long i = nz[1] + 1;
    bool d_exception = E.y_family() == Family::D && i == n - 2;
    long fund_limit = (E.y_family() == Family::B) ? n - 1 : n - 2;
    if (symplectic ? i > n : (i + 1 > fund_limit && !d_exception))
      fail(Errc::UnsupportedShape, "lambda_1+lambda_i construction out of range");
    auto w = wedges(std::min(i + 1, n));
    IrrepSum vi = fund_restriction(E, i, w, lim);
    IrrepSum r = tensor(W, vi, lim) - fund_restriction(E, i - 1, w, lim);
    if (symplectic && i == n) return r; // the lambda_{n+1} term is absent
    if (d_exception) return r - w[n - 1]; // Lambda^{n-1} W = V(lambda_{n-1}+lambda_n)
    return r - fund_restriction(E, i + 1, w, lim);
  }
  // 2 lambda_1 + lambda_2
  if (nz.size() == 2 && nz[0] == 0 && lambda_y[0] == 4 && nz[1] == 1 && lambda_y[1] == 2) {
    if (!symplectic) fail(Errc::UnsupportedShape, "2*lambda_1+lambda_2 construction needs C_n");
    return tensor(W, sym_power(3, W, lim), lim) - sym_power(4, W, lim) - sym_power(2, W, lim);
  }
  // lambda_{n-1} + lambda_n of D: Lambda^{n-1} W
  if (E.y_family() == Family::D && nz.size() == 2 && nz[0] == n - 2 && nz[1] == n - 1 &&
      lambda_y[n - 2] == 2 && lambda_y[n - 1] == 2) {
    return wedges(n - 1)[n - 1];
  }
  fail(Errc::UnsupportedShape, "no virtual construction for this highest weight");
}

XLevels y_levels_via_pushforward(const EmbeddingSpec& E, const Weight& lambda_y,
                                 const Limits& lim) {
  const RootSystem& Y = *E.y_sys;
  if (weyl_dim(Y, lambda_y) > lim.max_enumeration)
    fail(Errc::ResourceLimit, "module too large to grade by enumeration");
  if (E.l < 1) fail(Errc::NotApplicable, "level analysis needs l >= 1");
  CharPtr ch = dominant_character(E.y_sys, lambda_y, lim);
  TorusGrader T = E.grader();
  const int m = E.l + 1;
  SystemPtr levi = get_system(Family::A, E.l);

  std::map<Coord, DominantCharacter, std::greater<Coord>> per_exp;
  Weight x(m);
  for_each_full_weight(*ch, [&](const RootSystem::SparseOrbitElement& el, Mult mult) {
    x.setZero();
    for (auto& [j, v] : el.entries) x += v * E.nu_half[static_cast<size_t>(j)];
    if (!is_integral(x)) fail(Errc::NonIntegralWeight, "pushforward leaves the X weight lattice");
    for (int i = 0; i + 1 < m; ++i)
      if (x[i] < 0) return; // keep the L_X'-dominant cone only
    Coord e = T.exp2(x);
    auto& tbl = per_exp[e];
    if (!tbl.sys) tbl.sys = levi;
    Weight head = x.head(m - 1);
    Mult& slot = tbl.table[head];
    slot = checked_add(slot, mult);
  });

  XLevels out;
  if (per_exp.empty()) return out;
  out.top_exp2 = per_exp.begin()->first;
  Coord step = T.alpha_exp2();
  for (auto& [e, tbl] : per_exp) {
    Coord diff = out.top_exp2 - e;
    if (diff % step) fail(Errc::Mismatch, "level grading spacing violated");
    size_t d = static_cast<size_t>(diff / step);
    if (out.levels.size() <= d) out.levels.resize(d + 1, IrrepSum::zero(levi));
    out.levels[d] = decompose(tbl, lim);
  }
  return out;
}

bool spin_shortcut_applicable(const EmbeddingSpec& E) {
  if (E.y_family() != Family::D || E.l < 1) return false;
  auto wl = levels_a_endnode(E.x_sys, E.delta);
  if (wl.size() != 2) return false;
  if (wl[0].terms.size() != 1 || wl[1].terms.size() != 1) return false;
  if (wl[0].terms.begin()->second != 1 || wl[1].terms.begin()->second != 1) return false;
  // The two halves must be dual to each other for the spinor model to apply.
  SystemPtr levi = get_system(Family::A, E.l);
  const Weight& a = wl[0].terms.begin()->first;
  const Weight& b = wl[1].terms.begin()->first;
  return WeightEq{}(levi->dual_weight(a), b);
}

int spin_half_of(const EmbeddingSpec& E, const Weight& lambda_y) {
  const RootSystem& Y = *E.y_sys;
  TorusGrader T = E.grader();
  Weight le = Y.to_eps(lambda_y); // doubled; half-spin entries are all +-1
  Coord twice_exp = 0;            // 2 * exp2(push(lambda))
  for (int j = 0; j < E.y_rank(); ++j) twice_exp += le[j] * T.exp2(E.nu[static_cast<size_t>(j)]);
  // The two-level structure gives level-0 exponent e0 per slot; exp2(push) =
  // (n0 - 2k) * e0 with k the number of "lowered" slots; parity of k is the
  // half.  twice_exp = 2 * (n0 - 2k) * e0.
  // twice_exp = (doubled eps) . (doubled exponents) = 4 * true pushforward
  // exponent = e0_doubled * (n0 - 2k) for the two-level split.
  Coord e0 = T.exp2(E.delta); // doubled exponent of the top W-level
  if (e0 == 0 || twice_exp % e0) fail(Errc::Mismatch, "unexpected spin grading");
  Coord n0_minus_2k = twice_exp / e0;
  Coord k2 = E.y_rank() - n0_minus_2k;
  if (k2 % 2) fail(Errc::Mismatch, "unexpected spin grading parity");
  return static_cast<int>((k2 / 2) % 2);
}

XLevels spin_levels(const EmbeddingSpec& E, int half, long max_level, const Limits& lim) {
  if (!spin_shortcut_applicable(E))
    fail(Errc::NotApplicable, "spin level stream needs a two-level D embedding");
  auto wl = levels_a_endnode(E.x_sys, E.delta);
  SystemPtr levi = get_system(Family::A, E.l);
  IrrepSum B = wl[1]; // the lower W-level; wedge powers of it stack the spinor
  TorusGrader T = E.grader();
  Coord e0 = T.exp2(E.delta);
  long n0 = E.y_rank();

  XLevels out;
  // Level 0 of the even half is Lambda^0; exponent n0 * e0 / 2.
  Coord top_even2 = n0 * e0 / 2;
  out.top_exp2 = (half == 0) ? top_even2 : top_even2 - e0;
  long kmax = std::min<long>(n0, 2 * max_level + half);
  auto powers = ext_powers_up_to(kmax, B, lim);
  for (long k = half; k <= kmax; k += 2) out.levels.push_back(powers[k]);
  return out;
}

Weight solve_last_label(const EmbeddingSpec& E, Coord top_exp2, long d, const Weight& prefix) {
  TorusGrader T = E.grader();
  const int m = E.l + 1;
  Coord want = top_exp2 - d * T.alpha_exp2();
  Coord partial = 0;
  for (int i = 0; i + 1 < m; ++i) partial += (i + 1) * prefix[i];
  Coord num = want - partial;
  if (num < 0 || num % m) fail(Errc::NoSolution, "no nonnegative last label fits the grading");
  Coord x2 = num / m;
  if (x2 % 2) fail(Errc::NoSolution, "grading forces a non-integral label");
  Weight full(m);
  full.head(m - 1) = prefix;
  full[m - 1] = x2;
  return full;
}

PeelResult peel_levels(const EmbeddingSpec& E, Coord top_exp2, const LevelStream& stream,
                       const BigInt& target_dim, const Limits& lim) {
  SystemPtr xs = E.x_sys;
  SystemPtr levi = get_system(Family::A, E.l);
  PeelResult res;
  res.factors = IrrepSum::zero(xs);
  BigInt have = 0;

  // Own levels of the factors found so far, by interlacing.
  std::vector<std::vector<IrrepSum>> own_levels;

  for (long d = 0;; ++d) {
    if (d > lim.max_levels) fail(Errc::ResourceLimit, "level cap exceeded during peeling");
    if (lim.out_of_time()) fail(Errc::ResourceLimit, "wall-clock budget exceeded");
    auto level = stream(d);
    if (!level) {
      if (have == target_dim) break;
      fail(Errc::InconsistentResidual, "levels exhausted before dimensions balanced");
    }
    IrrepSum residual = *level;
    for (size_t i = 0; i < res.found.size(); ++i) {
      auto& [theta, mult, ni] = res.found[i];
      long rel = d - ni;
      if (rel < 0) continue;
      const auto& ls = own_levels[i];
      if (rel >= static_cast<long>(ls.size())) continue;
      for (auto& [w, c] : ls[rel].terms) residual.add(w, -checked_mul(c, mult));
    }
    for (auto& [w, c] : residual.terms)
      if (c < 0) fail(Errc::InconsistentResidual, "level residual went negative");

    // New factors, highest S-value first.
    std::vector<std::pair<Weight, Mult>> fresh(residual.terms.begin(), residual.terms.end());
    std::sort(fresh.begin(), fresh.end(), [](auto& a, auto& b) {
      Coord sa = a.first.sum(), sb = b.first.sum();
      if (sa != sb) return sa > sb;
      return WeightLess{}(b.first, a.first);
    });
    for (auto& [prefix, mult] : fresh) {
      Weight theta = solve_last_label(E, top_exp2, d, prefix);
      res.factors.add(theta, mult);
      res.found.emplace_back(theta, mult, d);
      own_levels.push_back(levels_a_endnode(xs, theta));
      have += mult * weyl_dim(*xs, theta);
    }
    if (have == target_dim) break;
    if (have > target_dim) fail(Errc::InconsistentResidual, "dimension overshoot during peeling");
  }
  return res;
}

PeelResult restrict_levelpeel(const EmbeddingSpec& E, const Weight& lambda_y, const Limits& lim) {
  const RootSystem& Y = *E.y_sys;
  if (!is_dominant(lambda_y)) fail(Errc::NotDominant, "restriction of a non-dominant weight");
  BigInt target = weyl_dim(Y, lambda_y);

  bool pure_half_spin = false;
  if (E.y_family() == Family::D) {
    Weight le = Y.to_eps(lambda_y);
    pure_half_spin = true;
    for (int j = 0; j < E.y_rank(); ++j)
      if (std::llabs(le[j]) != 1) { pure_half_spin = false; break; }
  }
  if (pure_half_spin && spin_shortcut_applicable(E)) {
    int half = spin_half_of(E, lambda_y);
    XLevels xl = spin_levels(E, half, lim.max_levels, lim);
    LevelStream stream = [levels = std::move(xl.levels)](long d) -> std::optional<IrrepSum> {
      if (d >= static_cast<long>(levels.size())) return std::nullopt;
      return levels[static_cast<size_t>(d)];
    };
    return peel_levels(E, xl.top_exp2, stream, target, lim);
  }

  XLevels xl = y_levels_via_pushforward(E, lambda_y, lim);
  LevelStream stream = [levels = std::move(xl.levels)](long d) -> std::optional<IrrepSum> {
    if (d >= static_cast<long>(levels.size())) return std::nullopt;
    return levels[static_cast<size_t>(d)];
  };
  return peel_levels(E, xl.top_exp2, stream, target, lim);
}

} // namespace liemf
