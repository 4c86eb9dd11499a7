#include "liemf/mfcheck.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <future>

namespace liemf {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Direct: return "direct";
    case Strategy::Constructed: return "constructed";
    case Strategy::LevelPeel: return "levelpeel";
    case Strategy::Auto: return "auto";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::MF: return "MF";
    case Verdict::NotMF: return "NotMF";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

bool is_pure_half_spin(const EmbeddingSpec& E, const Weight& lambda) {
  if (E.y_family() != Family::D) return false;
  Weight le = E.y_sys->to_eps(lambda);
  for (int j = 0; j < E.y_rank(); ++j)
    if (std::llabs(le[j]) != 1) return false;
  return true;
}

IrrepSum run_strategy(const EmbeddingSpec& E, const Weight& lambda, Strategy s,
                      const MfLimits& lim) {
  Limits inner = lim;
  switch (s) {
    case Strategy::Direct:
      inner.max_enumeration = std::min<std::int64_t>(lim.max_enumeration, lim.direct_dim_cap);
      return restrict_direct(E, lambda, inner);
    case Strategy::Constructed: return restrict_constructed(E, lambda, inner);
    case Strategy::LevelPeel: return restrict_levelpeel(E, lambda, inner).factors;
    case Strategy::Auto: break;
  }
  fail(Errc::Usage, "auto strategy must be resolved before running");
}

// Preference order for the auto strategy.  Direct enumeration costs both the
// module dimension and a factor of the Y-rank (Freudenthal walks the whole
// root system), so large-rank targets go through the X-side constructions.
std::vector<Strategy> strategy_order(const EmbeddingSpec& E, const Weight& lambda,
                                     const BigInt& dimension, const MfLimits& lim) {
  bool direct_ok = dimension <= lim.direct_dim_cap;
  bool small_rank = E.y_rank() <= 200;
  bool spin = is_pure_half_spin(E, lambda) && spin_shortcut_applicable(E);
  std::vector<Strategy> order;
  if (spin && !(direct_ok && small_rank)) order.push_back(Strategy::LevelPeel);
  if (direct_ok && small_rank) order.push_back(Strategy::Direct);
  order.push_back(Strategy::Constructed);
  if (direct_ok && !small_rank) order.push_back(Strategy::Direct);
  return order;
}

} // namespace

MfReport is_mf(const EmbeddingPtr& E, const Weight& lambda, Strategy strategy,
               const MfLimits& lim) {
  auto t0 = std::chrono::steady_clock::now();
  MfReport rep;
  rep.E = E;
  rep.lambda = lambda;
  rep.factors = IrrepSum::zero(E->x_sys);
  rep.dimension = weyl_dim(*E->y_sys, lambda);

  std::vector<Strategy> order = (strategy == Strategy::Auto)
                                    ? strategy_order(*E, lambda, rep.dimension, lim)
                                    : std::vector<Strategy>{strategy};
  bool done = false;
  for (Strategy s : order) {
    try {
      rep.method = s;
      rep.factors = run_strategy(*E, lambda, s, lim);
      done = true;
      break;
    } catch (const Error& e) {
      if (e.code() == Errc::ResourceLimit || e.code() == Errc::UnsupportedShape ||
          e.code() == Errc::NotApplicable) {
        rep.note = e.what();
        continue;
      }
      throw;
    }
  }

  if (done) {
    if (dim(rep.factors) != rep.dimension)
      fail(Errc::Mismatch, "restriction lost dimensions");
    rep.verdict = rep.factors.is_mf() ? Verdict::MF : Verdict::NotMF;
    for (auto& [w, m] : rep.factors.terms)
      if (m >= 2) rep.witnesses.push_back({w, m});
    std::sort(rep.witnesses.begin(), rep.witnesses.end(), [](auto& a, auto& b) {
      if (a.second != b.second) return a.second > b.second;
      Coord sa = s_value(a.first), sb = s_value(b.first);
      if (sa != sb) return sa > sb;
      return WeightLess{}(b.first, a.first);
    });
  } else {
    rep.verdict = Verdict::Unknown;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

ConsistencyReport level_consistency_check(const EmbeddingPtr& E, const Weight& lambda,
                                          const IrrepSum& found, const MfLimits& lim) {
  ConsistencyReport rep;
  XLevels xl;
  if (is_pure_half_spin(*E, lambda) && spin_shortcut_applicable(*E)) {
    xl = spin_levels(*E, spin_half_of(*E, lambda), lim.max_levels, lim);
  } else {
    xl = y_levels_via_pushforward(*E, lambda, lim);
  }
  TorusGrader T = E->grader();
  Coord step = T.alpha_exp2();

  // Own level ladders of the found factors, anchored at their grading level.
  std::vector<std::tuple<Weight, Mult, long, std::vector<IrrepSum>>> factors;
  for (auto& [theta, m] : found.terms) {
    Coord diff = xl.top_exp2 - T.exp2(theta);
    if (diff < 0 || diff % step) {
      rep.detail = "factor (" + to_label_string(theta) + ") sits outside the grading ladder";
      return rep;
    }
    factors.emplace_back(theta, m, diff / step, levels_a_endnode(E->x_sys, theta));
  }

  Coord prev_s = 0;
  for (size_t d = 0; d < xl.levels.size(); ++d) {
    IrrepSum predicted = IrrepSum::zero(get_system(Family::A, E->l));
    for (auto& [theta, m, ni, ladder] : factors) {
      long rel = static_cast<long>(d) - ni;
      if (rel < 0 || rel >= static_cast<long>(ladder.size())) continue;
      for (auto& [w, c] : ladder[rel].terms) predicted.add(w, checked_mul(c, m));
    }
    if (!(predicted == xl.levels[d])) {
      // report one offending weight
      IrrepSum difference = predicted - xl.levels[d];
      rep.detail = "level " + std::to_string(d) + " mismatch at (" +
                   to_label_string(difference.terms.begin()->first) + ")";
      return rep;
    }
    // repeated constituents can outgrow the previous level's S-value by at most 1
    if (d >= 1) {
      for (auto& [w, m] : xl.levels[d].terms)
        if (m >= 2 && s_value(w) > prev_s + 1) {
          rep.detail = "repeated constituent (" + to_label_string(w) + ") at level " +
                       std::to_string(d) + " breaks the S-value bound";
          return rep;
        }
    }
    prev_s = 0;
    for (auto& [w, m] : xl.levels[d].terms) prev_s = std::max(prev_s, s_value(w));
  }
  rep.pass = true;
  return rep;
}

ScanResult scan_candidates(const EmbeddingPtr& E, Coord max_s, const BigInt& dim_cap,
                           const MfLimits& lim, int threads) {
  ScanResult out;
  if (max_s < 0) return out;
  const int n = E->y_rank();

  // Dominant weights with coordinate sum <= max_s, by stars and bars.
  std::vector<Weight> cands;
  Weight cur = Weight::Zero(n);
  std::function<void(int, Coord)> rec = [&](int pos, Coord left) {
    if (pos == n) {
      cands.push_back(cur);
      return;
    }
    for (Coord v = 0; v <= left; ++v) {
      cur[pos] = 2 * v;
      rec(pos + 1, left - v);
      cur[pos] = 0;
    }
  };
  rec(0, max_s);
  std::sort(cands.begin(), cands.end(), WeightLess{});

  std::vector<Weight> in_bounds;
  for (auto& w : cands)
    if (weyl_dim(*E->y_sys, w) <= dim_cap) in_bounds.push_back(w);
  out.examined = in_bounds;

  MfLimits inner = lim;
  if (dim_cap < inner.direct_dim_cap) {
    inner.direct_dim_cap = static_cast<std::int64_t>(dim_cap);
  }

  std::vector<MfReport> reports(in_bounds.size());
  if (threads <= 1) {
    for (size_t i = 0; i < in_bounds.size(); ++i)
      reports[i] = is_mf(E, in_bounds[i], Strategy::Auto, inner);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= in_bounds.size()) return;
        reports[i] = is_mf(E, in_bounds[i], Strategy::Auto, inner);
      }
    };
    std::vector<std::future<void>> pool;
    for (int t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
  }

  for (size_t i = 0; i < in_bounds.size(); ++i) {
    if (reports[i].verdict == Verdict::MF) out.mf.push_back(in_bounds[i]);
    if (reports[i].verdict == Verdict::Unknown) out.complete = false;
  }
  out.reports = std::move(reports);
  return out;
}

Weight normalize_triality_d4(const Weight& w) {
  if (w.size() != 4) fail(Errc::Usage, "triality normalization needs a D_4 weight");
  Weight out = w;
  std::array<Coord, 3> outer{w[0], w[2], w[3]};
  std::sort(outer.begin(), outer.end(), std::greater<Coord>());
  out[0] = outer[0];
  out[2] = outer[1];
  out[3] = outer[2];
  return out;
}

} // namespace liemf
