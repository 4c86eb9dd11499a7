#include "liemf/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace liemf {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidRank: return "InvalidRank";
    case Errc::NotDominant: return "NotDominant";
    case Errc::NonRepresentable: return "NonRepresentable";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::MultiplicityOverflow: return "MultiplicityOverflow";
    case Errc::NonIntegralDivision: return "NonIntegralDivision";
    case Errc::NotSelfDual: return "NotSelfDual";
    case Errc::TrivialDelta: return "TrivialDelta";
    case Errc::UnsupportedShape: return "UnsupportedShape";
    case Errc::NonIntegralWeight: return "NonIntegralWeight";
    case Errc::InconsistentResidual: return "InconsistentResidual";
    case Errc::NoSolution: return "NoSolution";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::Mismatch: return "Mismatch";
    case Errc::Usage: return "Usage";
  }
  return "Error";
}

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
  }
  fail(Errc::Usage, std::string("unknown family '") + c + "'");
}

std::string to_string(Family f) { return std::string(1, static_cast<char>(f)); }

std::string system_name(const RootSystem& R) {
  return to_string(R.family()) + std::to_string(R.rank());
}

std::string to_label_string(const Weight& w) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    if (w[i] % 2 == 0) os << w[i] / 2;
    else os << w[i] << "/2";
  }
  return os.str();
}

namespace {

// Simple roots in (doubled) epsilon coordinates.
std::vector<std::vector<std::pair<int, Coord>>> simple_roots_eps(Family f, int n) {
  std::vector<std::vector<std::pair<int, Coord>>> a(n);
  for (int i = 0; i + 1 < n; ++i) a[i] = {{i, 2}, {i + 1, -2}};
  switch (f) {
    case Family::A: a[n - 1] = {{n - 1, 2}, {n, -2}}; break;
    case Family::B: a[n - 1] = {{n - 1, 2}}; break;
    case Family::C: a[n - 1] = {{n - 1, 4}}; break;
    case Family::D: a[n - 1] = {{n - 2, 2}, {n - 1, 2}}; break;
  }
  return a;
}

Coord sparse_dot(const std::vector<std::pair<int, Coord>>& a,
                 const std::vector<std::pair<int, Coord>>& b) {
  Coord s = 0;
  for (auto& [i, x] : a)
    for (auto& [j, y] : b)
      if (i == j) s += x * y;
  return s;
}

} // namespace

RootSystem RootSystem::build(Family family, int rank) {
  switch (family) {
    case Family::A:
      if (rank < 1) fail(Errc::InvalidRank, "A requires rank >= 1");
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) fail(Errc::InvalidRank, std::string(1, char(family)) + " requires rank >= 2");
      break;
    case Family::D:
      if (rank < 3) fail(Errc::InvalidRank, "D requires rank >= 3");
      break;
  }

  RootSystem R;
  R.family_ = family;
  R.rank_ = rank;
  R.eps_dim_ = (family == Family::A) ? rank + 1 : rank;

  auto simples = simple_roots_eps(family, rank);
  // Cartan columns: entry (i, j-col) = <alpha_j, alpha_i^vee>; only nodes
  // sharing an epsilon slot can pair nonzero.
  std::vector<std::vector<int>> at_slot(R.eps_dim_);
  for (int i = 0; i < rank; ++i)
    for (auto& [p, v] : simples[i]) {
      (void)v;
      at_slot[p].push_back(i);
    }
  R.cartan_cols_.assign(rank, {});
  for (int j = 0; j < rank; ++j) {
    std::vector<int> cand;
    for (auto& [p, v] : simples[j]) {
      (void)v;
      for (int i : at_slot[p])
        if (std::find(cand.begin(), cand.end(), i) == cand.end()) cand.push_back(i);
    }
    std::sort(cand.begin(), cand.end());
    for (int i : cand) {
      Coord len = sparse_dot(simples[i], simples[i]);
      Coord v = 2 * sparse_dot(simples[j], simples[i]) / len;
      if (v != 0) R.cartan_cols_[j].push_back({i, v});
    }
  }

  R.rho2_ = Weight::Constant(rank, 2);
  R.simples_eps_ = simples;

  // Which simple coroots have support at each epsilon slot.
  R.nodes_at_eps_.assign(R.eps_dim_, {});
  for (int i = 0; i < rank; ++i)
    for (auto& [p, v] : simples[i]) {
      (void)v;
      R.nodes_at_eps_[p].push_back(i);
    }

  R.two_rho_eps_.resize(R.eps_dim_);
  R.two_rho_eps_.setZero();
  R.generate_positive_roots([&](const PosRoot& r) {
    for (int k = 0; k < r.ne; ++k) R.two_rho_eps_[r.eps2[k].first] += r.eps2[k].second;
  });

  if (BigInt(rank) * rank <= 4096) {
    R.generate_positive_roots([&](const PosRoot& r) { R.pos_roots_.push_back(r); });
  }
  return R;
}

void RootSystem::generate_positive_roots(const std::function<void(const PosRoot&)>& fn) const {
  PosRoot r;
  auto finish = [&](std::initializer_list<std::pair<int, Coord>> eps) {
    r.ne = 0;
    for (auto& e : eps) r.eps2[r.ne++] = e;
    // Fundamental coordinates <alpha, alpha_i^vee>: only the simple coroots
    // touching the root's epsilon support can pair nonzero.
    int cand[8];
    int nc = 0;
    for (int k = 0; k < r.ne; ++k)
      for (int i : nodes_at_eps_[r.eps2[k].first]) {
        bool dup = false;
        for (int t = 0; t < nc; ++t) dup |= (cand[t] == i);
        if (!dup) cand[nc++] = i;
      }
    std::sort(cand, cand + nc);
    r.nf = 0;
    for (int t = 0; t < nc; ++t) {
      int i = cand[t];
      Coord num = 0, len = 0;
      for (auto& [p, v] : simples_eps_[i]) {
        len += v * v;
        for (int k = 0; k < r.ne; ++k)
          if (r.eps2[k].first == p) num += v * r.eps2[k].second;
      }
      Coord c = 2 * num / len;
      if (c != 0) r.fund2[r.nf++] = {i, c};
    }
    fn(r);
  };

  int n = rank_;
  if (family_ == Family::A) {
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) finish({{i, 2}, {j, -2}});
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        finish({{i, 2}, {j, -2}});
        finish({{i, 2}, {j, 2}});
      }
    if (family_ == Family::B)
      for (int i = 0; i < n; ++i) finish({{i, 2}});
    if (family_ == Family::C)
      for (int i = 0; i < n; ++i) finish({{i, 4}});
  }
}

void RootSystem::for_each_positive_root(const std::function<void(const PosRoot&)>& fn) const {
  if (!pos_roots_.empty()) {
    for (const auto& r : pos_roots_) fn(r);
    return;
  }
  generate_positive_roots(fn);
}

Eigen::Matrix<Coord, Eigen::Dynamic, Eigen::Dynamic> RootSystem::cartan() const {
  Eigen::Matrix<Coord, Eigen::Dynamic, Eigen::Dynamic> C(rank_, rank_);
  C.setZero();
  for (int j = 0; j < rank_; ++j)
    for (auto& [i, v] : cartan_cols_[j]) C(i, j) = v;
  return C;
}

bool RootSystem::adjacent(int i, int j) const {
  if (i == j) return false;
  for (auto& [r, v] : cartan_cols_[j]) {
    (void)v;
    if (r == i) return true;
  }
  return false;
}

size_t RootSystem::positive_root_count() const {
  size_t n = static_cast<size_t>(rank_);
  switch (family_) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
  }
  return 0;
}

BigInt RootSystem::weyl_order() const {
  auto fact = [](int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (family_) {
    case Family::A: return fact(rank_ + 1);
    case Family::B:
    case Family::C: return fact(rank_) << rank_;
    case Family::D: return fact(rank_) << (rank_ - 1);
  }
  return 1;
}

BigInt RootSystem::orbit_size(const Weight& w) const {
  if (!is_dominant(w)) fail(Errc::NotDominant, "orbit_size requires a dominant weight");
  // Stabilizer is the parabolic Weyl group on the zero-coordinate nodes.
  std::vector<int> zero;
  for (int i = 0; i < rank_; ++i)
    if (w[i] == 0) zero.push_back(i);
  std::vector<bool> in(rank_, false);
  for (int i : zero) in[i] = true;

  std::vector<bool> seen(rank_, false);
  BigInt stab = 1;
  auto fact = [](int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  for (int s : zero) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = true;
    for (size_t q = 0; q < comp.size(); ++q)
      for (int j : zero)
        if (!seen[j] && adjacent(comp[q], j)) {
          seen[j] = true;
          comp.push_back(j);
        }
    int sz = static_cast<int>(comp.size());
    bool has_last = in[rank_ - 1] && std::find(comp.begin(), comp.end(), rank_ - 1) != comp.end();
    bool has_prev = std::find(comp.begin(), comp.end(), rank_ - 2) != comp.end();
    if (family_ == Family::B || family_ == Family::C) {
      if (has_last) stab *= fact(sz) << sz;       // B_sz or C_sz tail
      else stab *= fact(sz + 1);                  // A_sz chain
    } else if (family_ == Family::D && has_last && has_prev && sz >= 3) {
      stab *= fact(sz) << (sz - 1);               // D_sz tail (contains the fork)
    } else {
      stab *= fact(sz + 1);                       // A_sz chain
    }
  }
  return weyl_order() / stab;
}

std::pair<Weight, int> RootSystem::dominant_conjugate(const Weight& w_in) const {
  Weight w = w_in;
  int sign = 1;
  int from = 0;
  for (;;) {
    int i = -1;
    for (int j = from; j < rank_; ++j)
      if (w[j] < 0) { i = j; break; }
    if (i < 0 && from > 0) { // rescan prefix once before concluding
      from = 0;
      for (int j = 0; j < rank_; ++j)
        if (w[j] < 0) { i = j; break; }
    }
    if (i < 0) break;
    reflect(w, i);
    sign = -sign;
    from = std::max(0, i - 2);
  }
  for (int j = 0; j < rank_; ++j)
    if (w[j] == 0) return {w, 0};
  return {w, sign};
}

std::pair<Weight, int> RootSystem::dominant_conjugate_strict(Weight w) const {
  int sign = 1;
  int from = 0;
  for (;;) {
    int i = -1;
    for (int j = from; j < rank_; ++j) {
      if (w[j] == 0) return {w, 0};
      if (w[j] < 0) { i = j; break; }
    }
    if (i < 0 && from > 0) {
      from = 0;
      continue;
    }
    if (i < 0) return {w, sign};
    reflect(w, i);
    sign = -sign;
    from = std::max(0, i - 2);
  }
}

Weight RootSystem::to_eps(const Weight& w) const {
  Weight e(eps_dim_);
  int n = rank_;
  switch (family_) {
    case Family::A: {
      e[n] = 0;
      for (int i = n - 1; i >= 0; --i) e[i] = e[i + 1] + w[i];
      break;
    }
    case Family::B: {
      if (w[n - 1] % 2) fail(Errc::NonRepresentable, "not in the B weight lattice");
      e[n - 1] = w[n - 1] / 2;
      for (int i = n - 2; i >= 0; --i) e[i] = e[i + 1] + w[i];
      break;
    }
    case Family::C: {
      e[n - 1] = w[n - 1];
      for (int i = n - 2; i >= 0; --i) e[i] = e[i + 1] + w[i];
      break;
    }
    case Family::D: {
      if ((w[n - 2] + w[n - 1]) % 2) fail(Errc::NonRepresentable, "not in the D weight lattice");
      e[n - 2] = (w[n - 2] + w[n - 1]) / 2;
      e[n - 1] = (w[n - 1] - w[n - 2]) / 2;
      for (int i = n - 3; i >= 0; --i) e[i] = e[i + 1] + w[i];
      break;
    }
  }
  return e;
}

Weight RootSystem::from_eps(const Weight& e) const {
  if (e.size() != eps_dim_) fail(Errc::NonRepresentable, "epsilon dimension mismatch");
  int n = rank_;
  Weight w(n);
  switch (family_) {
    case Family::A:
      for (int i = 0; i < n; ++i) w[i] = e[i] - e[i + 1];
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) w[i] = e[i] - e[i + 1];
      w[n - 1] = 2 * e[n - 1];
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) w[i] = e[i] - e[i + 1];
      w[n - 1] = e[n - 1];
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) w[i] = e[i] - e[i + 1];
      w[n - 2] = e[n - 2] - e[n - 1];
      w[n - 1] = e[n - 2] + e[n - 1];
      break;
  }
  if (!is_integral(w)) fail(Errc::NonRepresentable, "epsilon vector is outside the weight lattice");
  return w;
}

Weight RootSystem::dual_weight(const Weight& w) const {
  switch (family_) {
    case Family::A: return reversed(w);
    case Family::B:
    case Family::C: return w;
    case Family::D: {
      if (rank_ % 2 == 0) return w;
      Weight d = w;
      std::swap(d[rank_ - 2], d[rank_ - 1]);
      return d;
    }
  }
  return w;
}

Weight RootSystem::root_coordinates(const Weight& w) const {
  Weight e = to_eps(w);
  int n = rank_;
  Weight c(n);
  Coord run = 0;
  switch (family_) {
    case Family::A: {
      // The epsilon section fixes e[n] = 0; center it so the expansion over
      // the (traceless) simple roots comes out right.
      Coord tr = e.sum();
      if (tr % (n + 1)) fail(Errc::NonRepresentable, "not in the root lattice");
      Coord shift = tr / (n + 1);
      for (int i = 0; i < n; ++i) { run += e[i] - shift; c[i] = run; }
      break;
    }
    case Family::B:
      for (int i = 0; i < n; ++i) { run += e[i]; c[i] = run; }
      break;
    case Family::C: {
      for (int i = 0; i + 1 < n; ++i) { run += e[i]; c[i] = run; }
      Coord t = run + e[n - 1]; // c_{n-1} + e_n = 2 c_n
      if (t % 2) fail(Errc::NonRepresentable, "not in the root lattice");
      c[n - 1] = t / 2;
      break;
    }
    case Family::D: {
      for (int i = 0; i + 2 < n; ++i) { run += e[i]; c[i] = run; }
      Coord prev = (n >= 3) ? c[n - 3] : 0;
      Coord u = prev + e[n - 2] - e[n - 1];
      Coord v = prev + e[n - 2] + e[n - 1];
      if ((u % 2) || (v % 2)) fail(Errc::NonRepresentable, "not in the root lattice");
      c[n - 2] = u / 2;
      c[n - 1] = v / 2;
      break;
    }
  }
  return c;
}

namespace {

// Enumerates the distinct arrangements of a value multiset over chosen slots
// together with sign patterns, emitting sparse (position, value) lists.
class OrbitEnumerator {
public:
  OrbitEnumerator(const RootSystem& R, const Weight& w,
                  const std::function<void(const RootSystem::SparseOrbitElement&)>& fn)
      : R_(R), fn_(fn) {
    eps_ = R.to_eps(w);
    n_ = static_cast<int>(eps_.size());
    signed_ = (R.family() != Family::A);
    if (signed_) {
      base_ = 0;
      parity_ = 0;
      has_zero_ = false;
      for (int i = 0; i < n_; ++i) {
        if (eps_[i] == 0) has_zero_ = true;
        else {
          if (eps_[i] < 0) parity_ ^= 1;
          values_.push_back(std::llabs(eps_[i]));
        }
      }
      // C and B allow all sign patterns; for D without zeros the parity of
      // minus signs is fixed.
      parity_free_ = (R.family() != Family::D) || has_zero_;
    } else {
      // Baseline = most frequent epsilon value.
      std::vector<Coord> sorted(eps_.data(), eps_.data() + n_);
      std::sort(sorted.begin(), sorted.end());
      int best = 1, run = 1;
      base_ = sorted[0];
      for (int i = 1; i < n_; ++i) {
        run = (sorted[i] == sorted[i - 1]) ? run + 1 : 1;
        if (run > best) { best = run; base_ = sorted[i]; }
      }
      for (int i = 0; i < n_; ++i)
        if (eps_[i] != base_) values_.push_back(eps_[i]);
      parity_free_ = true;
      parity_ = 0;
    }
    std::sort(values_.begin(), values_.end(), std::greater<Coord>());
    groups_.clear();
    for (size_t i = 0; i < values_.size();) {
      size_t j = i;
      while (j < values_.size() && values_[j] == values_[i]) ++j;
      groups_.push_back({values_[i], static_cast<int>(j - i)});
      i = j;
    }
    entries_.resize(values_.size());
    slot_of_.assign(n_, -1);
  }

  void run() { place(0); }

private:
  void place(size_t g) {
    if (g == groups_.size()) {
      emit();
      return;
    }
    auto [val, cnt] = groups_[g];
    place_group(g, val, cnt, 0, 0);
  }

  // Choose `cnt` free positions in increasing order for value `val`.
  void place_group(size_t g, Coord val, int cnt, int k, int from) {
    if (k == cnt) {
      place(g + 1);
      return;
    }
    for (int p = from; p <= n_ - (cnt - k); ++p) {
      if (slot_of_[p] >= 0) continue;
      slot_of_[p] = 1;
      entries_[offset(g) + k] = {p, val};
      place_group(g, val, cnt, k + 1, p + 1);
      slot_of_[p] = -1;
    }
  }

  size_t offset(size_t g) const {
    size_t o = 0;
    for (size_t i = 0; i < g; ++i) o += groups_[i].second;
    return o;
  }

  void emit() {
    RootSystem::SparseOrbitElement el;
    el.base2 = base_;
    if (!signed_) {
      el.entries = {entries_.data(), entries_.size()};
      fn_(el);
      return;
    }
    size_t m = entries_.size();
    // Gray-code walk over sign patterns of the nonzero entries.
    std::uint64_t total = (m >= 63) ? 0 : (1ull << m);
    if (m >= 63) fail(Errc::ResourceLimit, "orbit sign enumeration too large");
    work_ = entries_;
    int minus = 0;
    for (std::uint64_t g = 0;; ++g) {
      if (parity_free_ || (minus & 1) == parity_) {
        el.entries = {work_.data(), work_.size()};
        fn_(el);
      }
      if (g + 1 >= total) break;
      std::uint64_t next = (g + 1) ^ ((g + 1) >> 1);
      std::uint64_t cur = g ^ (g >> 1);
      int bit = __builtin_ctzll(next ^ cur);
      work_[bit].second = -work_[bit].second;
      minus += (work_[bit].second < 0) ? 1 : -1;
    }
  }

  const RootSystem& R_;
  const std::function<void(const RootSystem::SparseOrbitElement&)>& fn_;
  Weight eps_;
  int n_ = 0;
  bool signed_ = false;
  bool has_zero_ = false;
  bool parity_free_ = true;
  int parity_ = 0;
  Coord base_ = 0;
  std::vector<Coord> values_;
  std::vector<std::pair<Coord, int>> groups_;
  std::vector<std::pair<int, Coord>> entries_, work_;
  std::vector<int> slot_of_;
};

} // namespace

void RootSystem::for_each_orbit_sparse(
    const Weight& w, const std::function<void(const SparseOrbitElement&)>& fn) const {
  if (!is_dominant(w)) fail(Errc::NotDominant, "orbit of a non-dominant weight");
  OrbitEnumerator(*this, w, fn).run();
}

void RootSystem::for_each_orbit_eps(const Weight& w,
                                    const std::function<void(const Weight&)>& fn) const {
  Weight buf(eps_dim_);
  for_each_orbit_sparse(w, [&](const SparseOrbitElement& el) {
    buf.setConstant(el.base2);
    for (auto& [i, v] : el.entries) buf[i] = v;
    fn(buf);
  });
}

} // namespace liemf
