#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "liemf/weights.hpp"

namespace liemf {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

Family family_from_char(char c);

// A positive root, kept in both coordinate systems.  Both representations are
// sparse: a classical root touches at most two epsilon slots and a handful of
// fundamental slots, so fixed-capacity arrays suffice.
struct PosRoot {
  int ne = 0;
  std::pair<int, Coord> eps2[2];  // doubled epsilon entries
  int nf = 0;
  std::pair<int, Coord> fund2[8]; // true fundamental coordinates
};

class RootSystem {
public:
  static RootSystem build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int eps_dim() const { return eps_dim_; }
  // Dense Cartan matrix (materialized on demand; the stored form is sparse
  // columns since classical Cartan matrices are tridiagonal plus a fork).
  Eigen::Matrix<Coord, Eigen::Dynamic, Eigen::Dynamic> cartan() const;
  const std::vector<std::pair<int, Coord>>& cartan_col(int i) const { return cartan_cols_[i]; }
  bool adjacent(int i, int j) const;
  const Weight& rho() const { return rho2_; }
  // Visits every positive root once; the PosRoot buffer is reused.  For small
  // ranks the list is materialized and cached, for large ranks it is
  // regenerated on the fly (C_n has n^2 positive roots).
  void for_each_positive_root(const std::function<void(const PosRoot&)>& fn) const;
  size_t positive_root_count() const;
  // Simple roots as sparse doubled-epsilon vectors (traceless by construction).
  const std::vector<std::vector<std::pair<int, Coord>>>& simples_eps() const { return simples_eps_; }

  BigInt weyl_order() const;
  // |W| / |Stab(w)| for dominant w.
  BigInt orbit_size(const Weight& w) const;

  // Simple reflection s_i applied in place (0-based i).
  void reflect(Weight& w, int i) const {
    Coord m = w[i];
    if (m == 0) return;
    for (auto& [j, v] : cartan_cols_[i]) w[j] -= m * v;
  }

  // The unique dominant conjugate of w together with det of the conjugating
  // element; sign 0 iff w is fixed by some simple reflection along the way.
  std::pair<Weight, int> dominant_conjugate(const Weight& w) const;

  // rho-shifted variant used by the Klimyk rule: w is conjugated to the
  // dominant chamber; sign 0 signals a wall (some coordinate vanished).
  std::pair<Weight, int> dominant_conjugate_strict(Weight w) const;

  Weight to_eps(const Weight& w) const;
  Weight from_eps(const Weight& eps) const;

  // W-invariant pairing, valid when at least one argument lies in the root
  // lattice (the type-A epsilon lift is only canonical up to trace shifts).
  Coord pairing(const Weight& a, const Weight& b) const { return to_eps(a).dot(to_eps(b)); }

  // Highest-weight coordinate sum against 2*rho-check: strictly monotone along
  // the dominance order, used to linearize peeling.
  Coord height2(const Weight& w) const { return to_eps(w).dot(two_rho_eps_); }

  // -w0 action on dominant weights (dual highest weight).
  Weight dual_weight(const Weight& w) const;

  // Streams the full Weyl orbit of a dominant weight, one epsilon vector per
  // orbit element.  The buffer passed to fn is reused between calls.
  void for_each_orbit_eps(const Weight& w_dominant, const std::function<void(const Weight&)>& fn) const;

  // Sparse variant: emits, for every orbit element, the epsilon entries that
  // differ from `base` (the most frequent epsilon value of the orbit).  Entry
  // list is (position, doubled value).
  struct SparseOrbitElement {
    Coord base2 = 0;
    std::span<const std::pair<int, Coord>> entries;
  };
  void for_each_orbit_sparse(const Weight& w_dominant,
                             const std::function<void(const SparseOrbitElement&)>& fn) const;

  // Coefficients of w on the simple roots (doubled); requires w in the root
  // lattice tensor 1/2.
  Weight root_coordinates(const Weight& w) const;

private:
  Family family_;
  int rank_ = 0;
  int eps_dim_ = 0;
  std::vector<std::vector<std::pair<int, Coord>>> cartan_cols_; // col i: (row, value)
  Weight rho2_;
  Weight two_rho_eps_; // doubled eps coordinates of 2*rho
  std::vector<PosRoot> pos_roots_; // materialized cache, small ranks only
  std::vector<std::vector<std::pair<int, Coord>>> simples_eps_;
  std::vector<std::vector<int>> nodes_at_eps_; // eps slot -> simple coroots touching it

  void generate_positive_roots(const std::function<void(const PosRoot&)>& fn) const;
};

std::string to_string(Family f);
std::string system_name(const RootSystem& R);

} // namespace liemf
