#pragma once

#include "liemf/branch.hpp"

namespace liemf {

// Grading torus of X = A_{l+1}: the cocharacter acting on a weight with
// doubled labels s_i by the exponent sum(i * s_i) (doubled true exponent).
struct TorusGrader {
  int m; // rank of X, = l + 1
  Coord exp2(const Weight& w) const {
    Coord e = 0;
    for (int i = 0; i < m; ++i) e += (i + 1) * w[i];
    return e;
  }
  // exponent of the end-node simple root (doubled true value l + 2)
  Coord alpha_exp2() const { return 2 * (m + 1); }
};

// An irreducible self-dual embedding X = A_{l+1} -> Y = Sp(W) or SO(W).
struct EmbeddingSpec {
  int l = 0;
  Weight delta;
  SystemPtr x_sys; // A_{l+1}
  SystemPtr y_sys;
  BigInt dim_w;
  int steinberg_sign = 1; // -1 symplectic, +1 orthogonal
  // torus map: eps_i of Y |-> nu[i], an X-weight; for B the one leftover zero
  // weight of W fills no eps slot.
  std::vector<Weight> nu;
  std::vector<Weight> nu_half; // nu / 2 in doubled units (true values)

  Family y_family() const { return y_sys->family(); }
  int y_rank() const { return y_sys->rank(); }
  TorusGrader grader() const { return TorusGrader{l + 1}; }
};

using EmbeddingPtr = std::shared_ptr<const EmbeddingSpec>;

EmbeddingPtr build_embedding(int l, const Weight& delta, const Limits& lim = {});

// Pushforward of a single Y-weight (given in doubled eps coordinates) to an
// X-weight; entries may be half-integral for spin weights, in which case the
// caller decides whether that is an error.
Weight push_eps(const EmbeddingSpec& E, const Weight& eps2);

// exponent (doubled) of lambda restricted to the grading torus: the maximum
// grading exponent over the weights of V_Y(lambda).
Coord lambda_t_exponent2(const EmbeddingSpec& E, const Weight& lambda_y);

// Character pushforward along the torus map; ground truth restriction.
IrrepSum restrict_direct(const EmbeddingSpec& E, const Weight& lambda_y, const Limits& lim = {});

// X-side virtual constructions (symmetric/exterior powers of W and tensor
// differences); UnsupportedShape outside the covered highest-weight shapes.
IrrepSum restrict_constructed(const EmbeddingSpec& E, const Weight& lambda_y,
                              const Limits& lim = {});

// Per-level restriction of V_Y(lambda) to L_X' = A_l, plus grading data.
struct XLevels {
  Coord top_exp2 = 0;        // exponent of level 0
  std::vector<IrrepSum> levels; // over A_l
};

// Generic path: full pushforward grouped by grading exponent (needs an
// enumerable dimension).
XLevels y_levels_via_pushforward(const EmbeddingSpec& E, const Weight& lambda_y,
                                 const Limits& lim = {});

// Spin shortcut for Y of type D whose natural module has exactly two X-levels
// A, B = A^*: the half-spin levels are the alternating powers of B of fixed
// parity.  `half` is 0 (even powers) or 1 (odd).
XLevels spin_levels(const EmbeddingSpec& E, int half, long max_level, const Limits& lim = {});

// Parity of the half-spin weight lambda_y under the grading (0 or 1).
int spin_half_of(const EmbeddingSpec& E, const Weight& lambda_y);
bool spin_shortcut_applicable(const EmbeddingSpec& E);

// level index -> L_X' level; returns nullopt past the last level.
using LevelStream = std::function<std::optional<IrrepSum>(long)>;

struct PeelResult {
  IrrepSum factors;
  std::vector<std::tuple<Weight, Mult, long>> found; // (theta, mult, level n_i)
};

// Level peeling: reads new factors off the residual of each level and solves
// the last label by the torus grading; stops when dimensions balance.
PeelResult restrict_levelpeel(const EmbeddingSpec& E, const Weight& lambda_y,
                              const Limits& lim = {});
PeelResult peel_levels(const EmbeddingSpec& E, Coord top_exp2, const LevelStream& stream,
                       const BigInt& target_dim, const Limits& lim);

// Unique nonnegative last label completing `prefix` at level d, from the
// grading congruence; NoSolution if none.
Weight solve_last_label(const EmbeddingSpec& E, Coord top_exp2, long d, const Weight& prefix);

} // namespace liemf
