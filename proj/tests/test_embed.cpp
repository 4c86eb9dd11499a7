#include <doctest.h>

#include <random>

#include "liemf/embed.hpp"

using namespace liemf;

namespace {

EmbeddingPtr emb(int l, std::initializer_list<Coord> delta) {
  return build_embedding(l, weight_of(delta));
}

} // namespace

TEST_CASE("symplectic/orthogonal dichotomy across the catalog") {
  auto check = [](EmbeddingPtr E, Family f, int rank) {
    CHECK(E->y_family() == f);
    CHECK(E->y_rank() == rank);
  };
  check(emb(0, {3}), Family::C, 2);
  check(emb(0, {4}), Family::B, 2);
  check(emb(0, {5}), Family::C, 3);
  check(emb(0, {6}), Family::B, 3);
  check(emb(0, {7}), Family::C, 4);
  check(emb(0, {8}), Family::B, 4);
  check(emb(0, {16}), Family::B, 8);
  check(emb(1, {1, 1}), Family::D, 4);
  check(emb(2, {1, 0, 1}), Family::B, 7);
  check(emb(2, {2, 0, 2}), Family::D, 42);
  check(emb(1, {2, 2}), Family::B, 13); // 27-dimensional orthogonal module of A_2
  check(emb(2, {0, 2, 0}), Family::D, 10);
  check(emb(2, {1, 1, 1}), Family::D, 32);
  check(emb(4, {0, 0, 1, 0, 0}), Family::C, 10);
  check(emb(6, {0, 0, 0, 1, 0, 0, 0}), Family::D, 35);
  check(emb(8, {0, 0, 0, 0, 1, 0, 0, 0, 0}), Family::C, 126);
  check(emb(10, {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}), Family::D, 462);
  check(emb(12, {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}), Family::C, 1716);

  CHECK_THROWS_AS((void)emb(2, {1, 0, 0}), Error);  // not self-dual
  CHECK_THROWS_AS((void)emb(2, {0, 0, 0}), Error);  // trivial
}

TEST_CASE("the natural module restricts to W") {
  for (auto E : {emb(1, {1, 1}), emb(2, {0, 2, 0}), emb(4, {0, 0, 1, 0, 0})}) {
    IrrepSum r = restrict_direct(*E, fundamental(E->y_rank(), 1));
    CHECK(r.terms.size() == 1);
    CHECK(r.mult_of(E->delta) == 1);
    IrrepSum rc = restrict_constructed(*E, fundamental(E->y_rank(), 1));
    CHECK(rc == r);
  }
}

TEST_CASE("wedge square of the natural module drops one invariant") {
  auto c10 = emb(4, {0, 0, 1, 0, 0});
  IrrepSum got = restrict_direct(*c10, fundamental(10, 2));
  IrrepSum want = ext_power(2, IrrepSum::irrep(c10->x_sys, c10->delta));
  want.add(zero_weight(5), -1);
  CHECK(got == want);
}

TEST_CASE("torus pairing independence") {
  std::mt19937 rng(19);
  for (auto E : {emb(1, {1, 1}), emb(2, {0, 2, 0}), emb(2, {1, 0, 1})}) {
    Weight lam = fundamental(E->y_rank(), 2);
    IrrepSum base = restrict_direct(*E, lam);
    for (int t = 0; t < 3; ++t) {
      EmbeddingSpec flipped = *E;
      for (auto& w : flipped.nu_half)
        if (rng() % 2 && !is_zero(w)) w = -w;
      CHECK(restrict_direct(flipped, lam) == base);
    }
  }
}

TEST_CASE("spin restriction of SO_20 via the quartic embedding of A_3") {
  auto E = emb(2, {0, 2, 0});
  for (int k : {9, 10}) {
    IrrepSum r = restrict_direct(*E, fundamental(10, k));
    REQUIRE(r.terms.size() == 2);
    CHECK(r.mult_of(weight_of({3, 1, 1})) == 1);
    CHECK(r.mult_of(weight_of({1, 1, 3})) == 1);
  }
  // invariance under the graph automorphism of X (orthogonal target)
  IrrepSum r = restrict_direct(*E, fundamental(10, 3));
  CHECK(dual(r) == r);
  // the two half-spins are swapped by duality
  IrrepSum a = restrict_direct(*E, fundamental(10, 9));
  IrrepSum b = restrict_direct(*E, fundamental(10, 10));
  CHECK(dual(a) == b);
}

TEST_CASE("constructed virtual modules agree with the direct pushforward") {
  auto c10 = emb(4, {0, 0, 1, 0, 0});
  for (int i : {2, 3, 4, 9, 10}) {
    Weight lam = fundamental(10, i);
    CHECK(restrict_constructed(*c10, lam) == restrict_direct(*c10, lam));
  }
  for (int a : {2, 3, 4}) {
    Weight lam = fundamental(10, 1) * a;
    CHECK(restrict_constructed(*c10, lam) == restrict_direct(*c10, lam));
  }
  for (int i : {2, 3}) {
    Weight lam = fundamental(10, 1) + fundamental(10, i);
    CHECK(restrict_constructed(*c10, lam) == restrict_direct(*c10, lam));
  }
  CHECK(restrict_constructed(*c10, fundamental(10, 2) * 2) ==
        restrict_direct(*c10, fundamental(10, 2) * 2));
  CHECK(restrict_constructed(*c10, fundamental(10, 1) * 2 + fundamental(10, 2)) ==
        restrict_direct(*c10, fundamental(10, 1) * 2 + fundamental(10, 2)));

  auto b7 = emb(2, {1, 0, 1});
  for (int i : {2, 3, 4}) {
    CHECK(restrict_constructed(*b7, fundamental(7, i)) ==
          restrict_direct(*b7, fundamental(7, i)));
  }
  for (int a : {2, 3}) {
    CHECK(restrict_constructed(*b7, fundamental(7, 1) * a) ==
          restrict_direct(*b7, fundamental(7, 1) * a));
  }

  auto d10 = emb(2, {0, 2, 0});
  for (int i : {2, 3}) {
    CHECK(restrict_constructed(*d10, fundamental(10, i)) ==
          restrict_direct(*d10, fundamental(10, i)));
  }
  CHECK(restrict_constructed(*d10, fundamental(10, 1) * 3) ==
        restrict_direct(*d10, fundamental(10, 1) * 3));
  CHECK_THROWS_AS((void)restrict_constructed(*d10, fundamental(10, 10)), Error);
}

TEST_CASE("grading exponents: closed form equals enumeration") {
  for (auto E : {emb(1, {1, 1}), emb(2, {0, 2, 0}), emb(2, {1, 0, 1})}) {
    TorusGrader T = E->grader();
    for (int i = 1; i <= std::min(4, E->y_rank()); ++i) {
      Weight lam = fundamental(E->y_rank(), i);
      Coord want = std::numeric_limits<Coord>::min();
      auto ch = dominant_character(E->y_sys, lam);
      Weight eps(E->y_sys->eps_dim());
      for_each_full_weight(*ch, [&](const RootSystem::SparseOrbitElement& el, Mult) {
        eps.setConstant(el.base2);
        for (auto& [j, v] : el.entries) eps[j] = v;
        want = std::max(want, T.exp2(push_eps(*E, eps)));
      });
      CHECK(lambda_t_exponent2(*E, lam) == want);
    }
    // spin weights of the D_10 target
    if (E->y_family() == Family::D) {
      for (int k : {E->y_rank() - 1, E->y_rank()}) {
        Weight lam = fundamental(E->y_rank(), k);
        Coord want = std::numeric_limits<Coord>::min();
        auto ch = dominant_character(E->y_sys, lam);
        Weight eps(E->y_sys->eps_dim());
        for_each_full_weight(*ch, [&](const RootSystem::SparseOrbitElement& el, Mult) {
          eps.setConstant(el.base2);
          for (auto& [j, v] : el.entries) eps[j] = v;
          want = std::max(want, T.exp2(push_eps(*E, eps)));
        });
        CHECK(lambda_t_exponent2(*E, lam) == want);
      }
    }
  }
}

TEST_CASE("level peeling agrees with the direct restriction on enumerable modules") {
  auto d10 = emb(2, {0, 2, 0});
  for (int k : {2, 9, 10}) {
    Weight lam = fundamental(10, k);
    PeelResult pr = restrict_levelpeel(*d10, lam);
    CHECK(pr.factors == restrict_direct(*d10, lam));
  }
  auto c10 = emb(4, {0, 0, 1, 0, 0});
  for (int k : {1, 2, 3}) {
    Weight lam = fundamental(10, k);
    PeelResult pr = restrict_levelpeel(*c10, lam);
    CHECK(pr.factors == restrict_direct(*c10, lam));
  }
  // factor levels obey the grading: theta at level n has exponent top - n*step
  Weight lam = fundamental(10, 3);
  PeelResult pr = restrict_levelpeel(*c10, lam);
  Coord top = lambda_t_exponent2(*c10, lam);
  TorusGrader T = c10->grader();
  for (auto& [theta, m, n] : pr.found) CHECK(T.exp2(theta) == top - n * T.alpha_exp2());
}

TEST_CASE("last-label solving from the grading") {
  // spin case of D_35: prefix 000000 at level 0 gives 10; 010100 at level 1 gives 8
  auto E = emb(6, {0, 0, 0, 1, 0, 0, 0});
  CHECK(spin_shortcut_applicable(*E));
  Coord top = 2 * 70; // doubled exponent of the even half-spin ladder
  Weight t0 = solve_last_label(*E, top, 0, zero_weight(6));
  CHECK(WeightEq{}(t0, weight_of({0, 0, 0, 0, 0, 0, 10})));
  Weight t1 = solve_last_label(*E, top, 1, weight_of({0, 1, 0, 1, 0, 0}));
  CHECK(WeightEq{}(t1, weight_of({0, 1, 0, 1, 0, 0, 8})));
  CHECK_THROWS_AS((void)solve_last_label(*E, top, 1, weight_of({1, 0, 0, 0, 0, 0})), Error);

  // S^a(W) for W = omega_1 + omega_m: prefix (a-2)0...0 at level 2 solves to a-2
  auto F = emb(3, {1, 0, 0, 1});
  for (Coord a : {4, 5, 6}) {
    Weight lamY = fundamental(F->y_rank(), 1) * a;
    Coord top2 = lambda_t_exponent2(*F, lamY);
    Weight pre = zero_weight(3);
    pre[0] = 2 * (a - 2);
    Weight sol = solve_last_label(*F, top2, 2, pre);
    CHECK(sol[3] == 2 * (a - 2));
  }
}

TEST_CASE("spin level ladders of the two-level quartic embedding of A_7") {
  auto E = emb(6, {0, 0, 0, 1, 0, 0, 0});
  REQUIRE(spin_shortcut_applicable(*E));
  // W splits into two dual 35-dimensional levels
  auto wl = levels_a_endnode(E->x_sys, E->delta);
  REQUIRE(wl.size() == 2);
  CHECK(weyl_dim(*get_system(Family::A, 6), wl[0].terms.begin()->first) == 35);

  int h9 = spin_half_of(*E, fundamental(35, 34));
  int h10 = spin_half_of(*E, fundamental(35, 35));
  CHECK(h9 + h10 == 1); // the two half-spins land on opposite parities

  XLevels xl = spin_levels(*E, 0, 3);
  CHECK(xl.top_exp2 == 140);
  REQUIRE(xl.levels.size() >= 3);
  CHECK(xl.levels[0] == IrrepSum::trivial(get_system(Family::A, 6)));
  // V^2 = Lambda^2 of the 35-dimensional level; it has a summand 010100
  CHECK(xl.levels[1].mult_of(weight_of({0, 1, 0, 1, 0, 0})) == 1);
  BigInt total = 0;
  XLevels all = spin_levels(*E, 0, 64);
  for (auto& lvl : all.levels) total += dim(lvl);
  CHECK(total == BigInt(1) << 34);

  // quartic embedding of A_3 has three W-levels: no two-level shortcut there
  auto F = emb(2, {0, 2, 0});
  CHECK(!spin_shortcut_applicable(*F));
}

TEST_CASE("full spin peel of the 2^34-dimensional module") {
  auto E = emb(6, {0, 0, 0, 1, 0, 0, 0});
  // pick the half-spin label whose grading parity matches the even ladder
  Weight lam = (spin_half_of(*E, fundamental(35, 35)) == 0) ? fundamental(35, 35)
                                                            : fundamental(35, 34);
  PeelResult pr = restrict_levelpeel(*E, lam);
  CHECK(pr.found.size() == 36);
  CHECK(pr.factors.is_mf());
  CHECK(dim(pr.factors) == BigInt(1) << 34);
  CHECK(pr.factors.mult_of(weight_of({0, 0, 0, 0, 0, 0, 10})) == 1);
  CHECK(pr.factors.mult_of(weight_of({0, 1, 0, 1, 0, 0, 8})) == 1);
  CHECK(pr.factors.mult_of(weight_of({0, 3, 0, 0, 0, 1, 6})) == 1);
  CHECK(pr.factors.mult_of(weight_of({1, 1, 0, 1, 1, 0, 6})) == 1);
  CHECK(pr.factors.mult_of(weight_of({0, 0, 0, 3, 0, 0, 6})) == 1);
  // the dual half-spin restricts to the dual factors
  PeelResult dm = restrict_levelpeel(*E, E->y_sys->dual_weight(lam));
  CHECK(dm.factors == dual(pr.factors));
}
