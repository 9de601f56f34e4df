#include "doctest.h"
#include "pmod/fixtures.hpp"
#include "pmod/isom.hpp"
#include "pmod/prune.hpp"

using namespace pmod;

TEST_CASE("pruning a rectangle shrinks it symmetrically") {
  Grid g = Grid::square(2, 12);
  ModPtr M = indicator_module(g, kDefaultP, rect_support(1, 8, 1, 8));
  Pruning pr = pruning(*M, 1);
  // the kernel band dies, then the quotient is recentered by one step
  ModPtr expect = indicator_module(g, kDefaultP, rect_support(2, 7, 2, 7));
  CHECK(are_isomorphic(*pr.module, *expect).verdict == Tri::Yes);
}

TEST_CASE("pruning at zero is an isomorphism") {
  Grid g = Grid::square(2, 4);
  for (u64 seed = 1; seed <= 4; ++seed) {
    ModPtr M = random_module(g, kDefaultP, seed);
    Pruning pr = pruning(*M, 0);
    CHECK(are_isomorphic(*pr.module, *M).verdict == Tri::Yes);
  }
}

TEST_CASE("pruning pair is nested and edge-closed") {
  Grid g = Grid::square(2, 4);
  for (u64 seed = 5; seed <= 10; ++seed) {
    ModPtr M = random_module(g, kDefaultP, seed);
    PruningPair pp = pruning_pair(*M, 1);
    CHECK(sub_contains(pp.I, pp.K));
    CHECK(sub_is_closed(pp.I));
    CHECK(sub_is_closed(pp.K));
  }
}

TEST_CASE("pruning of a direct sum with no cross morphisms splits summand-wise") {
  // incomparable rectangles admit no morphisms into each other's shifts, so
  // the invariant-pair iterations decouple summand by summand
  Grid g = Grid::square(2, 12);
  ModPtr A = indicator_module(g, kDefaultP, rect_support(1, 4, 6, 9));
  ModPtr B = indicator_module(g, kDefaultP, rect_support(6, 9, 1, 4));
  ModPtr S = direct_sum({A, B}, g, kDefaultP).mod;
  Pruning prS = pruning(*S, 1);
  ModPtr expect = direct_sum({pruning(*A, 1).module, pruning(*B, 1).module}, g, kDefaultP).mod;
  CHECK(are_isomorphic(*prS.module, *expect).verdict == Tri::Yes);
}
