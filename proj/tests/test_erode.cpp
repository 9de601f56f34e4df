#include "doctest.h"
#include "pmod/erode.hpp"
#include "pmod/fixtures.hpp"

using namespace pmod;

TEST_CASE("one-parameter interval erosion") {
  Grid g(std::vector<int>{12});
  ModPtr bar = bar_module(g, kDefaultP, 0, 10);
  ModPtr er = erosion(*bar, 1).module;
  ModPtr expect = bar_module(g, kDefaultP, 1, 9);
  CHECK(are_isomorphic(*er, *expect).verdict == Tri::Yes);
}

TEST_CASE("erosion dims shortcut matches the constructed module") {
  Grid g = Grid::square(2, 5);
  for (u64 seed = 1; seed <= 6; ++seed) {
    ModPtr M = random_module(g, kDefaultP, seed);
    for (int eps = 0; eps <= 2; ++eps) {
      Erosion er = erosion(*M, eps);
      CHECK(er.module->dim == erosion_dims(*M, eps));
    }
  }
}

TEST_CASE("erosion at zero is the module itself") {
  Grid g = Grid::square(2, 4);
  ModPtr M = random_module(g, kDefaultP, 7);
  CHECK(are_isomorphic(*erosion(*M, 0).module, *M).verdict == Tri::Yes);
}

TEST_CASE("the erosion presentation is a valid neighborhood witness") {
  Grid g = Grid::square(2, 4);
  ModPtr M = random_module(g, kDefaultP, 15);
  Erosion er = erosion(*M, 1);
  ENCheck ec = check_en_witness(ENWitness{er.pres.ambient, er.pres.M1, er.pres.M2, 1});
  CHECK(ec.ok);
  CHECK(are_isomorphic(*ec.member, *er.module).verdict == Tri::Yes);
}

TEST_CASE("canonical interleaving with a neighborhood member verifies") {
  Grid g = Grid::square(2, 4);
  for (u64 seed = 20; seed <= 25; ++seed) {
    ModPtr M = random_module(g, kDefaultP, seed);
    Erosion er = erosion(*M, 1);
    ENWitness w{er.pres.ambient, er.pres.M1, er.pres.M2, 1};
    ENInterleaving itl = en_interleaving(w, er.pres);
    CHECK(itl.phi.is_natural());
    CHECK(itl.psi.is_natural());
  }
}

TEST_CASE("witness rejection pinpoints the violated containment") {
  Grid g = Grid::square(2, 4);
  ModPtr M = indicator_module(g, 5, rect_support(0, 3, 0, 3));
  // M2 not inside the kernel: the full module survives one step at (0,0)
  ENCheck ec = check_en_witness(ENWitness{M, full_submodule(M), full_submodule(M), 1});
  CHECK_FALSE(ec.ok);
  CHECK(ec.violation.find("Ker") != std::string::npos);
}

TEST_CASE("tiny membership oracle accepts the erosion and rejects a stranger") {
  Grid g(std::vector<int>{8});
  ModPtr M = bar_module(g, 2, 0, 8);
  ModPtr er = erosion(*M, 1).module;
  CHECK(en_membership_bruteforce(*er, *M, 1));
  ModPtr big = direct_sum({M, M}, g, 2).mod;
  CHECK_FALSE(en_membership_bruteforce(*big, *M, 1));
}
