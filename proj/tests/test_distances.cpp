#include "doctest.h"
#include "pmod/distances.hpp"
#include "pmod/erode.hpp"
#include "pmod/fixtures.hpp"

using namespace pmod;

TEST_CASE("interleaving verification accepts shifts and rejects mismatches") {
  Grid g(std::vector<int>{12});
  ModPtr A = bar_module(g, 5, 0, 8);
  ModPtr B = bar_module(g, 5, 1, 9);
  // the canonical 1-interleaving between a bar and its unit shift
  Morphism phi(A, shift_module(*B, 1)), psi(B, shift_module(*A, 1));
  for (long long i = 0; i < g.npoints(); ++i) {
    if (phi.comp[i].rows && phi.comp[i].cols) phi.comp[i].at(0, 0) = 1;
    if (psi.comp[i].rows && psi.comp[i].cols) psi.comp[i].at(0, 0) = 1;
  }
  CHECK(verify_interleaving(*A, *B, phi, psi, 1));
  // zero morphisms do not interleave nonzero modules at small epsilon
  Morphism z1 = zero_morphism(A, shift_module(*B, 1));
  Morphism z2 = zero_morphism(B, shift_module(*A, 1));
  CHECK_FALSE(verify_interleaving(*A, *B, z1, z2, 1));
}

TEST_CASE("erosion distance of shifted bars") {
  Grid g(std::vector<int>{20});
  ModPtr A = bar_module(g, kDefaultP, 0, 10);
  ModPtr B = bar_module(g, kDefaultP, 2, 12);
  CHECK(d_E(*A, *A) == 0);
  CHECK(d_E(*A, *B) == 2);
}

TEST_CASE("interleaving search finds witnesses and proves absence") {
  Grid g(std::vector<int>{10});
  ModPtr A = bar_module(g, 2, 0, 6);
  ModPtr B = bar_module(g, 2, 1, 7);
  auto w = search_interleaving(*A, *B, 1);
  REQUIRE(w.has_value());
  CHECK(verify_interleaving(*A, *B, w->phi, w->psi, 1));
  CHECK_FALSE(search_interleaving(*A, *B, 0).has_value());
}

TEST_CASE("bottleneck distance on bars") {
  std::vector<Bar> A{{0, 10}, {2, 4}};
  std::vector<Bar> B{{1, 9}, {2, 4}};
  CHECK(bottleneck_bars(A, B).value == 1);
  // deleting a short bar beats matching it far away
  std::vector<Bar> C{{0, 10}};
  std::vector<Bar> D{{0, 10}, {20, 22}};
  CHECK(bottleneck_bars(C, D).value == 1);
  CHECK(bottleneck_bars({}, {}).value == 0);
}

TEST_CASE("bottleneck over upset families") {
  Grid box = Grid::square(2, 10);
  UpsetShape U1 = UpsetShape::from_points(2, {{1, 1}});
  UpsetShape V1 = UpsetShape::from_points(2, {{3, 3}});
  BottleneckResult r = bottleneck_upsets({U1}, {V1}, box);
  CHECK(r.value == 2);
}

TEST_CASE("neighborhood distance bracket") {
  Grid g = Grid::square(2, 6);
  ModPtr M = indicator_module(g, kDefaultP, rect_support(0, 4, 0, 4));
  DistanceBracket same = d_EN_bracket(*M, *M);
  CHECK(same.lower == 0);
  CHECK(same.upper == 0);
  ModPtr N = erosion(*M, 1).module;
  DistanceBracket br = d_EN_bracket(*M, *N);
  CHECK(br.lower >= 0);
}
