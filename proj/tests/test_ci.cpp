#include "doctest.h"
#include "pmod/ci.hpp"
#include "pmod/distances.hpp"
#include "pmod/fixtures.hpp"

using namespace pmod;

TEST_CASE("verification of pattern solutions") {
  CIProblem prob;
  prob.n = 2;
  prob.P = {{true, false}, {false, true}};
  prob.Q = {{true, false}, {false, true}};
  CISolution id{Matrix::identity(2, 5), Matrix::identity(2, 5)};
  CIVerify v = verify_ci_solution(prob, id);
  CHECK(v.valid);
  CHECK(v.simple);
  // an off-pattern entry is rejected
  CISolution bad = id;
  bad.A.at(0, 1) = 1;
  CHECK_FALSE(verify_ci_solution(prob, bad).valid);
}

TEST_CASE("exhaustive solver agrees with the matcher on diagonal patterns") {
  CIProblem prob;
  prob.n = 3;
  prob.P.assign(3, std::vector<bool>(3, false));
  prob.Q.assign(3, std::vector<bool>(3, false));
  for (int i = 0; i < 3; ++i) {
    prob.P[i][i] = prob.Q[i][i] = true;
    prob.P[i][(i + 1) % 3] = true;
  }
  auto sol = solve_ci(prob, 2);
  REQUIRE(sol.has_value());
  CHECK(verify_ci_solution(prob, *sol).valid);
  CHECK(simple_solution(prob).has_value());
}

TEST_CASE("weakening grows monotonically and needs an odd constant") {
  CIProblem prob = pattern_no_simple();
  CHECK_THROWS_AS(weaken(prob, 2), EvenC);
  CIProblem w1 = weaken(prob, 1);
  CHECK(w1.P == prob.P);
  CHECK(w1.Q == prob.Q);
  CIProblem w3 = weaken(prob, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (prob.P[i][j]) CHECK(w3.P[i][j]);
      if (prob.Q[i][j]) CHECK(w3.Q[i][j]);
    }
}

TEST_CASE("upset containment drives the pattern of two families") {
  auto [U, V] = staircase_upset_pair();
  CIProblem prob = ci_from_upsets({U}, {V}, 1);
  CHECK(prob.P[0][0]);  // U ⊆ V(1)
  CIProblem tight = ci_from_upsets({U}, {V}, 0);
  CHECK_FALSE(tight.P[0][0]);
  CHECK(tight.Q[0][0]);  // V ⊆ U
}

TEST_CASE("benign block construction yields a solved problem") {
  Grid g = Grid::square(2, 6);
  std::set<Point> us = upset_points_in(UpsetShape::from_points(2, {{1, 1}}), g);
  std::set<Point> vs = upset_points_in(UpsetShape::from_points(2, {{0, 0}}), g);
  ModPtr M = indicator_module(g, 5, us);
  ModPtr N = indicator_module(g, 5, vs);
  Morphism phi(M, shift_module(*N, 1)), psi(N, shift_module(*M, 1));
  for (long long i = 0; i < g.npoints(); ++i) {
    Point q = g.point(i);
    Point r = shifted(q, 1);
    if (!g.inside(r)) continue;
    if (us.count(q) && vs.count(r)) phi.comp[i].at(0, 0) = 1;
    if (vs.count(q) && us.count(r)) psi.comp[i].at(0, 0) = 1;
  }
  REQUIRE(verify_interleaving(*M, *N, phi, psi, 1));
  BenignBlockCI out = benign_block_ci(*M, {us}, *N, {vs}, phi, psi, 1);
  CIVerify v = verify_ci_solution(out.prob, out.sol);
  CHECK(v.valid);
}

TEST_CASE("non-benign families are rejected") {
  Grid g = Grid::square(2, 8);
  // a truncated staircase has a non-principal up-closure and a nonempty erased
  // part, so the family is not benign
  std::set<Point> stair;
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      if ((x >= 2 || y >= 2) && !(x >= 4 && y >= 4)) stair.insert({x, y});
  ModPtr M = indicator_module(g, 5, stair);
  Morphism phi(M, shift_module(*M, 0)), psi(M, shift_module(*M, 0));
  for (long long i = 0; i < g.npoints(); ++i)
    if (M->dim[i]) {
      phi.comp[i].at(0, 0) = 1;
      psi.comp[i].at(0, 0) = 1;
    }
  std::vector<std::set<Point>> fam{stair};
  CHECK_THROWS_AS(benign_block_ci(*M, fam, *M, fam, phi, psi, 0), NotBenign);
}

TEST_CASE("endomorphism-built interleaving on a bar") {
  Grid g(std::vector<int>{10});
  ModPtr M = bar_module(g, 5, 0, 8);
  Morphism f(M, shift_module(*M, 1));
  for (long long i = 0; i < g.npoints(); ++i)
    if (f.comp[i].rows && f.comp[i].cols) f.comp[i].at(0, 0) = 3;
  ShiftInterleavingPair pair = interleaving_from_endomorphism(*M, f, 1);
  CHECK(verify_interleaving(*pair.A, *pair.B, pair.phi, pair.psi, 1));
}
