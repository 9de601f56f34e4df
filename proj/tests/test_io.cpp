#include "doctest.h"
#include "pmod/erode.hpp"
#include "pmod/fixtures.hpp"
#include "pmod/io.hpp"

using namespace pmod;

TEST_CASE("module serialization round trip") {
  Grid g = Grid::square(2, 5);
  for (u64 seed = 1; seed <= 6; ++seed) {
    ModPtr M = random_module(g, kDefaultP, seed);
    std::string text = serialize_module(*M);
    ModPtr back = parse_module(text);
    CHECK(*back == *M);
    CHECK(serialize_module(*back) == text);
  }
}

TEST_CASE("parse errors carry context") {
  CHECK_THROWS_AS(parse_module("not a module"), ParseError);
  CHECK_THROWS_AS(parse_module("pmod 1\nfield 5\naxes 1\npoint 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_module("pmod 1\nfield 5\naxes 1\nsize 3\npoint 7 1\n"), ParseError);
}

TEST_CASE("commutativity is validated on load") {
  Grid g = Grid::square(2, 2);
  Module M(g, 5);
  for (auto& d : M.dim) d = 1;
  M.init_edges();
  M.edge_mut(0, g.index({0, 0})).at(0, 0) = 1;
  M.edge_mut(1, g.index({0, 0})).at(0, 0) = 1;
  M.edge_mut(1, g.index({1, 0})).at(0, 0) = 2;  // breaks the square
  M.edge_mut(0, g.index({0, 1})).at(0, 0) = 1;
  std::string text = serialize_module(M);
  CHECK_THROWS_AS(parse_module(text), CommutativityViolation);
}

TEST_CASE("submodule round trip") {
  Grid g = Grid::square(2, 4);
  ModPtr M = random_module(g, kDefaultP, 3);
  Submodule s = img_eps(*M, 1);
  s.ambient = M;
  std::string text = serialize_submodule(s);
  Submodule back = parse_submodule(text, M);
  CHECK(sub_equal(s, back));
}

TEST_CASE("pattern problem round trip") {
  CIProblem prob = pattern_no_simple();
  CIProblem back = parse_ci(serialize_ci(prob));
  CHECK(back.n == prob.n);
  CHECK(back.P == prob.P);
  CHECK(back.Q == prob.Q);
}

TEST_CASE("upset family round trip") {
  auto [U, V] = staircase_upset_pair();
  std::vector<UpsetShape> fam{U, V};
  auto back = parse_upsets(serialize_upsets(fam));
  REQUIRE(back.size() == 2);
  CHECK(back[0] == U);
  CHECK(back[1] == V);
}

TEST_CASE("bar list round trip") {
  std::vector<Bar> bars{{0, 4}, {2, 9}};
  auto back = parse_bars(serialize_bars(bars));
  REQUIRE(back.size() == 2);
  CHECK(back[0].a == 0);
  CHECK(back[1].b == 9);
}
