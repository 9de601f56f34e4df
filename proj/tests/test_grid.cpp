#include "doctest.h"
#include "pmod/grid.hpp"

using namespace pmod;

TEST_CASE("grid indexing is a linear extension") {
  Grid g = Grid::square(2, 4);
  for (long long i = 0; i < g.npoints(); ++i) CHECK(g.index(g.point(i)) == i);
  CHECK(g.index({0, 0}) < g.index({0, 1}));
  CHECK(g.index({0, 1}) < g.index({1, 0}));
}

TEST_CASE("interval axioms: convexity and connectivity") {
  Grid g = Grid::square(2, 4);
  // a gap on the diagonal violates convexity at the midpoint
  auto v = check_interval(g, {{0, 0}, {2, 2}});
  REQUIRE(v.has_value());
  CHECK(v->kind == IntervalViolation::ConvexityViolation);
  REQUIRE(v->witness.size() == 3);
  // the witness is a chain p <= q <= r with q missing from the set
  CHECK(leq(v->witness[0], v->witness[1]));
  CHECK(leq(v->witness[1], v->witness[2]));
  std::set<Point> S{{0, 0}, {2, 2}};
  CHECK(S.count(v->witness[0]) == 1);
  CHECK(S.count(v->witness[1]) == 0);
  CHECK(S.count(v->witness[2]) == 1);
  // two incomparable points are zigzag-disconnected
  auto w = check_interval(g, {{0, 2}, {2, 0}});
  REQUIRE(w.has_value());
  CHECK(w->kind == IntervalViolation::DisconnectedParts);
  // an L-shape is a valid interval
  CHECK_FALSE(check_interval(g, {{0, 0}, {0, 1}, {1, 0}}).has_value());
}

TEST_CASE("zigzag components") {
  // (0,3) and (0,4) are comparable; (3,0) is incomparable to both
  auto comps = zigzag_components({{0, 3}, {0, 4}, {3, 0}});
  CHECK(comps.size() == 2);
  // a comparable chain through a common upper bound is one component
  auto one = zigzag_components({{0, 3}, {3, 0}, {3, 3}});
  CHECK(one.size() == 1);
}

TEST_CASE("upsets: membership, shifts, containment") {
  UpsetShape U = UpsetShape::from_points(2, {{2, 0}, {0, 2}});
  UpsetShape V = UpsetShape::from_points(2, {{3, 1}, {1, 3}});
  CHECK(U.contains({2, 5}));
  CHECK_FALSE(U.contains({1, 1}));
  CHECK(upset_contains(U, V));        // V inside U
  CHECK_FALSE(upset_contains(V, U));  // but not conversely
  CHECK(upset_contains_shifted(V, U, 1));   // U ⊆ V(1)
  CHECK_FALSE(upset_contains_shifted(V, U, 0));
  // redundant generators collapse to the antichain
  UpsetShape W = UpsetShape::from_points(2, {{0, 0}, {1, 1}});
  CHECK(W.gens.size() == 1);
}

TEST_CASE("upset union and intersection") {
  UpsetShape U = UpsetShape::from_points(2, {{2, 0}});
  UpsetShape V = UpsetShape::from_points(2, {{0, 2}});
  UpsetShape un = upset_union(U, V);
  UpsetShape in = upset_intersection(U, V);
  CHECK(un.contains({2, 0}));
  CHECK(un.contains({0, 2}));
  CHECK_FALSE(in.contains({2, 0}));
  CHECK(in.contains({2, 2}));
}

TEST_CASE("interval parts recover the shape as an upset difference") {
  Grid g = Grid::square(2, 6);
  // a hook: everything above (1,1) minus everything above (3,3)
  std::set<Point> pts;
  for (int x = 1; x < 6; ++x)
    for (int y = 1; y < 6; ++y)
      if (!(x >= 3 && y >= 3)) pts.insert({x, y});
  IntervalShape I = validate_interval(g, pts);
  IntervalParts parts = interval_parts(I);
  CHECK(upset_difference_points(parts.U, parts.E, g) == pts);
}
