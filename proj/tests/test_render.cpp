#include "doctest.h"
#include "pmod/fixtures.hpp"
#include "pmod/render.hpp"

using namespace pmod;

TEST_CASE("render produces deterministic SVG") {
  ModPtr M = square_with_legs(1);
  std::string a = render_svg(*M);
  std::string b = render_svg(*M);
  CHECK(a == b);
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
}

TEST_CASE("geometry depends only on pointwise dimensions") {
  Grid g = Grid::square(2, 6);
  ModPtr M = random_module(g, kDefaultP, 4);
  ModPtr N = base_change(*M, 17);  // isomorphic copy, same dims
  CHECK(render_svg(*M) == render_svg(*N));
}

TEST_CASE("only two-parameter modules render") {
  Grid g(std::vector<int>{5});
  ModPtr M = bar_module(g, 5, 0, 3);
  CHECK_THROWS_AS(render_svg(*M), std::invalid_argument);
}
