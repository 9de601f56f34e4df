#pragma once
// Reusable fixture constructions: the almost-decomposable square-with-legs
// module whose pruning splits in two, the strip-core interleaved pair, the
// erosion-vs-bottleneck bar family, the 3x3 pattern problem without a simple
// solution, and seeded random module generators.

#include "pmod/ci.hpp"
#include "pmod/distances.hpp"
#include "pmod/module.hpp"

namespace pmod {

std::set<Point> rect_support(int a1, int b1, int a2, int b2);  // inclusive corners

// (I1 ⊕ I2) / img [1,1]^T with I1 = [10,30]x[10-2e,30], I2 transposed,
// I3 = [30-2e,30]^2 on a 40x40 grid; its e-pruning is L ⊕ L with
// L = [10+e,30-e]^2 \ [30-3e,30-e]^2
ModPtr square_with_legs(int eps, u32 p = kDefaultP);
std::set<Point> square_with_legs_L(int eps);

// M = k^2 on [8,30]^2; N = strips {8}x[9,30], [9,30]x{8} (dim 1) feeding a
// dim-2 core [9,30]^2 minus the top corner, with a dim-1 corner at (30,30);
// phi/psi form a 1-interleaving
struct InterleavedPair {
  ModPtr M, N;
  Morphism phi, psi;
  int eps = 1;
};
InterleavedPair strip_core_pair(u32 p = kDefaultP);

// bars: M = ⊕_{i=1..2c-2} [2c-1-i, 4c-1+i), N = M plus A = [0, 2c);
// d_E(M,N) = 1, bottleneck distance exactly c
struct BarsFamily {
  std::vector<Bar> A, B;
  ModPtr M, N;  // 1-parameter bar-sum modules
  int c;
};
BarsFamily erosion_vs_bottleneck_family(int c, u32 p = kDefaultP);

// 3x3 pattern pair with a solution over every field but no simple solution
CIProblem pattern_no_simple();
CISolution pattern_no_simple_solution(u32 p);

// staircase upsets U = <(2,0)> ∪ <(0,2)>, V = <(3,1)> ∪ <(1,3)>
std::pair<UpsetShape, UpsetShape> staircase_upset_pair();

// seeded random modules on small grids: direct sums of rectangles, optionally
// base-changed or quotiented by the image of a random morphism
ModPtr random_module(const Grid& g, u32 p, u64 seed, int parts = 3);
ModPtr random_rect_sum(const Grid& g, u32 p, u64 seed, int parts = 3);
Morphism random_morphism(ModPtr src, ModPtr dst, u64 seed);

// named fixture corpus for the regression suite (modules only)
std::vector<std::pair<std::string, ModPtr>> fixture_corpus(u32 p = kDefaultP);

}  // namespace pmod
