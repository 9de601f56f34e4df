#pragma once
// Distances and interleavings: erosion distance (exact on the grid),
// interleaving verification/search, bottleneck matchings, neighborhood-distance
// brackets.

#include <optional>

#include "pmod/module.hpp"

namespace pmod {

struct NotAnInterleaving : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// phi: M -> N(eps), psi: N -> M(eps), both natural, composing to the 2eps
// transitions.
bool verify_interleaving(const Module& M, const Module& N, const Morphism& phi,
                         const Morphism& psi, int eps);

// smallest integer eps with Er_eps(M) <=* N and Er_eps(N) <=* M (pointwise dims)
int d_E(const Module& M, const Module& N);

struct InterleavingSearchCaps {
  u32 field = 2;            // 2 or 3
  int max_coeffs = 14;      // dimension of Hom(M, N(eps)) we are willing to enumerate
  long long max_combos = 4000000;
};
struct InterleavingWitness {
  Morphism phi, psi;
};
// exhaustive within caps; nullopt = provably no interleaving in the searched
// field; throws CapExceeded when enumeration would exceed caps
std::optional<InterleavingWitness> search_interleaving(const Module& M, const Module& N, int eps,
                                                       InterleavingSearchCaps caps = {});

// 1-parameter bottleneck distance between two multisets of bars [a,b).
struct Bar {
  int a, b;
};
struct BottleneckResult {
  int value;
  std::vector<std::pair<int, int>> matching;  // (i in A, j in B); unmatched = deleted
};
BottleneckResult bottleneck_bars(const std::vector<Bar>& A, const std::vector<Bar>& B);

struct NoFiniteMatching : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// bottleneck over upset summand families; deletion cost of an upset is the
// least eps at which its module on the box is eps-interleaved with 0.
BottleneckResult bottleneck_upsets(const std::vector<UpsetShape>& U, const std::vector<UpsetShape>& V,
                                   const Grid& box);

struct DistanceBracket {
  int lower = 0;
  int upper = -1;  // -1 = unbounded
  std::string note;
};
// Upper bound from a verified eps-interleaving (through the common-subquotient
// construction); lower bound from d_E and an optional verified interleaving
// lower bound on d_I.
DistanceBracket d_EN_bracket(const Module& M, const Module& N,
                             const std::optional<InterleavingWitness>& itl = std::nullopt,
                             int itl_eps = -1, int d_I_lower = 0);

}  // namespace pmod
