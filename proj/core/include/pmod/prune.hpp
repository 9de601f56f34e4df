#pragma once
// Pruning: the canonical member of the 2eps-erosion neighborhood cut out by
// the full endomorphism family M -> M(2eps).  I is the largest submodule
// carried into itself (after shift) by every such morphism, K the smallest
// submodule of I absorbing everything the family pushes forward; the pruned
// module is (I/K) recentered by eps.

#include "pmod/module.hpp"
#include "pmod/subquotient.hpp"

namespace pmod {

struct PruningPair {
  ModPtr ambient;
  Submodule I, K;
  int eps;
  int steps_I = 0, steps_K = 0;  // iterations until each fixpoint
};

// extra: optional additional morphisms M -> M(2eps) beyond a basis of
// Hom(M, M(2eps)) (used by tests; the basis is always included)
PruningPair pruning_pair(const Module& M, int eps);

struct Pruning {
  ModPtr module;  // Pr_eps(M)
  PruningPair pair;
  Subquotient pres;  // presentation of I/K before recentering
};
Pruning pruning(const Module& M, int eps);

}  // namespace pmod
