#pragma once
// Isomorphism testing: pointwise-dimension and rank filters, randomized search
// for a pointwise-invertible hom, exhaustive fallback over small fields.

#include <optional>

#include "pmod/module.hpp"

namespace pmod {

enum class Tri { Yes, No, Unknown };

struct IsoResult {
  Tri verdict = Tri::Unknown;
  std::optional<Morphism> witness;  // invertible natural transformation when Yes
};

struct IsoCaps {
  int random_trials = 48;
  int exhaustive_hom_dim = 12;        // exhaustive coefficient search cap (GF(2)/GF(3))
  long long exhaustive_combos = 600000;
};

IsoResult are_isomorphic(const Module& M, const Module& N, u64 seed = 1, IsoCaps caps = {});
bool morphism_pointwise_invertible(const Morphism& f);

}  // namespace pmod
