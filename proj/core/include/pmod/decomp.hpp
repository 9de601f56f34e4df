#pragma once
// Direct-sum decomposition into indecomposables (Fitting splits + endomorphism
// ring locality certification), barcodes, refinement checks, and brute-force
// subquotient/submodule enumeration oracles over GF(2).

#include <functional>
#include <optional>

#include "pmod/erode.hpp"
#include "pmod/isom.hpp"
#include "pmod/module.hpp"

namespace pmod {

struct CertificationInconclusive : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Decomposition {
  std::vector<ModPtr> parts;
  std::vector<Morphism> incl;   // part -> M
  std::vector<Morphism> proj;   // M -> part
  std::vector<bool> certified;  // indecomposability certified per part
  bool all_certified() const;
};
struct DecompCaps {
  int fitting_trials = 64;
  int exhaustive_end_dim = 12;          // End-ring element enumeration cap (GF(2)/GF(3))
  long long exhaustive_elems = 600000;
  bool throw_on_uncertified = false;    // if true: CertificationInconclusive
};
Decomposition decompose(const Module& M, u64 seed = 1, DecompCaps caps = {});

struct Barcode {
  std::vector<ModPtr> reps;          // pairwise non-isomorphic
  std::vector<int> multiplicities;
  bool all_certified = true;
};
Barcode barcode(const Module& M, u64 seed = 1, DecompCaps caps = {});
// multiset equality up to isomorphism
Tri barcodes_equal(const Barcode& a, const Barcode& b, u64 seed = 1);

// ---- refinement ------------------------------------------------------------

// Exact membership test for a candidate support J in EN_eps(k_I), where I is
// an interval and the candidate module is a disjoint union of intervals with
// pointwise dimension <= 1 (a subquotient support of the indicator module).
bool interval_en_membership(const Grid& g, const std::set<Point>& I, const std::set<Point>& J,
                            int eps);

struct RefinementOptions {
  // grouping[r] = index of the M-part that R-part r is assigned to; empty =
  // search over assignments (small part counts only)
  std::vector<int> grouping;
  u64 seed = 1;
  bool allow_bruteforce = true;  // tiny GF(2) fallback through the EN oracle
};
// is R an eps-refinement of M?  Exact when all parts are recognizable
// intervals (or upsets); otherwise falls back to the brute-force oracle under
// its caps, else Unknown.
Tri is_refinement(const Module& R, const Module& M, int eps, RefinementOptions opt = {});

// exact oracle: is N a subquotient of M?  caps: p=2, total dim M <= 8
bool subquotient_bruteforce(const Module& N, const Module& M);

// ---- GF(2) enumeration machinery (shared by the oracles) --------------------

// canonical bases of all subspaces of GF(2)^d (d <= 6)
const std::vector<Matrix>& all_subspaces_gf2(int d);
// enumerate submodules S with lower ⊆ S ⊆ upper; cb returns true to stop early
bool foreach_submodule_gf2(const Module& M, const Submodule& lower, const Submodule& upper,
                           const std::function<bool(const Submodule&)>& cb);

// recognize a module isomorphic to the indicator module of an interval support
std::optional<std::set<Point>> recognize_interval(const Module& M, u64 seed = 1);

}  // namespace pmod
