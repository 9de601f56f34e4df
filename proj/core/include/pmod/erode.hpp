#pragma once
// Erosion functor, erosion-neighborhood witnesses, the canonical interleaving
// between a module and any neighborhood member, and the common-member
// construction from an interleaving.

#include <optional>

#include "pmod/isom.hpp"
#include "pmod/module.hpp"
#include "pmod/subquotient.hpp"

namespace pmod {

// Img_eps(M)_q = img(M_{q-eps -> q}); Ker_eps(M)_q = ker(M_{q -> q+eps})
Submodule img_eps(const Module& M, int eps);
Submodule ker_eps(const Module& M, int eps);

struct Erosion {
  ModPtr module;          // Er_eps(M) = Img/(Ker ∩ Img)
  Subquotient pres;
  int eps;
};
Erosion erosion(const Module& M, int eps);
// pointwise dim of Er_eps(M) without building it: rank of M_{q-eps -> q+eps}
std::vector<int> erosion_dims(const Module& M, int eps);

struct ENWitness {
  ModPtr ambient;
  Submodule M1, M2;
  int eps;
};

struct ENCheck {
  bool ok = false;
  std::string violation;      // which containment fails, and where
  std::optional<Subquotient> pres;
  ModPtr member;
};
ENCheck check_en_witness(const ENWitness& w);

// canonical eps-interleaving between M and the member E = M1/M2:
// phi: M -> E(eps) and psi: E -> M(eps), both induced by M_{0->eps}
struct ENInterleaving {
  ModPtr member;
  Morphism phi, psi;
};
ENInterleaving en_interleaving(const ENWitness& w, const Subquotient& pres);

struct CommonEN {
  ENWitness on_M, on_N;
  ModPtr member_M, member_N;
  Tri members_isomorphic;
};
// phi: M -> N(eps), psi: N -> M(eps) must verify the interleaving identities.
CommonEN common_en_from_interleaving(const Module& M, const Module& N, const Morphism& phi,
                                     const Morphism& psi, int eps, u64 seed = 1);

// exact oracle on tiny GF(2) instances: is N isomorphic to some member of
// EN_eps(M)?  caps: p=2, total dim M <= 8, <= 16 support points
bool en_membership_bruteforce(const Module& N, const Module& M, int eps);

}  // namespace pmod
