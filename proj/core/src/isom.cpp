#include "pmod/isom.hpp"

#include "pmod/rng.hpp"

namespace pmod {

bool morphism_pointwise_invertible(const Morphism& f) {
  for (const auto& c : f.comp)
    if (!(c.rows == c.cols && (c.rows == 0 || invertible(c)))) return false;
  return true;
}

static Morphism combo(const std::vector<Morphism>& basis, const std::vector<u32>& coef) {
  Morphism f(basis[0].src, basis[0].dst);
  for (size_t i = 0; i < basis.size(); ++i)
    if (coef[i]) f = madd(f, mscale(basis[i], coef[i]));
  return f;
}

IsoResult are_isomorphic(const Module& M, const Module& N, u64 seed, IsoCaps caps) {
  IsoResult res;
  if (!(M.grid == N.grid) || M.p != N.p) {
    res.verdict = Tri::No;
    return res;
  }
  if (M.dim != N.dim) {
    res.verdict = Tri::No;
    return res;
  }
  if (M.is_zero()) {
    res.verdict = Tri::Yes;
    res.witness = identity_morphism(std::make_shared<Module>(M));
    return res;
  }
  // rank filter on every edge composite of length <= 1 (the rank invariant on
  // covering pairs is an iso invariant)
  for (int ax = 0; ax < M.d(); ++ax)
    for (long long i = 0; i < M.npoints(); ++i)
      if (rank(M.edge[ax][i]) != rank(N.edge[ax][i])) {
        res.verdict = Tri::No;
        return res;
      }
  auto H = hom_basis(M, N);
  if (H.empty()) {
    res.verdict = Tri::No;
    return res;
  }
  Rng rng(seed);
  std::vector<u32> coef(H.size());
  for (int t = 0; t < caps.random_trials; ++t) {
    for (auto& c : coef) c = rng.field_elem(M.p);
    Morphism f = combo(H, coef);
    if (morphism_pointwise_invertible(f)) {
      res.verdict = Tri::Yes;
      res.witness = std::move(f);
      return res;
    }
  }
  // exhaustive fallback over small fields
  if ((M.p == 2 || M.p == 3) && (int)H.size() <= caps.exhaustive_hom_dim) {
    long long total = 1;
    for (size_t i = 0; i < H.size(); ++i) {
      total *= M.p;
      if (total > caps.exhaustive_combos) break;
    }
    if (total <= caps.exhaustive_combos) {
      std::fill(coef.begin(), coef.end(), 0);
      for (long long n = 1; n < total; ++n) {
        int i = 0;
        while (true) {
          coef[i] = (coef[i] + 1) % M.p;
          if (coef[i] != 0) break;
          ++i;
        }
        Morphism f = combo(H, coef);
        if (morphism_pointwise_invertible(f)) {
          res.verdict = Tri::Yes;
          res.witness = std::move(f);
          return res;
        }
      }
      res.verdict = Tri::No;  // exhaustive search is definitive
      return res;
    }
  }
  res.verdict = Tri::Unknown;
  return res;
}

}  // namespace pmod
