#include "pmod/prune.hpp"

namespace pmod {

PruningPair pruning_pair(const Module& M, int eps) {
  if (eps < 0) throw std::invalid_argument("pruning_pair needs eps >= 0");
  ModPtr Mp = std::make_shared<Module>(M);
  ModPtr M2e = shift_module(M, 2 * eps);
  std::vector<Morphism> F = hom_basis(M, *M2e);

  const Grid& g = M.grid;
  const long long P = g.npoints();
  auto total = [&](const Submodule& s) {
    long long t = 0;
    for (const auto& b : s.basis) t += b.cols;
    return t;
  };

  // I: largest submodule with f(I) ⊆ t(I) for every f in the family, where t
  // is the diagonal transition M -> M(2eps).  Iterate
  //   I <- ∩_f f^{-1}(t(I)),  pointwise: {x : f_p(x) in t_p(I_p)};
  // the chain descends, so comparing total dimension detects the fixpoint.
  Submodule I = full_submodule(Mp);
  int steps_I = 0;
  while (true) {
    Submodule next{Mp, std::vector<Matrix>(P)};
    for (long long i = 0; i < P; ++i) {
      Point q = g.point(i);
      Point r = shifted(q, 2 * eps);
      Matrix W = I.basis[i];
      if (g.inside(r)) {
        Matrix pushed = colspan(path_map(M, q, r) * I.basis[i]);
        for (const auto& f : F) W = span_intersect(W, preimage(f.comp[i], pushed));
      } else {
        // the transition leaves the box, so its image is zero and the
        // constraint is f_p(x) = 0
        for (const auto& f : F) W = span_intersect(W, nullspace(f.comp[i]));
      }
      next.basis[i] = std::move(W);
    }
    next = canonicalized(next);
    if (total(next) == total(I)) break;
    I = std::move(next);
    ++steps_I;
  }

  // K: smallest submodule of I with: x in I at p lands in K whenever the
  // diagonal transition of x is hit by some f applied to K.  Start from 0 and
  // saturate; close under the edges of M after each pointwise update.
  Submodule K = zero_submodule(Mp);
  for (long long i = 0; i < P; ++i) K.basis[i] = Matrix(M.dim[i], 0, M.p);
  int steps_K = 0;
  while (true) {
    Submodule next{Mp, std::vector<Matrix>(P)};
    for (long long i = 0; i < P; ++i) {
      Point q = g.point(i);
      Point r = shifted(q, 2 * eps);
      Matrix W = K.basis[i];
      if (g.inside(r)) {
        Matrix path = path_map(M, q, r);
        // pull back the joint image of K under the whole family in one step;
        // per-morphism preimages would undershoot the fixpoint
        Matrix S(path.rows, 0, M.p);
        for (const auto& f : F) S = span_sum(S, colspan(f.comp[i] * K.basis[i]));
        W = span_sum(W, span_intersect(I.basis[i], preimage(path, S)));
      } else {
        // the diagonal transition leaves the box, so it is the zero map and
        // its preimage of f(K) is all of I at this point
        W = I.basis[i];
      }
      next.basis[i] = std::move(W);
    }
    // close under edges (processing in index order reaches all successors)
    for (long long i = 0; i < P; ++i) {
      Point q = g.point(i);
      for (int ax = 0; ax < g.d(); ++ax) {
        Point t = q;
        t[ax] += 1;
        if (!g.inside(t)) continue;
        long long j = g.index(t);
        next.basis[j] = span_sum(next.basis[j], M.edge[ax][i] * next.basis[i]);
      }
    }
    next = canonicalized(next);
    if (total(next) == total(K)) break;
    K = std::move(next);
    ++steps_K;
  }

  // guard: K must sit inside I (it does by construction of the updates)
  for (long long i = 0; i < P; ++i) K.basis[i] = span_intersect(K.basis[i], I.basis[i]);
  K = canonicalized(K);

  return PruningPair{Mp, std::move(I), std::move(K), eps, steps_I, steps_K};
}

Pruning pruning(const Module& M, int eps) {
  PruningPair pr = pruning_pair(M, eps);
  Subquotient pres = subquotient(pr.I, pr.K);
  ModPtr shifted_q = shift_module(*pres.quotient, -eps);
  return Pruning{shifted_q, std::move(pr), std::move(pres)};
}

}  // namespace pmod
