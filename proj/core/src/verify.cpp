#include "pmod/verify.hpp"

#include <sstream>

#include "pmod/ci.hpp"
#include "pmod/decomp.hpp"
#include "pmod/distances.hpp"
#include "pmod/erode.hpp"
#include "pmod/fixtures.hpp"
#include "pmod/prune.hpp"
#include "pmod/rng.hpp"

namespace pmod {

namespace {

using Check = CriterionResult (*)();

CriterionResult pass(const std::string& name, const std::string& detail) {
  return CriterionResult{name, true, detail};
}
CriterionResult fail(const std::string& name, const std::string& detail) {
  return CriterionResult{name, false, detail};
}

// 1. eroding a one-parameter interval [a,b) by eps gives [a+eps, b-eps)
CriterionResult interval_erosion_formula() {
  const std::string name = "interval-erosion-formula";
  Grid g(std::vector<int>{30});
  Rng rng(101);
  for (int t = 0; t < 200; ++t) {
    int a = (int)rng.below(29);
    int b = a + 1 + (int)rng.below((u64)(30 - a));
    int eps = (int)rng.below(6);
    ModPtr bar = bar_module(g, kDefaultP, a, b);
    ModPtr er = erosion(*bar, eps).module;
    std::ostringstream id;
    id << "trial " << t << ": [" << a << "," << b << ") eps=" << eps;
    if (a + eps >= b - eps) {
      if (!er->is_zero()) return fail(name, id.str() + ": expected zero erosion");
    } else {
      ModPtr expect = bar_module(g, kDefaultP, a + eps, b - eps);
      if (are_isomorphic(*er, *expect).verdict != Tri::Yes)
        return fail(name, id.str() + ": erosion not isomorphic to the shrunk interval");
    }
  }
  return pass(name, "200 random intervals eroded to the exact shrunk interval");
}

// 2. erosion composes (Er_e Er_d = Er_{e+d}) and distributes over direct sums
CriterionResult erosion_functoriality() {
  const std::string name = "erosion-functoriality";
  Grid g = Grid::square(2, 5);
  for (int t = 0; t < 100; ++t) {
    ModPtr M = random_module(g, kDefaultP, 1000 + t);
    ModPtr N = random_module(g, kDefaultP, 2000 + t, 2);
    int e = 1 + t % 2, d = 1 + (t / 2) % 2;
    std::ostringstream id;
    id << "trial " << t << " (eps=" << e << ", delta=" << d << ")";
    ModPtr twice = erosion(*erosion(*M, d).module, e).module;
    ModPtr once = erosion(*M, e + d).module;
    if (are_isomorphic(*twice, *once).verdict != Tri::Yes)
      return fail(name, id.str() + ": Er_e(Er_d(M)) != Er_{e+d}(M)");
    ModPtr sum = direct_sum({M, N}, g, kDefaultP).mod;
    ModPtr lhs = erosion(*sum, e).module;
    ModPtr rhs = direct_sum({erosion(*M, e).module, erosion(*N, e).module}, g, kDefaultP).mod;
    if (are_isomorphic(*lhs, *rhs).verdict != Tri::Yes)
      return fail(name, id.str() + ": erosion does not distribute over the direct sum");
  }
  return pass(name, "composition and direct-sum laws verified on 100 random modules");
}

// 3. the square-with-legs module prunes to two copies of the notched square
CriterionResult pruning_square_with_legs() {
  const std::string name = "pruning-square-with-legs";
  for (int eps = 1; eps <= 4; ++eps) {
    ModPtr M = square_with_legs(eps);
    Pruning pr = pruning(*M, eps);
    ModPtr L = indicator_module(M->grid, M->p, square_with_legs_L(eps));
    Barcode bc = barcode(*pr.module);
    std::ostringstream id;
    id << "eps=" << eps;
    if (bc.reps.size() != 1 || bc.multiplicities[0] != 2)
      return fail(name, id.str() + ": pruning barcode is not one class with multiplicity 2");
    if (are_isomorphic(*bc.reps[0], *L).verdict != Tri::Yes)
      return fail(name, id.str() + ": pruning summand is not the notched square");
  }
  return pass(name, "pruning is L + L with the exact notched-square support for eps=1..4");
}

// 4. strip-core pair: interleaving witness, indecomposable deep erosion,
//    two-summand pruning that 3-refines both modules
CriterionResult strip_core_suite() {
  const std::string name = "strip-core-suite";
  InterleavedPair sc = strip_core_pair();
  if (!verify_interleaving(*sc.M, *sc.N, sc.phi, sc.psi, sc.eps))
    return fail(name, "supplied witness is not a 1-interleaving");
  Decomposition d5 = decompose(*erosion(*sc.N, 5).module);
  if (d5.parts.size() != 1 || !d5.certified[0])
    return fail(name, "Er_5(N) is not certified indecomposable");
  Pruning pr = pruning(*sc.M, 1);
  Decomposition dpr = decompose(*pr.module);
  if (dpr.parts.size() != 2)
    return fail(name, "Pr_1(M) does not have exactly 2 summands");
  if (is_refinement(*pr.module, *sc.M, 3) != Tri::Yes)
    return fail(name, "Pr_1(M) not verified as a 3-refinement of M");
  // explicit neighborhood witness on N: everything on [9,30]^2 over everything
  // on the max-coordinate-30 bands
  const Grid& g = sc.N->grid;
  const long long P = g.npoints();
  Submodule N1{sc.N, std::vector<Matrix>(P)}, N2{sc.N, std::vector<Matrix>(P)};
  for (long long i = 0; i < P; ++i) {
    Point q = g.point(i);
    int dim = sc.N->dim[i];
    bool inSq = q[0] >= 9 && q[0] <= 30 && q[1] >= 9 && q[1] <= 30;
    bool onBand = inSq && (q[0] == 30 || q[1] == 30);
    N1.basis[i] = inSq ? Matrix::identity(dim, sc.N->p) : Matrix(dim, 0, sc.N->p);
    N2.basis[i] = onBand ? Matrix::identity(dim, sc.N->p) : Matrix(dim, 0, sc.N->p);
  }
  ENCheck ec = check_en_witness(ENWitness{sc.N, N1, N2, 3});
  if (!ec.ok) return fail(name, "witness for the 3-neighborhood of N rejected: " + ec.violation);
  if (are_isomorphic(*ec.member, *pr.module).verdict != Tri::Yes)
    return fail(name, "3-neighborhood member of N is not isomorphic to Pr_1(M)");
  return pass(name, "interleaving, indecomposability and both 3-refinements verified");
}

// 5. the common-member construction from the canonical interleaving between a
//    module and its erosion yields valid witnesses with isomorphic members
CriterionResult interleaving_common_subquotient() {
  const std::string name = "interleaving-common-subquotient";
  Grid g = Grid::square(2, 5);
  for (int t = 0; t < 100; ++t) {
    ModPtr M = random_module(g, kDefaultP, 5000 + t);
    if (M->is_zero()) continue;
    int eps = 1 + t % 2;
    Erosion er = erosion(*M, eps);
    ENWitness w{er.pres.ambient, er.pres.M1, er.pres.M2, eps};
    ENInterleaving itl = en_interleaving(w, er.pres);
    CommonEN common =
        common_en_from_interleaving(*er.pres.ambient, *er.module, itl.phi, itl.psi, eps, 5000 + t);
    std::ostringstream id;
    id << "trial " << t << " (eps=" << eps << ")";
    if (!check_en_witness(common.on_M).ok)
      return fail(name, id.str() + ": witness on the first module rejected");
    if (!check_en_witness(common.on_N).ok)
      return fail(name, id.str() + ": witness on the second module rejected");
    if (common.members_isomorphic != Tri::Yes)
      return fail(name, id.str() + ": common members not verified isomorphic");
  }
  return pass(name, "valid witnesses with isomorphic members on 100 interleaved pairs");
}

// 6. structural properties of the pruning pair (I, K)
CriterionResult pruning_pair_properties() {
  const std::string name = "pruning-pair-properties";
  Grid g = Grid::square(2, 4);
  for (int t = 0; t < 100; ++t) {
    ModPtr M = random_module(g, kDefaultP, 6000 + t);
    if (M->is_zero()) continue;
    int r = M->supdim();
    for (int eps = 1; eps <= 2; ++eps) {
      PruningPair pp = pruning_pair(*M, eps);
      std::ostringstream id;
      id << "trial " << t << " (eps=" << eps << ", supdim=" << r << ")";
      if (pp.steps_I > r || pp.steps_K > r)
        return fail(name, id.str() + ": iteration count exceeded the pointwise dimension bound");
      if (!sub_contains(pp.I, pp.K)) return fail(name, id.str() + ": K not contained in I");
      ModPtr M2e = shift_module(*M, 2 * eps);
      std::vector<Morphism> F = hom_basis(*M, *M2e);
      for (long long i = 0; i < g.npoints(); ++i) {
        Point q = g.point(i);
        Point b = shifted(q, 2 * eps);
        Matrix path = path_map(*M, q, b);
        // (i): the deep image of the shifted module factors through I
        Matrix deep = colspan(path_map(*M, shifted(q, 2 * eps - 2 * r * eps), b));
        Matrix through_I = colspan(path * pp.I.basis[i]);
        if (!span_contains(through_I, deep))
          return fail(name, id.str() + ": deep image not inside the pushforward of I");
        // (ii): K dies after 2*r*eps diagonal steps
        if (!(path_map(*M, q, shifted(q, 2 * r * eps)) * pp.K.basis[i]).is_zero())
          return fail(name, id.str() + ": K survives the 2*r*eps transition");
        // (iii): K is the full preimage of its own pushforward inside I
        Matrix back = span_intersect(pp.I.basis[i], preimage(path, colspan(path * pp.K.basis[i])));
        if (!span_contains(back, pp.K.basis[i]) || !span_contains(pp.K.basis[i], back))
          return fail(name, id.str() + ": K is not the preimage of its pushforward");
        // (iv): every morphism to the shifted module maps K into the
        // pushforward of K
        for (const auto& f : F)
          if (!span_contains(colspan(path * pp.K.basis[i]), f.comp[i] * pp.K.basis[i]))
            return fail(name, id.str() + ": some morphism carries K outside its pushforward");
      }
    }
  }
  return pass(name, "pair properties and iteration bounds verified on 100 random modules");
}

// 7. the pruning of an interleaved module refines the other side
CriterionResult pruning_refinement_check() {
  const std::string name = "pruning-refinement-check";
  // interval-decomposable pairs: a rectangle sum and its erosion, interleaved
  // by the canonical morphisms
  Grid g = Grid::square(2, 6);
  for (int t = 0; t < 10; ++t) {
    ModPtr M = random_rect_sum(g, kDefaultP, 700 + t, 2);
    int eps = 1;
    Erosion er = erosion(*M, eps);
    ENWitness w{er.pres.ambient, er.pres.M1, er.pres.M2, eps};
    ENInterleaving itl = en_interleaving(w, er.pres);
    std::ostringstream id;
    id << "interval pair " << t;
    if (!verify_interleaving(*M, *er.module, itl.phi, itl.psi, eps))
      return fail(name, id.str() + ": canonical interleaving failed verification");
    int r = M->supdim();
    Pruning pr = pruning(*M, eps);
    if (is_refinement(*pr.module, *er.module, 2 * r * eps) != Tri::Yes)
      return fail(name, id.str() + ": pruning not verified as a refinement");
  }
  // tiny GF(2) pairs checked through the exhaustive neighborhood oracle
  Grid g2 = Grid::square(2, 3);
  int done = 0;
  for (u64 seed = 1; done < 20; ++seed) {
    ModPtr M = random_module(g2, 2, 7000 + seed, 2);
    if (M->is_zero() || M->total_dim() > 6) continue;
    int eps = 1;
    Erosion er = erosion(*M, eps);
    if (er.module->total_dim() > 6) continue;
    int r = M->supdim();
    Pruning pr = pruning(*M, eps);
    RefinementOptions opt;
    opt.seed = seed;
    Tri v = is_refinement(*pr.module, *er.module, 2 * r * eps, opt);
    if (v != Tri::Yes) {
      std::ostringstream id;
      id << "GF(2) pair with seed " << (7000 + seed) << ": verdict "
         << (v == Tri::No ? "no" : "unknown");
      return fail(name, id.str());
    }
    ++done;
  }
  return pass(name, "10 interval pairs exactly and 20 tiny GF(2) pairs via the oracle");
}

// 8. the 3x3 pattern pair solvable over every field but with no simple solution
CriterionResult ci_3x3_no_simple_solution() {
  const std::string name = "ci-3x3-no-simple-solution";
  CIProblem prob = pattern_no_simple();
  for (u32 p : {2u, 5u, 32003u}) {
    CIVerify v = verify_ci_solution(prob, pattern_no_simple_solution(p));
    std::ostringstream id;
    id << "field GF(" << p << ")";
    if (!v.valid) return fail(name, id.str() + ": supplied solution rejected: " + v.reason);
    if (v.simple) return fail(name, id.str() + ": supplied solution unexpectedly a permutation");
  }
  if (simple_solution(prob)) return fail(name, "a simple solution exists but should not");
  CIProblem weak = weaken(prob, 3);
  auto s = simple_solution(weak);
  if (!s) return fail(name, "the 3-weakening admits no simple solution");
  CIVerify v = verify_ci_solution(weak, *s);
  if (!v.valid || !v.simple)
    return fail(name, "simple solution of the 3-weakening failed verification");
  return pass(name, "solvable over GF(2)/GF(5)/GF(32003), no permutation until 3-weakening");
}

// 9. pattern -> staircase family -> pattern round trip equals weakening
CriterionResult ci_upset_round_trip() {
  const std::string name = "ci-upset-round-trip";
  Rng rng(909);
  for (int t = 0; t < 50; ++t) {
    CIProblem prob;
    prob.n = 1 + (int)rng.below(4);
    prob.P.assign(prob.n, std::vector<bool>(prob.n));
    prob.Q.assign(prob.n, std::vector<bool>(prob.n));
    for (int i = 0; i < prob.n; ++i)
      for (int j = 0; j < prob.n; ++j) {
        prob.P[i][j] = rng.below(2) != 0;
        prob.Q[i][j] = rng.below(2) != 0;
      }
    UpsetsFromCI ups = upsets_from_ci(prob, 9);
    for (int c : {1, 3, 5}) {
      CIProblem got = ci_from_upsets(ups.U, ups.V, c);
      CIProblem want = weaken(prob, c);
      std::ostringstream id;
      id << "trial " << t << " (n=" << prob.n << ", c=" << c << ")";
      if (got.n != want.n || got.P != want.P || got.Q != want.Q)
        return fail(name, id.str() + ": round trip disagrees with the weakening");
    }
  }
  // pinned offset vectors for the 2x2 example pattern
  CIProblem src;
  src.n = 2;
  src.P = {{true, false}, {true, true}};
  src.Q = {{true, false}, {false, true}};
  UpsetsFromCI ups = upsets_from_ci(src, 4);
  std::vector<std::vector<int>> w{{0, 8, 1, 8}, {2, 0, 3, 1}};
  std::vector<std::vector<int>> z{{1, 8, 0, 8}, {1, 1, 2, 0}};
  if (ups.w != w || ups.z != z)
    return fail(name, "offset vectors of the 2x2 example do not match the pinned values");
  return pass(name, "50 random round trips edge-for-edge plus pinned example offsets");
}

// 10. the interleaving built from a diagonal endomorphism verifies, and the
//     staircase family has the expected one-step morphism pattern
CriterionResult shift_endomorphism_interleaving() {
  const std::string name = "shift-endomorphism-interleaving";
  Grid g = Grid::square(2, 5);
  for (int t = 0; t < 50; ++t) {
    ModPtr M = random_module(g, kDefaultP, 8000 + t);
    if (M->is_zero()) continue;
    int eps = 1 + t % 2;
    Morphism f = random_morphism(M, shift_module(*M, eps), 8100 + t);
    ShiftInterleavingPair pair = interleaving_from_endomorphism(*M, f, eps);
    std::ostringstream id;
    id << "trial " << t << " (eps=" << eps << ")";
    if (!verify_interleaving(*pair.A, *pair.B, pair.phi, pair.psi, eps))
      return fail(name, id.str() + ": constructed pair fails the interleaving identities");
  }
  CounterexampleFamily cf = counterexample_family(2);
  if (cf.M->supdim() != 4)
    return fail(name, "family member does not have maximal pointwise dimension 4");
  if (!verify_interleaving(*cf.pair.A, *cf.pair.B, cf.pair.phi, cf.pair.psi, 1))
    return fail(name, "family interleaving fails verification");
  const int m = (int)cf.intervals.size();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool nonzero = !hom_basis(*cf.intervals[i], *shift_module(*cf.intervals[j], 1)).empty();
      // the intervals are nested with shared generators, so one-step
      // morphisms exist exactly up to one index above the source
      bool expect = (j <= i + 1);
      if (nonzero != expect) {
        std::ostringstream id;
        id << "Hom(I_" << (i + 1) << ", I_" << (j + 1) << "(1)) "
           << (nonzero ? "nonzero" : "zero") << " but expected the opposite";
        return fail(name, id.str());
      }
    }
  return pass(name,
              "50 constructed interleavings verified; family one-step morphism pattern exact "
              "(nonzero iff target index <= source index + 1)");
}

// 11. a bar family where the erosion distance stays at 1 while the bottleneck
//     distance grows linearly
CriterionResult erosion_vs_bottleneck_family_check() {
  const std::string name = "erosion-vs-bottleneck-family";
  for (int c = 2; c <= 5; ++c) {
    BarsFamily bf = erosion_vs_bottleneck_family(c);
    std::ostringstream id;
    id << "c=" << c;
    int de = d_E(*bf.M, *bf.N);
    if (de > 1) return fail(name, id.str() + ": erosion distance exceeds 1");
    BottleneckResult br = bottleneck_bars(bf.A, bf.B);
    if (br.value != c) {
      std::ostringstream why;
      why << id.str() << ": bottleneck " << br.value << " != " << c;
      return fail(name, why.str());
    }
  }
  return pass(name, "erosion distance <= 1 and bottleneck exactly c for c = 2..5");
}

// 12. decomposition is seed-independent and reassembles the module
CriterionResult decomposition_determinism() {
  const std::string name = "decomposition-determinism";
  for (const auto& [label, M] : fixture_corpus()) {
    Barcode b1 = barcode(*M, 1);
    Barcode b2 = barcode(*M, 2);
    if (barcodes_equal(b1, b2) != Tri::Yes)
      return fail(name, label + ": barcodes from two seeds not verified equal");
    Decomposition dec = decompose(*M, 1);
    ModPtr sum = direct_sum(dec.parts, M->grid, M->p).mod;
    if (are_isomorphic(*sum, *M).verdict != Tri::Yes)
      return fail(name, label + ": direct sum of the summands not isomorphic to the module");
  }
  return pass(name, "equal barcodes across seeds and exact reassembly on the whole corpus");
}

}  // namespace

std::vector<CriterionResult> run_verification() {
  std::vector<CriterionResult> out;
  const std::pair<const char*, Check> checks[] = {
      {"interval-erosion-formula", interval_erosion_formula},
      {"erosion-functoriality", erosion_functoriality},
      {"pruning-square-with-legs", pruning_square_with_legs},
      {"strip-core-suite", strip_core_suite},
      {"interleaving-common-subquotient", interleaving_common_subquotient},
      {"pruning-pair-properties", pruning_pair_properties},
      {"pruning-refinement-check", pruning_refinement_check},
      {"ci-3x3-no-simple-solution", ci_3x3_no_simple_solution},
      {"ci-upset-round-trip", ci_upset_round_trip},
      {"shift-endomorphism-interleaving", shift_endomorphism_interleaving},
      {"erosion-vs-bottleneck-family", erosion_vs_bottleneck_family_check},
      {"decomposition-determinism", decomposition_determinism},
  };
  for (const auto& [name, c] : checks) {
    try {
      out.push_back(c());
    } catch (const std::exception& e) {
      out.push_back(CriterionResult{name, false, std::string("exception: ") + e.what()});
    }
  }
  return out;
}

}  // namespace pmod
