#pragma once
// Pattern-completion problems: square matrix pairs (A, B) over a field with
// AB = BA = I, where A and B are constrained to vanish outside given star
// patterns.  Includes the translation to/from families of upsets, weakening
// along the alternating bipartite digraph, the block construction that turns
// an interleaving of benign summand families into a solved problem, and the
// endomorphism-to-interleaving construction with its counterexample family.

#include <optional>

#include "pmod/module.hpp"

namespace pmod {

// Pattern pair on n+n vertices u_1..u_n, v_1..v_n.
//   P[i][j] = true  <=>  A[i][j] may be nonzero  <=>  edge u_j -> v_i
//   Q[i][j] = true  <=>  B[i][j] may be nonzero  <=>  edge v_j -> u_i
struct CIProblem {
  int n = 0;
  std::vector<std::vector<bool>> P, Q;
};

struct CISolution {
  Matrix A, B;
};

struct CIVerify {
  bool valid = false;
  bool simple = false;  // permutation solution
  std::string reason;
};
CIVerify verify_ci_solution(const CIProblem& prob, const CISolution& sol);

// permutation solution: sigma with edges u_i -> v_{sigma(i)} -> u_i, as a
// perfect matching on the bidirectional edges
std::optional<CISolution> simple_solution(const CIProblem& prob);

struct EvenC : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// c-weakening: stars wherever the alternating digraph has a path of length
// <= c (c odd)
CIProblem weaken(const CIProblem& prob, int c);

struct CISolveCaps {
  int max_n = 4;
  int max_stars = 14;
  long long max_combos = 4000000;
};
// exhaustive masked search over GF(p), p in {2,3}; nullopt = provably none
std::optional<CISolution> solve_ci(const CIProblem& prob, u32 p, CISolveCaps caps = {});

// P[i][j] = (U_j ⊆ V_i(eps)), Q[i][j] = (V_j ⊆ U_i(eps))
CIProblem ci_from_upsets(const std::vector<UpsetShape>& U, const std::vector<UpsetShape>& V,
                         int eps);

struct UpsetsFromCI {
  std::vector<UpsetShape> U, V;
  Grid box;                        // box large enough to separate all shapes
  std::vector<std::vector<int>> w, z;  // capped path distances used as offsets
};
// staircase families realizing the problem: U_i ⊆ V_j(c) iff a u_i -> v_j path
// of length <= c exists (c < C), and symmetrically
UpsetsFromCI upsets_from_ci(const CIProblem& prob, int C);

// ---- benign block construction ----------------------------------------------

struct NotBenign : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BenignBlockCI {
  CIProblem prob;
  CISolution sol;
};
// M = ⊕ parts with supports Msupp (each an interval), N likewise; phi/psi an
// eps-interleaving.  Components of an interleaving between benign families are
// scalars; the returned solved problem has the block shape
//   C = [[A, I],[I - BA, -B]],  D = [[B, I],[I - AB, -A]]
BenignBlockCI benign_block_ci(const Module& M, const std::vector<std::set<Point>>& Msupp,
                              const Module& N, const std::vector<std::set<Point>>& Nsupp,
                              const Morphism& phi, const Morphism& psi, int eps);

// ---- endomorphism-to-interleaving construction --------------------------------

struct ShiftInterleavingPair {
  ModPtr A, B;
  Morphism phi, psi;  // phi: A -> B(eps), psi: B -> A(eps)
  int eps = 0;
};
// from f: M -> M(eps), build modules A = M ⊕ img((t - f)(-eps) ∘ f(-2eps)) and
// B = img f(-eps) ⊕ img (t - f)(-eps) (t the diagonal transition) together
// with an eps-interleaving between them
ShiftInterleavingPair interleaving_from_endomorphism(const Module& M, const Morphism& f, int eps);

struct CounterexampleFamily {
  ShiftInterleavingPair pair;
  ModPtr M;                        // submodule of the interval direct sum
  std::vector<ModPtr> intervals;   // I_1 .. I_{2n}
  Morphism f;                      // M -> M(1)
  int n = 0;
  Grid grid;
};
// family witnessing that 1-interleaved modules need not share small erosion
// neighborhoods; n <= 3
CounterexampleFamily counterexample_family(int n);

}  // namespace pmod
