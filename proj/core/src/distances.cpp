#include "pmod/distances.hpp"

#include <algorithm>
#include <functional>

#include "pmod/erode.hpp"

namespace pmod {

bool verify_interleaving(const Module& M, const Module& N, const Morphism& phi,
                         const Morphism& psi, int eps) {
  if (!(M.grid == N.grid) || M.p != N.p || eps < 0) return false;
  ModPtr Neps = shift_module(N, eps);
  ModPtr Meps = shift_module(M, eps);
  // shapes
  if (phi.src->dim != M.dim || phi.dst->dim != Neps->dim) return false;
  if (psi.src->dim != N.dim || psi.dst->dim != Meps->dim) return false;
  if (!phi.is_natural() || !psi.is_natural()) return false;
  const Grid& g = M.grid;
  for (long long i = 0; i < g.npoints(); ++i) {
    Point q = g.point(i);
    Point r = shifted(q, eps);
    Point r2 = shifted(q, 2 * eps);
    // psi(eps) ∘ phi = M_{q -> q+2eps}
    Matrix lhsM = g.inside(r) ? psi.comp[g.index(r)] * phi.comp[i]
                              : Matrix(0, M.dim[i], M.p);
    if (!(lhsM == path_map(M, q, r2))) return false;
    // phi(eps) ∘ psi = N_{q -> q+2eps}
    Matrix lhsN = g.inside(r) ? phi.comp[g.index(r)] * psi.comp[i]
                              : Matrix(0, N.dim[i], N.p);
    if (!(lhsN == path_map(N, q, r2))) return false;
  }
  return true;
}

int d_E(const Module& M, const Module& N) {
  if (!(M.grid == N.grid)) throw std::invalid_argument("d_E: grids differ");
  int maxeps = 0;
  for (int s : M.grid.sz) maxeps = std::max(maxeps, s);
  for (int eps = 0; eps <= maxeps; ++eps) {
    std::vector<int> em = erosion_dims(M, eps), en = erosion_dims(N, eps);
    bool ok = true;
    for (long long i = 0; i < M.npoints() && ok; ++i)
      if (em[i] > N.dim[i] || en[i] > M.dim[i]) ok = false;
    if (ok) return eps;
  }
  return maxeps;  // unreachable: everything is eroded away at the diameter
}

namespace {

Morphism combo(const std::vector<Morphism>& basis, const std::vector<u32>& coef) {
  Morphism f(basis[0].src, basis[0].dst);
  for (size_t i = 0; i < basis.size(); ++i)
    if (coef[i]) f = madd(f, mscale(basis[i], coef[i]));
  return f;
}

}  // namespace

std::optional<InterleavingWitness> search_interleaving(const Module& M, const Module& N, int eps,
                                                       InterleavingSearchCaps caps) {
  if (M.p != caps.field || N.p != caps.field || (caps.field != 2 && caps.field != 3))
    throw CapExceeded("search_interleaving: field outside caps");
  const u32 p = M.p;
  ModPtr Neps = shift_module(N, eps);
  ModPtr Meps = shift_module(M, eps);
  std::vector<Morphism> H = hom_basis(M, *Neps);
  std::vector<Morphism> H2 = hom_basis(N, *Meps);
  const Grid& g = M.grid;

  auto flatten_pair = [&](const Morphism& a, const Morphism& b) {
    // stack both composition defects into one long vector
    long long D = 0;
    for (const auto& c : a.comp) D += (long long)c.rows * c.cols;
    for (const auto& c : b.comp) D += (long long)c.rows * c.cols;
    Matrix v((int)D, 1, p);
    long long off = 0;
    for (const Morphism* f : {&a, &b})
      for (const auto& c : f->comp) {
        for (int r = 0; r < c.rows; ++r)
          for (int cc = 0; cc < c.cols; ++cc) v.at((int)(off + (long long)r * c.cols + cc), 0) = c.at(r, cc);
        off += (long long)c.rows * c.cols;
      }
    return v;
  };

  // the transition targets
  Morphism tM = transition(M, 0, 2 * eps);
  Morphism tN = transition(N, 0, 2 * eps);

  if (H.empty()) {
    // phi must be zero; interleaving exists iff both 2eps transitions vanish
    bool zero_ok = true;
    for (const auto& c : tM.comp)
      if (!c.is_zero()) zero_ok = false;
    for (const auto& c : tN.comp)
      if (!c.is_zero()) zero_ok = false;
    if (!zero_ok) return std::nullopt;
    Morphism phi(std::make_shared<Module>(M), Neps);
    Morphism psi(std::make_shared<Module>(N), Meps);
    return InterleavingWitness{std::move(phi), std::move(psi)};
  }
  if ((int)H.size() > caps.max_coeffs) throw CapExceeded("search_interleaving: hom dim cap");
  long long combos = 1;
  for (size_t i = 0; i < H.size(); ++i) {
    combos *= p;
    if (combos > caps.max_combos) throw CapExceeded("search_interleaving: combination cap");
  }

  // precompute the linear action of psi-coefficients for a fixed phi:
  //   psi(eps) ∘ phi  must equal tM, and phi(eps) ∘ psi must equal tN.
  // The second condition is independent of phi only through composition, so
  // both are rebuilt per phi (instances are tiny).
  std::vector<u32> coef(H.size(), 0);
  for (long long t = 0; t < combos; ++t) {
    if (t > 0) {
      size_t i = 0;
      while (true) {
        coef[i] = (coef[i] + 1) % p;
        if (coef[i] != 0) break;
        ++i;
      }
    }
    Morphism phi = combo(H, coef);
    Morphism phie = shift_morphism(phi, eps);
    // unknowns: psi = sum d_j H2[j]
    Matrix target = flatten_pair(tM, tN);
    Matrix sys(target.rows, (int)H2.size(), p);
    bool feasible = true;
    for (size_t j = 0; j < H2.size(); ++j) {
      Morphism a = compose(shift_morphism(H2[j], eps), phi);  // -> tM slot
      Morphism b = compose(phie, H2[j]);                      // -> tN slot
      Matrix col = flatten_pair(a, b);
      for (int r = 0; r < col.rows; ++r) sys.at(r, (int)j) = col.at(r, 0);
    }
    auto sol = solve(sys, target);
    if (!sol) feasible = false;
    if (feasible) {
      std::vector<u32> d((size_t)H2.size());
      for (size_t j = 0; j < H2.size(); ++j) d[j] = sol->at((int)j, 0);
      Morphism psi = H2.empty() ? Morphism(std::make_shared<Module>(N), Meps) : combo(H2, d);
      if (verify_interleaving(M, N, phi, psi, eps))
        return InterleavingWitness{std::move(phi), std::move(psi)};
    }
  }
  return std::nullopt;
}

// ---- bottleneck matchings ------------------------------------------------------

namespace {

// feasibility of a threshold for a cost structure with deletions, via perfect
// matching on the doubled bipartite graph
struct CostStructure {
  std::vector<std::vector<long long>> cost;  // |A| x |B|
  std::vector<long long> delA, delB;
};

bool feasible(const CostStructure& cs, long long t, std::vector<std::pair<int, int>>* matching) {
  const int na = (int)cs.delA.size(), nb = (int)cs.delB.size();
  const int L = na + nb, R = nb + na;  // A + dummies(B)  vs  B + dummies(A)
  std::vector<std::vector<int>> adj(L);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j)
      if (cs.cost[i][j] <= t) adj[i].push_back(j);
    if (cs.delA[i] <= t) adj[i].push_back(nb + i);  // delete a_i
  }
  for (int j = 0; j < nb; ++j) {
    int dj = na + j;  // dummy for b_j on the left
    if (cs.delB[j] <= t) adj[dj].push_back(j);
    for (int i = 0; i < na; ++i) adj[dj].push_back(nb + i);  // dummy-dummy, free
  }
  std::vector<int> mL(L, -1), mR(R, -1);
  std::function<bool(int, std::vector<bool>&)> aug = [&](int x, std::vector<bool>& seen) {
    for (int y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      if (mR[y] == -1 || aug(mR[y], seen)) {
        mL[x] = y;
        mR[y] = x;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int x = 0; x < L; ++x) {
    std::vector<bool> seen(R, false);
    if (aug(x, seen)) ++matched;
  }
  if (matched != L) return false;
  if (matching) {
    matching->clear();
    for (int i = 0; i < na; ++i)
      if (mL[i] < nb) matching->emplace_back(i, mL[i]);
  }
  return true;
}

BottleneckResult bottleneck_from_costs(const CostStructure& cs) {
  std::vector<long long> cands;
  for (const auto& row : cs.cost)
    for (long long c : row) cands.push_back(c);
  for (long long c : cs.delA) cands.push_back(c);
  for (long long c : cs.delB) cands.push_back(c);
  cands.push_back(0);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  int lo = 0, hi = (int)cands.size() - 1, best = -1;
  std::vector<std::pair<int, int>> bestmatch;
  while (lo <= hi) {
    int mid = (lo + hi) / 2;
    std::vector<std::pair<int, int>> m;
    if (feasible(cs, cands[mid], &m)) {
      best = mid;
      bestmatch = std::move(m);
      hi = mid - 1;
    } else {
      lo = mid + 1;
    }
  }
  if (best == -1) throw NoFiniteMatching("no threshold admits a complete matching");
  return BottleneckResult{(int)cands[best], std::move(bestmatch)};
}

constexpr long long kInf = (1ll << 60);

}  // namespace

BottleneckResult bottleneck_bars(const std::vector<Bar>& A, const std::vector<Bar>& B) {
  CostStructure cs;
  cs.cost.assign(A.size(), std::vector<long long>(B.size(), 0));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < B.size(); ++j)
      cs.cost[i][j] = std::max(std::llabs((long long)A[i].a - B[j].a),
                               std::llabs((long long)A[i].b - B[j].b));
  cs.delA.resize(A.size());
  cs.delB.resize(B.size());
  for (size_t i = 0; i < A.size(); ++i) cs.delA[i] = ((long long)A[i].b - A[i].a + 1) / 2;
  for (size_t j = 0; j < B.size(); ++j) cs.delB[j] = ((long long)B[j].b - B[j].a + 1) / 2;
  return bottleneck_from_costs(cs);
}

namespace {

// least eps >= 0 with V ⊆ U(eps); kInf when V has generators but U is empty
long long directed_upset_eps(const UpsetShape& U, const UpsetShape& V) {
  if (V.empty()) return 0;
  if (U.empty()) return kInf;
  long long worst = 0;
  for (const Point& gv : V.gens) {
    long long best = kInf;
    for (const Point& gu : U.gens) {
      long long need = 0;
      for (size_t t = 0; t < gv.size(); ++t)
        need = std::max(need, (long long)gu[t] - gv[t]);
      best = std::min(best, std::max(0ll, need));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

// least eps with the indicator module of U on the box killed by the 2eps
// diagonal transition
long long upset_deletion_eps(const UpsetShape& U, const Grid& box) {
  long long worst = 0;
  bool any = false;
  for (const Point& gp : U.gens) {
    Point c = gp;
    for (size_t t = 0; t < c.size(); ++t) c[t] = std::max(c[t], 0);
    if (!box.inside(c)) continue;
    any = true;
    long long slack = kInf;
    for (size_t t = 0; t < c.size(); ++t) slack = std::min(slack, (long long)box.sz[t] - c[t]);
    worst = std::max(worst, (slack + 1) / 2);
  }
  if (!any) return 0;  // no support inside the box
  return worst;
}

}  // namespace

BottleneckResult bottleneck_upsets(const std::vector<UpsetShape>& U, const std::vector<UpsetShape>& V,
                                   const Grid& box) {
  CostStructure cs;
  cs.cost.assign(U.size(), std::vector<long long>(V.size(), 0));
  for (size_t i = 0; i < U.size(); ++i)
    for (size_t j = 0; j < V.size(); ++j)
      cs.cost[i][j] = std::max(directed_upset_eps(U[i], V[j]), directed_upset_eps(V[j], U[i]));
  cs.delA.resize(U.size());
  cs.delB.resize(V.size());
  for (size_t i = 0; i < U.size(); ++i) cs.delA[i] = upset_deletion_eps(U[i], box);
  for (size_t j = 0; j < V.size(); ++j) cs.delB[j] = upset_deletion_eps(V[j], box);
  return bottleneck_from_costs(cs);
}

DistanceBracket d_EN_bracket(const Module& M, const Module& N,
                             const std::optional<InterleavingWitness>& itl, int itl_eps,
                             int d_I_lower) {
  DistanceBracket out;
  out.lower = std::max(d_E(M, N), (d_I_lower + 1) / 2);
  if (M == N) {
    out.lower = 0;
    out.upper = 0;
    out.note = "identical modules";
    return out;
  }
  if (itl && itl_eps >= 0) {
    CommonEN common =
        common_en_from_interleaving(M, N, itl->phi, itl->psi, itl_eps);  // throws if not verified
    out.upper = itl_eps;
    out.note = common.members_isomorphic == Tri::Yes
                   ? "interleaving witnessed; common neighborhood members isomorphic"
                   : "interleaving witnessed; common neighborhood members constructed";
  }
  return out;
}

}  // namespace pmod
