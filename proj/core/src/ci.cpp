#include "pmod/ci.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace pmod {

// ---- problems, solutions, weakenings -----------------------------------------

CIVerify verify_ci_solution(const CIProblem& prob, const CISolution& sol) {
  CIVerify out;
  const int n = prob.n;
  const Matrix &A = sol.A, &B = sol.B;
  if (A.rows != n || A.cols != n || B.rows != n || B.cols != n || A.p != B.p) {
    out.reason = "shape mismatch";
    return out;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (A.at(i, j) && !prob.P[i][j]) {
        out.reason = "A violates the pattern";
        return out;
      }
      if (B.at(i, j) && !prob.Q[i][j]) {
        out.reason = "B violates the pattern";
        return out;
      }
    }
  if (!(A * B).is_identity() || !(B * A).is_identity()) {
    out.reason = "A and B are not mutually inverse";
    return out;
  }
  out.valid = true;
  out.simple = true;
  for (int j = 0; j < n && out.simple; ++j) {
    int ones = 0;
    for (int i = 0; i < n; ++i) {
      if (A.at(i, j) == 1)
        ++ones;
      else if (A.at(i, j) != 0)
        out.simple = false;
    }
    if (ones != 1) out.simple = false;
  }
  return out;
}

std::optional<CISolution> simple_solution(const CIProblem& prob) {
  const int n = prob.n;
  // perfect matching j -> sigma(j) over bidirectional pairs
  std::vector<std::vector<int>> adj(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (prob.P[i][j] && prob.Q[j][i]) adj[j].push_back(i);
  std::vector<int> matchL(n, -1), matchR(n, -1);
  std::function<bool(int, std::vector<bool>&)> aug = [&](int j, std::vector<bool>& seen) {
    for (int i : adj[j]) {
      if (seen[i]) continue;
      seen[i] = true;
      if (matchR[i] == -1 || aug(matchR[i], seen)) {
        matchL[j] = i;
        matchR[i] = j;
        return true;
      }
    }
    return false;
  };
  for (int j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    if (!aug(j, seen)) return std::nullopt;
  }
  Matrix A(n, n, 2), B(n, n, 2);
  for (int j = 0; j < n; ++j) {
    A.at(matchL[j], j) = 1;
    B.at(j, matchL[j]) = 1;
  }
  return CISolution{A, B};
}

CIProblem weaken(const CIProblem& prob, int c) {
  if (c < 1 || c % 2 == 0) throw EvenC("weakening constant must be odd and positive");
  const int n = prob.n;
  const int V = 2 * n;  // u_0..u_{n-1}, then v_0..v_{n-1}
  std::vector<std::vector<int>> adj(V);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (prob.P[i][j]) adj[j].push_back(n + i);  // u_j -> v_i
      if (prob.Q[i][j]) adj[n + j].push_back(i);  // v_j -> u_i
    }
  auto bfs = [&](int src) {
    std::vector<int> dist(V, -1);
    std::deque<int> dq{src};
    dist[src] = 0;
    while (!dq.empty()) {
      int x = dq.front();
      dq.pop_front();
      for (int y : adj[x])
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          dq.push_back(y);
        }
    }
    return dist;
  };
  CIProblem out;
  out.n = n;
  out.P.assign(n, std::vector<bool>(n, false));
  out.Q.assign(n, std::vector<bool>(n, false));
  for (int j = 0; j < n; ++j) {
    auto du = bfs(j), dv = bfs(n + j);
    for (int i = 0; i < n; ++i) {
      if (du[n + i] != -1 && du[n + i] <= c) out.P[i][j] = true;
      if (dv[i] != -1 && dv[i] <= c) out.Q[i][j] = true;
    }
  }
  return out;
}

std::optional<CISolution> solve_ci(const CIProblem& prob, u32 p, CISolveCaps caps) {
  if (p != 2 && p != 3) throw CapExceeded("solve_ci supports GF(2)/GF(3) only");
  const int n = prob.n;
  if (n > caps.max_n) throw CapExceeded("solve_ci: n exceeds cap");
  int stars = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) stars += prob.P[i][j] ? 1 : 0;
  if (stars > caps.max_stars) throw CapExceeded("solve_ci: too many free entries");
  long long combos = 1;
  for (int s = 0; s < stars; ++s) {
    combos *= p;
    if (combos > caps.max_combos) throw CapExceeded("solve_ci: combination cap");
  }

  Matrix A(n, n, p);
  std::optional<CISolution> found;
  // fill row by row; prune when the top rows become dependent
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) {
      if (!invertible(A)) return false;
      Matrix B = inverse(A);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (B.at(r, c) && !prob.Q[r][c]) return false;
      found = CISolution{A, B};
      return true;
    }
    std::vector<int> free;
    for (int j = 0; j < n; ++j)
      if (prob.P[i][j]) free.push_back(j);
    std::vector<u32> val(free.size(), 0);
    while (true) {
      for (size_t t = 0; t < free.size(); ++t) A.at(i, free[t]) = val[t];
      if (rank(A.rows_slice(0, i + 1)) == i + 1 && rec(i + 1)) return true;
      size_t t = 0;
      while (t < val.size() && ++val[t] == p) val[t++] = 0;
      if (t == val.size()) break;
    }
    for (int j : free) A.at(i, j) = 0;
    return false;
  };
  rec(0);
  return found;
}

// ---- translation to and from upset families -----------------------------------

CIProblem ci_from_upsets(const std::vector<UpsetShape>& U, const std::vector<UpsetShape>& V,
                         int eps) {
  if (U.size() != V.size()) throw std::invalid_argument("ci_from_upsets: family sizes differ");
  const int n = (int)U.size();
  CIProblem out;
  out.n = n;
  out.P.assign(n, std::vector<bool>(n, false));
  out.Q.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out.P[i][j] = upset_contains_shifted(V[i], U[j], eps);  // U_j ⊆ V_i(eps)
      out.Q[i][j] = upset_contains_shifted(U[i], V[j], eps);  // V_j ⊆ U_i(eps)
    }
  return out;
}

UpsetsFromCI upsets_from_ci(const CIProblem& prob, int C) {
  const int n = prob.n;
  const int V = 2 * n;
  const int cap = C + V;  // larger than any usable path length
  std::vector<std::vector<int>> adj(V);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (prob.P[i][j]) adj[j].push_back(n + i);
      if (prob.Q[i][j]) adj[n + j].push_back(i);
    }
  // capped shortest path from every vertex
  std::vector<std::vector<int>> dist(V, std::vector<int>(V, cap));
  for (int s = 0; s < V; ++s) {
    std::deque<int> dq{s};
    std::vector<int> d(V, -1);
    d[s] = 0;
    while (!dq.empty()) {
      int x = dq.front();
      dq.pop_front();
      for (int y : adj[x])
        if (d[y] == -1) {
          d[y] = d[x] + 1;
          dq.push_back(y);
        }
    }
    for (int t = 0; t < V; ++t)
      if (d[t] != -1 && d[t] < cap) dist[s][t] = d[t];
  }

  UpsetsFromCI out;
  const int s = cap;  // anchor spacing
  std::vector<Point> anchors(V);
  for (int k = 0; k < V; ++k) anchors[k] = Point{k * s, (V - 1 - k) * s};
  out.w.assign(n, std::vector<int>(V));
  out.z.assign(n, std::vector<int>(V));
  for (int i = 0; i < n; ++i) {
    std::vector<Point> gensU(V), gensV(V);
    for (int m = 0; m < V; ++m) {
      out.w[i][m] = dist[m][i];
      out.z[i][m] = dist[m][n + i];
      gensU[m] = Point{anchors[m][0] + out.w[i][m], anchors[m][1] + out.w[i][m]};
      gensV[m] = Point{anchors[m][0] + out.z[i][m], anchors[m][1] + out.z[i][m]};
    }
    out.U.push_back(UpsetShape::from_points(2, gensU));
    out.V.push_back(UpsetShape::from_points(2, gensV));
  }
  out.box = Grid::square(2, V * s + 2);
  return out;
}

// ---- benign block construction -------------------------------------------------

namespace {

// scalar weight of the (dst part r <- src part c) component of an
// interleaving morphism between families of indicator summands
u32 component_weight(const Module& Msrc, const std::vector<std::set<Point>>& srcSupp,
                     const std::vector<std::set<Point>>& dstSupp, const Morphism& f, int eps,
                     size_t c, size_t r) {
  const Grid& g = Msrc.grid;
  auto offset = [&](const std::vector<std::set<Point>>& supp, size_t part, const Point& q) {
    int off = 0;
    for (size_t k = 0; k < part; ++k)
      if (supp[k].count(q)) ++off;
    return off;
  };
  for (const Point& p : srcSupp[c]) {
    Point q = shifted(p, eps);
    if (!g.inside(q) || !dstSupp[r].count(q)) continue;
    return f.comp[g.index(p)].at(offset(dstSupp, r, q), offset(srcSupp, c, p));
  }
  return 0;
}

}  // namespace

BenignBlockCI benign_block_ci(const Module& M, const std::vector<std::set<Point>>& Msupp,
                              const Module& N, const std::vector<std::set<Point>>& Nsupp,
                              const Morphism& phi, const Morphism& psi, int eps) {
  // benign families: every support is an interval whose up-closure is
  // principal (hook-like), or every support is the box part of an upset
  bool all_principal = true, all_upsets = true;
  auto classify = [&](const Grid& g, const std::set<Point>& supp) {
    IntervalShape I = validate_interval(g, supp);
    IntervalParts parts = interval_parts(I);
    if (parts.U.gens.size() != 1) all_principal = false;
    if (!parts.E_points.empty()) all_upsets = false;
  };
  for (const auto& s : Msupp) classify(M.grid, s);
  for (const auto& s : Nsupp) classify(N.grid, s);
  if (!all_principal && !all_upsets)
    throw NotBenign("summand families are neither principal hooks nor upsets");

  const int nm = (int)Msupp.size(), nn = (int)Nsupp.size();
  const u32 p = M.p;
  Matrix A(nn, nm, p), B(nm, nn, p);
  for (int r = 0; r < nn; ++r)
    for (int c = 0; c < nm; ++c) A.at(r, c) = component_weight(M, Msupp, Nsupp, phi, eps, c, r);
  for (int r = 0; r < nm; ++r)
    for (int c = 0; c < nn; ++c) B.at(r, c) = component_weight(N, Nsupp, Msupp, psi, eps, c, r);

  const int n = nm + nn;
  Matrix C(n, n, p), D(n, n, p);
  Matrix IBA = Matrix::identity(nm, p) - (B * A);
  Matrix IAB = Matrix::identity(nn, p) - (A * B);
  for (int i = 0; i < nn; ++i) {
    for (int j = 0; j < nm; ++j) C.at(i, j) = A.at(i, j);
    C.at(i, nm + i) = 1;
  }
  for (int i = 0; i < nm; ++i) {
    for (int j = 0; j < nm; ++j) C.at(nn + i, j) = IBA.at(i, j);
    for (int j = 0; j < nn; ++j) C.at(nn + i, nm + j) = fneg(B.at(i, j), p);
  }
  for (int i = 0; i < nm; ++i) {
    for (int j = 0; j < nn; ++j) D.at(i, j) = B.at(i, j);
    D.at(i, nn + i) = 1;
  }
  for (int i = 0; i < nn; ++i) {
    for (int j = 0; j < nn; ++j) D.at(nm + i, j) = IAB.at(i, j);
    for (int j = 0; j < nm; ++j) D.at(nm + i, nn + j) = fneg(A.at(i, j), p);
  }

  BenignBlockCI out;
  out.prob.n = n;
  out.prob.P.assign(n, std::vector<bool>(n, false));
  out.prob.Q.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out.prob.P[i][j] = C.at(i, j) != 0;
      out.prob.Q[i][j] = D.at(i, j) != 0;
    }
  out.sol = CISolution{C, D};
  return out;
}

// ---- endomorphism-to-interleaving construction --------------------------------

ShiftInterleavingPair interleaving_from_endomorphism(const Module& M, const Morphism& f, int eps) {
  const Grid& g = M.grid;
  const long long P = g.npoints();
  ModPtr Mp = std::make_shared<Module>(M);

  auto back_comp = [&](const Point& q, int steps) -> std::optional<long long> {
    Point r = shifted(q, -steps);
    if (!g.inside(r)) return std::nullopt;
    return g.index(r);
  };

  Submodule A2{Mp, std::vector<Matrix>(P)}, B1{Mp, std::vector<Matrix>(P)},
      B2{Mp, std::vector<Matrix>(P)};
  for (long long i = 0; i < P; ++i) {
    Point q = g.point(i);
    Matrix zero(M.dim[i], 0, M.p);
    auto b1 = back_comp(q, eps);
    if (b1) {
      Point r = g.point(*b1);
      Matrix tf = path_map(M, r, q) - f.comp[*b1];  // (t - f)(-eps) at q
      B1.basis[i] = colspan(f.comp[*b1]);
      B2.basis[i] = colspan(tf);
      auto b2 = back_comp(q, 2 * eps);
      A2.basis[i] = b2 ? colspan(tf * f.comp[*b2]) : zero;
    } else {
      B1.basis[i] = zero;
      B2.basis[i] = zero;
      A2.basis[i] = zero;
    }
  }

  SubmoduleModule mA2 = module_from_submodule(A2);
  SubmoduleModule mB1 = module_from_submodule(B1);
  SubmoduleModule mB2 = module_from_submodule(B2);
  DirectSum A = direct_sum({Mp, mA2.mod}, g, M.p);
  DirectSum B = direct_sum({mB1.mod, mB2.mod}, g, M.p);

  ModPtr Bshift = shift_module(*B.mod, eps);
  ModPtr Ashift = shift_module(*A.mod, eps);
  Morphism phi(A.mod, Bshift), psi(B.mod, Ashift);
  auto express = [&](const Matrix& basis, const Matrix& vecs) {
    auto s = solve_all(basis, vecs);
    if (!s) throw std::logic_error("interleaving_from_endomorphism: image left its block");
    return *s;
  };
  for (long long i = 0; i < P; ++i) {
    Point q = g.point(i);
    Point r = shifted(q, eps);
    if (!g.inside(r)) continue;
    long long j = g.index(r);
    Matrix path = path_map(M, q, r);
    Matrix tf = path - f.comp[i];
    // phi = [[f, t],[t - f, -t]] in block coordinates
    Matrix X11 = express(B1.basis[j], f.comp[i]);
    Matrix X12 = express(B1.basis[j], path * A2.basis[i]);
    Matrix X21 = express(B2.basis[j], tf);
    Matrix X22 = express(B2.basis[j], (path * A2.basis[i]).scaled(fneg(1, M.p)));
    phi.comp[i] = vstack(hstack(X11, X12), hstack(X21, X22));
    // psi = [[t, t],[t - f, -f]]
    Matrix Y11 = path * B1.basis[i];
    Matrix Y12 = path * B2.basis[i];
    Matrix Y21 = express(A2.basis[j], tf * B1.basis[i]);
    Matrix Y22 = express(A2.basis[j], (f.comp[i] * B2.basis[i]).scaled(fneg(1, M.p)));
    psi.comp[i] = vstack(hstack(Y11, Y12), hstack(Y21, Y22));
  }
  return ShiftInterleavingPair{A.mod, B.mod, std::move(phi), std::move(psi), eps};
}

// ---- counterexample family -----------------------------------------------------

CounterexampleFamily counterexample_family(int n) {
  if (n < 1 || n > 3) throw CapExceeded("counterexample_family: n must be in 1..3");
  const u32 p = kDefaultP;
  const int top = 2 * n * n + 10 * n;
  Grid g = Grid::square(2, top + 3);
  const Point q0{0, 6 * n}, x0{2 * n * n, 4 * n}, y0{2 * n * n + 2 * n, 2 * n},
      z0{2 * n * n + 4 * n, 0};
  const std::vector<Point> gens{q0, x0, y0, z0};

  const int m = 2 * n;
  std::vector<std::set<Point>> supp(m);
  std::vector<ModPtr> intervals(m);
  for (int i = 1; i <= m; ++i) {
    std::vector<Point> blockers{Point{0, top}, Point{top - 2 * n + i, top - 2 * n + i},
                                Point{top, 0}};
    std::set<Point>& S = supp[i - 1];
    for (long long idx = 0; idx < g.npoints(); ++idx) {
      Point pt = g.point(idx);
      bool in = false, blocked = false;
      for (const Point& gn : gens)
        if (leq(gn, pt)) in = true;
      for (const Point& b : blockers)
        if (leq(b, pt)) blocked = true;
      if (in && !blocked) S.insert(pt);
    }
    intervals[i - 1] = indicator_module(g, p, S);
  }
  DirectSum D = direct_sum(intervals, g, p);

  auto offset = [&](int part, const Point& pt) {
    int off = 0;
    for (int k = 0; k < part; ++k)
      if (supp[k].count(pt)) ++off;
    return off;
  };
  auto unit = [&](int part, const Point& pt, u32 c, Matrix& vec) {
    if (!supp[part].count(pt))
      throw std::logic_error("counterexample_family: generator point left the support");
    vec.at(offset(part, pt), 0) = fadd(vec.at(offset(part, pt), 0), c, p);
  };
  auto clampi = [&](int k) { return std::min(k, m); };

  // generating vectors of the submodule M inside the direct sum
  std::vector<std::pair<Point, Matrix>> seeds;
  auto add_seed = [&](const Point& pt, std::vector<std::pair<int, u32>> terms) {
    Matrix v(D.mod->dim[g.index(pt)], 1, p);
    for (auto [part, c] : terms) unit(part, pt, c, v);
    seeds.emplace_back(pt, std::move(v));
  };
  for (int i = 1; i <= m; ++i) {
    Point qi = shifted(q0, 2 * (m - i));  // q + (4n-2i)·1
    Point xi = shifted(x0, i), yi = shifted(y0, i), zi = shifted(z0, i);
    if (i < m) {
      add_seed(qi, {{i - 1, 1}});
      add_seed(xi, {{i - 1, 1}});
      if (clampi(i + n) != i)
        add_seed(yi, {{i - 1, 1}, {clampi(i + n) - 1, fneg(1, p)}});
      else
        add_seed(yi, {{i - 1, 1}});
      if (clampi(i + n - 1) != i)
        add_seed(zi, {{i - 1, 1}, {clampi(i + n - 1) - 1, fneg(1, p)}});
      else
        add_seed(zi, {{i - 1, 1}});
    } else {
      add_seed(qi, {{m - 1, 1}});
      add_seed(xi, {{m - 1, 1}});
      add_seed(yi, {{m - 1, 1}});
      add_seed(zi, {{m - 1, 1}});
    }
  }

  // span of the seeds, closed under the edge maps (index order reaches all
  // successors after their predecessors)
  const long long P = g.npoints();
  Submodule S{D.mod, std::vector<Matrix>(P)};
  for (long long i = 0; i < P; ++i) S.basis[i] = Matrix(D.mod->dim[i], 0, p);
  for (auto& [pt, v] : seeds) {
    long long i = g.index(pt);
    S.basis[i] = span_sum(S.basis[i], v);
  }
  for (long long i = 0; i < P; ++i) {
    Point pt = g.point(i);
    for (int ax = 0; ax < g.d(); ++ax) {
      Point nx = pt;
      nx[ax] += 1;
      if (!g.inside(nx)) continue;
      long long j = g.index(nx);
      S.basis[j] = span_sum(S.basis[j], D.mod->edge[ax][i] * S.basis[i]);
    }
  }
  S = canonicalized(S);
  SubmoduleModule Msub = module_from_submodule(S);

  // f on the direct sum: the indicator shift part i -> part i+1 (last fixed)
  ModPtr Dshift = shift_module(*D.mod, 1);
  Morphism fD(D.mod, Dshift);
  for (long long i = 0; i < P; ++i) {
    Point pt = g.point(i);
    Point nx = shifted(pt, 1);
    if (!g.inside(nx)) continue;
    long long j = g.index(nx);
    Matrix& c = fD.comp[i];
    for (int part = 0; part < m; ++part) {
      int tgt = clampi(part + 2) - 1;  // 0-based successor, last fixed
      if (supp[part].count(pt) && supp[tgt].count(nx))
        c.at(offset(tgt, nx), offset(part, pt)) = 1;
    }
  }

  // restrict f to M
  ModPtr Mshift = shift_module(*Msub.mod, 1);
  Morphism fM(Msub.mod, Mshift);
  for (long long i = 0; i < P; ++i) {
    Point pt = g.point(i);
    Point nx = shifted(pt, 1);
    if (!g.inside(nx)) continue;
    long long j = g.index(nx);
    auto s = solve_all(S.basis[j], fD.comp[i] * S.basis[i]);
    if (!s) throw std::logic_error("counterexample_family: f does not preserve M");
    fM.comp[i] = *s;
  }

  CounterexampleFamily out;
  out.M = Msub.mod;
  out.intervals = std::move(intervals);
  out.f = fM;
  out.n = n;
  out.grid = g;
  out.pair = interleaving_from_endomorphism(*Msub.mod, fM, 1);
  return out;
}

}  // namespace pmod
