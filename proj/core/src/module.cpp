#include "pmod/module.hpp"

#include <sstream>

#include "pmod/rng.hpp"

namespace pmod {

static std::string pstr(const Point& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

Module::Module(Grid g, u32 p_) : grid(std::move(g)), p(p_) {
  require_prime(p);
  dim.assign(grid.npoints(), 0);
  init_edges();
}

int Module::supdim() const {
  int r = 0;
  for (int d_ : dim) r = std::max(r, d_);
  return r;
}

long long Module::total_dim() const {
  long long t = 0;
  for (int d_ : dim) t += d_;
  return t;
}

void Module::init_edges() {
  edge.assign(d(), {});
  for (int ax = 0; ax < d(); ++ax) {
    edge[ax].resize(grid.npoints());
    for (long long i = 0; i < grid.npoints(); ++i) {
      Point q = grid.point(i);
      Point r = q;
      ++r[ax];
      edge[ax][i] = Matrix(dim_at(r), dim[i], p);
    }
  }
}

void Module::check_commutativity() const {
  for (long long i = 0; i < grid.npoints(); ++i) {
    Point q = grid.point(i);
    for (int a = 0; a < d(); ++a) {
      Point qa = q;
      ++qa[a];
      if (!grid.inside(qa)) continue;
      for (int b = a + 1; b < d(); ++b) {
        Point qb = q;
        ++qb[b];
        if (!grid.inside(qb)) continue;
        Point qab = qa;
        ++qab[b];
        if (!grid.inside(qab)) continue;
        Matrix lhs = edge[b][grid.index(qa)] * edge[a][i];
        Matrix rhs = edge[a][grid.index(qb)] * edge[b][i];
        if (!(lhs == rhs))
          throw std::runtime_error("commutativity violated at square " + pstr(q));
      }
    }
  }
}

ModPtr mk(Module&& m) { return std::make_shared<Module>(std::move(m)); }

Matrix path_map(const Module& M, const Point& a, const Point& b) {
  if (!leq(a, b)) throw std::invalid_argument("path_map requires a <= b");
  if (!M.grid.inside(a)) return Matrix(M.dim_at(b), 0, M.p);
  if (!M.grid.inside(b)) return Matrix(0, M.dim_at(a), M.p);
  Matrix acc = Matrix::identity(M.dim_at(a), M.p);
  Point cur = a;
  for (int ax = 0; ax < M.d(); ++ax) {
    while (cur[ax] < b[ax]) {
      acc = M.edge[ax][M.grid.index(cur)] * acc;
      ++cur[ax];
    }
  }
  return acc;
}

Matrix diag_path(const Module& M, const Point& q, int s) { return path_map(M, q, shifted(q, s)); }

ModPtr shift_module(const Module& M, int eps) {
  if (eps < 0) {
    for (long long i = 0; i < M.npoints(); ++i) {
      if (M.dim[i] == 0) continue;
      Point q = shifted(M.grid.point(i), -eps);
      if (!M.grid.inside(q))
        throw MarginTooSmall("shift_module(" + std::to_string(eps) + ") pushes support at " +
                             pstr(M.grid.point(i)) + " out of the box");
    }
  }
  Module N(M.grid, M.p);
  for (long long i = 0; i < N.npoints(); ++i) {
    Point src = shifted(N.grid.point(i), eps);
    N.dim[i] = M.dim_at(src);
  }
  for (int ax = 0; ax < N.d(); ++ax) {
    for (long long i = 0; i < N.npoints(); ++i) {
      Point q = N.grid.point(i);
      Point src = shifted(q, eps);
      Point tgt = src;
      ++tgt[ax];
      if (M.grid.inside(src) && M.grid.inside(tgt))
        N.edge[ax][i] = M.edge[ax][M.grid.index(src)];
      else {
        Point qn = q;
        ++qn[ax];
        N.edge[ax][i] = Matrix(N.dim_at(qn), N.dim[i], N.p);
      }
    }
  }
  return mk(std::move(N));
}

Morphism::Morphism(ModPtr s, ModPtr t) : src(std::move(s)), dst(std::move(t)) {
  if (!(src->grid == dst->grid) || src->p != dst->p)
    throw std::invalid_argument("morphism endpoints on different grids/fields");
  comp.resize(src->npoints());
  for (long long i = 0; i < src->npoints(); ++i) comp[i] = Matrix(dst->dim[i], src->dim[i], src->p);
}

bool Morphism::is_natural() const {
  const Module& M = *src;
  const Module& N = *dst;
  for (int ax = 0; ax < M.d(); ++ax)
    for (long long i = 0; i < M.npoints(); ++i) {
      Point q = M.grid.point(i);
      Point r = q;
      ++r[ax];
      if (!M.grid.inside(r)) continue;
      long long j = M.grid.index(r);
      if (!(comp[j] * M.edge[ax][i] == N.edge[ax][i] * comp[i])) return false;
    }
  return true;
}

Morphism identity_morphism(ModPtr M) {
  Morphism f(M, M);
  for (long long i = 0; i < M->npoints(); ++i) f.comp[i] = Matrix::identity(M->dim[i], M->p);
  return f;
}

Morphism zero_morphism(ModPtr src, ModPtr dst) { return Morphism(std::move(src), std::move(dst)); }

static void require_same_shape(const Module& a, const Module& b, const char* what) {
  if (!(a.grid == b.grid) || a.p != b.p || a.dim != b.dim)
    throw std::invalid_argument(std::string("module shape mismatch in ") + what);
}

Morphism compose(const Morphism& g, const Morphism& f) {
  require_same_shape(*g.src, *f.dst, "compose");
  Morphism h(f.src, g.dst);
  for (long long i = 0; i < f.src->npoints(); ++i) h.comp[i] = g.comp[i] * f.comp[i];
  return h;
}

Morphism madd(const Morphism& f, const Morphism& g) {
  Morphism h(f.src, f.dst);
  for (size_t i = 0; i < h.comp.size(); ++i) h.comp[i] = f.comp[i] + g.comp[i];
  return h;
}

Morphism msub(const Morphism& f, const Morphism& g) {
  Morphism h(f.src, f.dst);
  for (size_t i = 0; i < h.comp.size(); ++i) h.comp[i] = f.comp[i] - g.comp[i];
  return h;
}

Morphism mscale(const Morphism& f, u32 c) {
  Morphism h(f.src, f.dst);
  for (size_t i = 0; i < h.comp.size(); ++i) h.comp[i] = f.comp[i].scaled(c);
  return h;
}

Morphism shift_morphism(const Morphism& f, int s) {
  ModPtr ns = shift_module(*f.src, s);
  ModPtr nd = shift_module(*f.dst, s);
  Morphism h(ns, nd);
  const Grid& g = ns->grid;
  for (long long i = 0; i < ns->npoints(); ++i) {
    Point q = shifted(g.point(i), s);
    if (g.inside(q)) h.comp[i] = f.comp[g.index(q)];
    // else: stays the zero matrix with 0-dim endpoint(s)
  }
  return h;
}

Morphism transition(const Module& M, int a, int b) {
  if (a > b) throw std::invalid_argument("transition requires a <= b");
  ModPtr ms = shift_module(M, a);
  ModPtr md = shift_module(M, b);
  Morphism h(ms, md);
  for (long long i = 0; i < ms->npoints(); ++i) {
    Point q = M.grid.point(i);
    h.comp[i] = path_map(M, shifted(q, a), shifted(q, b));
  }
  return h;
}

std::vector<Morphism> hom_basis_bruteforce(const Module& M, const Module& N) {
  require_prime(M.p);
  if (!(M.grid == N.grid) || M.p != N.p) throw std::invalid_argument("hom on mismatched modules");
  // unknowns: all entries of all components, in point-major row-major order
  std::vector<long long> off(M.npoints() + 1, 0);
  for (long long i = 0; i < M.npoints(); ++i) off[i + 1] = off[i] + (long long)M.dim[i] * N.dim[i];
  long long nu = off[M.npoints()];
  std::vector<std::vector<u32>> rows;
  for (int ax = 0; ax < M.d(); ++ax)
    for (long long i = 0; i < M.npoints(); ++i) {
      Point q = M.grid.point(i);
      Point r = q;
      ++r[ax];
      if (!M.grid.inside(r)) continue;
      long long j = M.grid.index(r);
      const Matrix& Me = M.edge[ax][i];
      const Matrix& Ne = N.edge[ax][i];
      // f_r * Me - Ne * f_q = 0 ; one row per (a2, b) in N.dim[j] x M.dim[i]
      for (int a2 = 0; a2 < N.dim[j]; ++a2)
        for (int b = 0; b < M.dim[i]; ++b) {
          std::vector<u32> row(nu, 0);
          for (int c = 0; c < M.dim[j]; ++c)
            row[off[j] + (long long)a2 * M.dim[j] + c] =
                fadd(row[off[j] + (long long)a2 * M.dim[j] + c], Me.at(c, b), M.p);
          for (int c2 = 0; c2 < N.dim[i]; ++c2)
            row[off[i] + (long long)c2 * M.dim[i] + b] =
                fsub(row[off[i] + (long long)c2 * M.dim[i] + b], Ne.at(a2, c2), M.p);
          rows.push_back(std::move(row));
        }
    }
  Matrix C((int)rows.size(), (int)nu, M.p);
  for (size_t i = 0; i < rows.size(); ++i)
    for (long long jcol = 0; jcol < nu; ++jcol) C.at((int)i, (int)jcol) = rows[i][jcol];
  Matrix Z = nullspace(C);
  std::vector<Morphism> out;
  ModPtr Mp = std::make_shared<Module>(M);
  ModPtr Np = std::make_shared<Module>(N);
  for (int k = 0; k < Z.cols; ++k) {
    Morphism f(Mp, Np);
    for (long long i = 0; i < M.npoints(); ++i)
      for (int a2 = 0; a2 < N.dim[i]; ++a2)
        for (int b = 0; b < M.dim[i]; ++b)
          f.comp[i].at(a2, b) = Z.at((int)(off[i] + (long long)a2 * M.dim[i] + b), k);
    out.push_back(std::move(f));
  }
  return out;
}

// ---- submodules ------------------------------------------------------------

long long Submodule::total_dim() const {
  long long t = 0;
  for (const auto& b : basis) t += b.cols;
  return t;
}

Submodule full_submodule(ModPtr M) {
  Submodule s{M, {}};
  s.basis.resize(M->npoints());
  for (long long i = 0; i < M->npoints(); ++i) s.basis[i] = Matrix::identity(M->dim[i], M->p);
  return s;
}

Submodule zero_submodule(ModPtr M) {
  Submodule s{M, {}};
  s.basis.resize(M->npoints());
  for (long long i = 0; i < M->npoints(); ++i) s.basis[i] = Matrix(M->dim[i], 0, M->p);
  return s;
}

Submodule canonicalized(Submodule s) {
  for (auto& b : s.basis) b = colspan(b);
  return s;
}

bool sub_equal(const Submodule& a, const Submodule& b) {
  for (size_t i = 0; i < a.basis.size(); ++i)
    if (!(a.basis[i] == b.basis[i])) return false;
  return true;
}

bool sub_contains(const Submodule& big, const Submodule& small) {
  for (size_t i = 0; i < big.basis.size(); ++i)
    if (!span_contains(big.basis[i], small.basis[i])) return false;
  return true;
}

Submodule sub_sum(const Submodule& a, const Submodule& b) {
  Submodule s{a.ambient, {}};
  s.basis.resize(a.basis.size());
  for (size_t i = 0; i < a.basis.size(); ++i) s.basis[i] = span_sum(a.basis[i], b.basis[i]);
  return s;
}

Submodule sub_intersect(const Submodule& a, const Submodule& b) {
  Submodule s{a.ambient, {}};
  s.basis.resize(a.basis.size());
  for (size_t i = 0; i < a.basis.size(); ++i) s.basis[i] = span_intersect(a.basis[i], b.basis[i]);
  return s;
}

bool sub_is_closed(const Submodule& s) {
  const Module& M = *s.ambient;
  for (int ax = 0; ax < M.d(); ++ax)
    for (long long i = 0; i < M.npoints(); ++i) {
      Point q = M.grid.point(i);
      Point r = q;
      ++r[ax];
      if (!M.grid.inside(r)) continue;
      if (!span_contains(s.basis[M.grid.index(r)], M.edge[ax][i] * s.basis[i])) return false;
    }
  return true;
}

Submodule image(const Morphism& f) {
  Submodule s{f.dst, {}};
  s.basis.resize(f.comp.size());
  for (size_t i = 0; i < f.comp.size(); ++i) s.basis[i] = colspan(f.comp[i]);
  return s;
}

Submodule kernel(const Morphism& f) {
  Submodule s{f.src, {}};
  s.basis.resize(f.comp.size());
  for (size_t i = 0; i < f.comp.size(); ++i) s.basis[i] = colspan(nullspace(f.comp[i]));
  return s;
}

Submodule sub_image(const Morphism& f, const Submodule& s) {
  Submodule t{f.dst, {}};
  t.basis.resize(f.comp.size());
  for (size_t i = 0; i < f.comp.size(); ++i) t.basis[i] = colspan(f.comp[i] * s.basis[i]);
  return t;
}

Submodule sub_preimage(const Morphism& f, const Submodule& t) {
  Submodule s{f.src, {}};
  s.basis.resize(f.comp.size());
  for (size_t i = 0; i < f.comp.size(); ++i) s.basis[i] = preimage(f.comp[i], t.basis[i]);
  return s;
}

Submodule sub_push(const Submodule& s, int steps) {
  const Module& M = *s.ambient;
  ModPtr shiftedM = shift_module(M, steps);
  Submodule t{shiftedM, {}};
  t.basis.resize(M.npoints());
  for (long long i = 0; i < M.npoints(); ++i) {
    Point q = M.grid.point(i);
    t.basis[i] = colspan(diag_path(M, q, steps) * s.basis[i]);
  }
  return t;
}

SubmoduleModule module_from_submodule(const Submodule& s) {
  const Module& M = *s.ambient;
  Module Q(M.grid, M.p);
  for (long long i = 0; i < M.npoints(); ++i) Q.dim[i] = s.basis[i].cols;
  Q.init_edges();
  for (int ax = 0; ax < M.d(); ++ax)
    for (long long i = 0; i < M.npoints(); ++i) {
      Point q = M.grid.point(i);
      Point r = q;
      ++r[ax];
      if (!M.grid.inside(r)) continue;
      long long j = M.grid.index(r);
      auto X = solve_all(s.basis[j], M.edge[ax][i] * s.basis[i]);
      if (!X) throw std::runtime_error("module_from_submodule: basis not closed under edges");
      Q.edge[ax][i] = *X;
    }
  ModPtr Qp = mk(std::move(Q));
  Morphism incl(Qp, s.ambient);
  for (long long i = 0; i < M.npoints(); ++i) incl.comp[i] = s.basis[i];
  return SubmoduleModule{Qp, std::move(incl)};
}

DirectSum direct_sum(const std::vector<ModPtr>& parts, const Grid& g, u32 p) {
  Module S(g, p);
  for (const auto& m : parts) {
    if (!(m->grid == g) || m->p != p) throw std::invalid_argument("direct_sum mismatch");
    for (long long i = 0; i < g.npoints(); ++i) S.dim[i] += m->dim[i];
  }
  S.init_edges();
  for (int ax = 0; ax < S.d(); ++ax)
    for (long long i = 0; i < g.npoints(); ++i) {
      Point q = g.point(i);
      Point r = q;
      ++r[ax];
      if (!g.inside(r)) continue;
      int ro = 0, co = 0;
      for (const auto& m : parts) {
        const Matrix& e = m->edge[ax][i];
        for (int x = 0; x < e.rows; ++x)
          for (int y = 0; y < e.cols; ++y) S.edge[ax][i].at(ro + x, co + y) = e.at(x, y);
        ro += e.rows;
        co += e.cols;
      }
    }
  ModPtr Sp = mk(std::move(S));
  DirectSum out{Sp, {}, {}};
  for (size_t k = 0; k < parts.size(); ++k) {
    Morphism incl(parts[k], Sp);
    Morphism proj(Sp, parts[k]);
    for (long long i = 0; i < g.npoints(); ++i) {
      int off = 0;
      for (size_t k2 = 0; k2 < k; ++k2) off += parts[k2]->dim[i];
      for (int x = 0; x < parts[k]->dim[i]; ++x) {
        incl.comp[i].at(off + x, x) = 1;
        proj.comp[i].at(x, off + x) = 1;
      }
    }
    out.incl.push_back(std::move(incl));
    out.proj.push_back(std::move(proj));
  }
  return out;
}

ModPtr indicator_module(const Grid& g, u32 p, const std::set<Point>& support) {
  Module M(g, p);
  for (const auto& q : support) {
    if (!g.inside(q)) throw std::invalid_argument("indicator support point outside grid");
    M.dim[g.index(q)] = 1;
  }
  M.init_edges();
  for (int ax = 0; ax < M.d(); ++ax)
    for (const auto& q : support) {
      Point r = q;
      ++r[ax];
      if (g.inside(r) && support.count(r)) M.edge[ax][g.index(q)].at(0, 0) = 1;
    }
  return mk(std::move(M));
}

ModPtr bar_module(const Grid& g, u32 p, int a, int b) {
  if (g.d() != 1) throw std::invalid_argument("bar_module needs a 1-d grid");
  std::set<Point> sup;
  for (int x = std::max(a, 0); x < std::min(b, g.sz[0]); ++x) sup.insert(Point{x});
  return indicator_module(g, p, sup);
}

ModPtr base_change(const Module& M, u64 seed) {
  Rng rng(seed);
  std::vector<Matrix> P(M.npoints()), Pinv(M.npoints());
  for (long long i = 0; i < M.npoints(); ++i) {
    int n = M.dim[i];
    Matrix A(n, n, M.p);
    do {
      for (auto& x : A.a) x = rng.field_elem(M.p);
    } while (n > 0 && !invertible(A));
    P[i] = A;
    Pinv[i] = n > 0 ? inverse(A) : A;
  }
  Module N(M.grid, M.p);
  N.dim = M.dim;
  N.init_edges();
  for (int ax = 0; ax < M.d(); ++ax)
    for (long long i = 0; i < M.npoints(); ++i) {
      Point q = M.grid.point(i);
      Point r = q;
      ++r[ax];
      if (!M.grid.inside(r)) continue;
      N.edge[ax][i] = P[M.grid.index(r)] * M.edge[ax][i] * Pinv[i];
    }
  return mk(std::move(N));
}

}  // namespace pmod
