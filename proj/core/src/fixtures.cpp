#include "pmod/fixtures.hpp"

#include <algorithm>

#include "pmod/rng.hpp"
#include "pmod/subquotient.hpp"

namespace pmod {

std::set<Point> rect_support(int a1, int b1, int a2, int b2) {
  std::set<Point> s;
  for (int x = a1; x <= b1; ++x)
    for (int y = a2; y <= b2; ++y) s.insert(Point{x, y});
  return s;
}

ModPtr square_with_legs(int eps, u32 p) {
  if (eps < 1 || eps > 4) throw std::invalid_argument("square_with_legs: eps in 1..4");
  Grid g = Grid::square(2, 40);
  auto I1 = rect_support(10, 30, 10 - 2 * eps, 30);
  auto I2 = rect_support(10 - 2 * eps, 30, 10, 30);
  auto I3 = rect_support(30 - 2 * eps, 30, 30 - 2 * eps, 30);
  // drop the doubly-maximal corner: with it included, the identification of
  // the two sheets at the corner forces every morphism into the double shift
  // to kill the diagonal class, which collapses the hom space and leaves an
  // extra unsplit copy of the full square in the pruning
  const Point corner{30, 30};
  I1.erase(corner);
  I2.erase(corner);
  I3.erase(corner);
  ModPtr M1 = indicator_module(g, p, I1);
  ModPtr M2 = indicator_module(g, p, I2);
  ModPtr M3 = indicator_module(g, p, I3);
  DirectSum D = direct_sum({M1, M2}, g, p);
  Morphism phi(M3, D.mod);
  for (const Point& q : I3) {
    long long i = g.index(q);
    phi.comp[i] = Matrix(2, 1, p);
    phi.comp[i].at(0, 0) = 1;
    phi.comp[i].at(1, 0) = 1;
  }
  Submodule full = full_submodule(D.mod);
  Submodule im = image(phi);
  im.ambient = D.mod;
  return subquotient(full, im).quotient;
}

std::set<Point> square_with_legs_L(int eps) {
  std::set<Point> L = rect_support(10 + eps, 30 - eps, 10 + eps, 30 - eps);
  for (const Point& q : rect_support(30 - 3 * eps, 30 - eps, 30 - 3 * eps, 30 - eps)) L.erase(q);
  return L;
}

InterleavedPair strip_core_pair(u32 p) {
  Grid g = Grid::square(2, 40);
  auto sq = rect_support(8, 30, 8, 30);
  ModPtr I = indicator_module(g, p, sq);
  DirectSum Msum = direct_sum({I, I}, g, p);
  ModPtr M = Msum.mod;

  // N: dim-1 strips feeding a dim-2 core, with a dim-1 corner
  std::set<Point> strip1 = rect_support(8, 8, 9, 30);   // {8} x [9,30] -> [0,1]^T
  std::set<Point> strip2 = rect_support(9, 30, 8, 8);   // [9,30] x {8} -> [1,0]^T
  std::set<Point> core = rect_support(9, 30, 9, 30);
  core.erase(Point{30, 30});
  Point corner{30, 30};
  Module N(g, p);
  for (const Point& q : strip1) N.dim[g.index(q)] = 1;
  for (const Point& q : strip2) N.dim[g.index(q)] = 1;
  for (const Point& q : core) N.dim[g.index(q)] = 2;
  N.dim[g.index(corner)] = 1;
  N.init_edges();
  auto in = [](const std::set<Point>& s, const Point& q) { return s.count(q) != 0; };
  for (long long i = 0; i < g.npoints(); ++i) {
    Point q = g.point(i);
    for (int ax = 0; ax < 2; ++ax) {
      Point r = q;
      r[ax] += 1;
      if (!g.inside(r)) continue;
      Matrix& e = N.edge_mut(ax, i);
      if (e.rows == 0 || e.cols == 0) continue;
      auto region = [&](const Point& x) {
        if (in(strip1, x)) return 1;
        if (in(strip2, x)) return 2;
        if (in(core, x)) return 3;
        return 4;  // corner
      };
      int a = region(q), b = region(r);
      if (a == b && (a == 1 || a == 2 || a == 4)) {
        e.at(0, 0) = 1;
      } else if (a == 3 && b == 3) {
        e.at(0, 0) = 1;
        e.at(1, 1) = 1;
      } else if (a == 1 && b == 3) {  // strip1 -> core: [0,1]^T
        e.at(1, 0) = 1;
      } else if (a == 2 && b == 3) {  // strip2 -> core: [1,0]^T
        e.at(0, 0) = 1;
      } else if (a == 3 && b == 4) {  // core -> corner: [1,1]
        e.at(0, 0) = 1;
        e.at(0, 1) = 1;
      }
    }
  }
  N.check_commutativity();
  ModPtr Np = mk(std::move(N));

  // 1-interleaving: phi is the identity into the core ([1,1] into the corner),
  // psi the identity out of the core ([0,1]^T / [1,0]^T out of the strips)
  ModPtr N1 = shift_module(*Np, 1);
  ModPtr M1 = shift_module(*M, 1);
  Morphism phi(M, N1), psi(Np, M1);
  for (long long i = 0; i < g.npoints(); ++i) {
    Point q = g.point(i);
    Point r = shifted(q, 1);
    if (!g.inside(r)) continue;
    long long j = g.index(r);
    if (sq.count(q)) {
      if (core.count(r)) {
        phi.comp[i] = Matrix::identity(2, p);
      } else if (r == corner) {
        phi.comp[i] = Matrix(1, 2, p);
        phi.comp[i].at(0, 0) = 1;
        phi.comp[i].at(0, 1) = 1;
      }
    }
    if (sq.count(r)) {
      if (core.count(q)) {
        psi.comp[i] = Matrix::identity(2, p);
      } else if (strip1.count(q)) {
        psi.comp[i] = Matrix(2, 1, p);
        psi.comp[i].at(1, 0) = 1;
      } else if (strip2.count(q)) {
        psi.comp[i] = Matrix(2, 1, p);
        psi.comp[i].at(0, 0) = 1;
      }
      // corner -> M(1) is zero: (31,31) leaves the support of M
    }
  }
  return InterleavedPair{M, Np, std::move(phi), std::move(psi), 1};
}

BarsFamily erosion_vs_bottleneck_family(int c, u32 p) {
  if (c < 2) throw std::invalid_argument("erosion_vs_bottleneck_family: c >= 2");
  BarsFamily out;
  out.c = c;
  Grid g(std::vector<int>{6 * c});
  std::vector<ModPtr> mparts, nparts;
  for (int i = 1; i <= 2 * c - 2; ++i) {
    Bar b{2 * c - 1 - i, 4 * c - 1 + i};
    out.A.push_back(b);
    out.B.push_back(b);
    mparts.push_back(bar_module(g, p, b.a, b.b));
    nparts.push_back(bar_module(g, p, b.a, b.b));
  }
  Bar extra{0, 2 * c};
  out.B.push_back(extra);
  nparts.push_back(bar_module(g, p, extra.a, extra.b));
  out.M = direct_sum(mparts, g, p).mod;
  out.N = direct_sum(nparts, g, p).mod;
  return out;
}

CIProblem pattern_no_simple() {
  CIProblem prob;
  prob.n = 3;
  auto mk3 = [](std::initializer_list<int> v) {
    std::vector<std::vector<bool>> m(3, std::vector<bool>(3));
    auto it = v.begin();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = *it++ != 0;
    return m;
  };
  prob.P = mk3({1, 1, 1, 1, 0, 1, 1, 1, 0});
  prob.Q = mk3({1, 1, 1, 1, 1, 0, 1, 0, 1});
  return prob;
}

CISolution pattern_no_simple_solution(u32 p) {
  Matrix A = Matrix::from(3, 3, p, {1, 1, 1, 1, 0, 1, 1, 1, 0});
  Matrix B = Matrix::from(3, 3, p, {-1, 1, 1, 1, -1, 0, 1, 0, -1});
  return CISolution{A, B};
}

std::pair<UpsetShape, UpsetShape> staircase_upset_pair() {
  UpsetShape U = UpsetShape::from_points(2, {Point{2, 0}, Point{0, 2}});
  UpsetShape V = UpsetShape::from_points(2, {Point{3, 1}, Point{1, 3}});
  return {U, V};
}

ModPtr random_rect_sum(const Grid& g, u32 p, u64 seed, int parts) {
  Rng rng(seed);
  std::vector<ModPtr> mods;
  for (int k = 0; k < parts; ++k) {
    std::set<Point> s;
    Point lo(g.d()), hi(g.d());
    for (int ax = 0; ax < g.d(); ++ax) {
      int a = (int)rng.below((u64)g.sz[ax]);
      int b = (int)rng.below((u64)g.sz[ax]);
      lo[ax] = std::min(a, b);
      hi[ax] = std::max(a, b);
    }
    // enumerate the rectangle
    std::vector<Point> stack{lo};
    Point cur = lo;
    while (true) {
      s.insert(cur);
      int ax = 0;
      while (ax < g.d()) {
        if (++cur[ax] <= hi[ax]) break;
        cur[ax] = lo[ax];
        ++ax;
      }
      if (ax == g.d()) break;
    }
    mods.push_back(indicator_module(g, p, s));
  }
  return direct_sum(mods, g, p).mod;
}

Morphism random_morphism(ModPtr src, ModPtr dst, u64 seed) {
  auto H = hom_basis(*src, *dst);
  Morphism f(src, dst);
  Rng rng(seed);
  for (const auto& h : H) {
    u32 c = rng.field_elem(src->p);
    if (c) f = madd(f, mscale(h, c));
  }
  return f;
}

ModPtr random_module(const Grid& g, u32 p, u64 seed, int parts) {
  Rng rng(seed ^ 0xabcdef12345ULL);
  ModPtr base = random_rect_sum(g, p, seed, parts);
  switch (rng.below(3)) {
    case 0:
      return base_change(*base, seed * 7 + 1);
    case 1: {
      ModPtr other = random_rect_sum(g, p, seed * 13 + 5, std::max(1, parts - 1));
      Morphism f = random_morphism(other, base, seed * 31 + 7);
      Submodule full = full_submodule(base);
      Submodule im = image(f);
      im.ambient = base;
      ModPtr q = subquotient(full, im).quotient;
      return q->is_zero() ? base : q;
    }
    default:
      return base;
  }
}

std::vector<std::pair<std::string, ModPtr>> fixture_corpus(u32 p) {
  std::vector<std::pair<std::string, ModPtr>> out;
  out.emplace_back("square-with-legs-eps1", square_with_legs(1, p));
  out.emplace_back("square-with-legs-eps3", square_with_legs(3, p));
  InterleavedPair sc = strip_core_pair(p);
  out.emplace_back("two-squares", sc.M);
  out.emplace_back("strip-core", sc.N);
  BarsFamily bf = erosion_vs_bottleneck_family(3, p);
  out.emplace_back("bar-family-M", bf.M);
  out.emplace_back("bar-family-N", bf.N);
  Grid g5 = Grid::square(2, 5);
  for (u64 s = 1; s <= 4; ++s)
    out.emplace_back("random-" + std::to_string(s), random_module(g5, p, s));
  return out;
}

}  // namespace pmod
