#include "pmod/grid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace pmod {

std::optional<Point> shift_point(const Grid& g, const Point& p, int eps) {
  Point q = shifted(p, eps);
  if (!g.inside(q)) return std::nullopt;
  return q;
}

std::string IntervalViolation::describe() const {
  std::ostringstream os;
  os << (kind == ConvexityViolation ? "ConvexityViolation" : "DisconnectedParts");
  for (const auto& p : witness) {
    os << " (";
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
  }
  return os.str();
}

std::vector<std::set<Point>> zigzag_components(const std::set<Point>& pts) {
  std::vector<Point> v(pts.begin(), pts.end());
  int n = (int)v.size();
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq(v[i], v[j]) || leq(v[j], v[i])) uf[find(i)] = find(j);
  std::map<int, std::set<Point>> comps;
  for (int i = 0; i < n; ++i) comps[find(i)].insert(v[i]);
  std::vector<std::set<Point>> out;
  for (auto& [_, s] : comps) out.push_back(std::move(s));
  return out;
}

std::optional<IntervalViolation> check_interval(const Grid& g, const std::set<Point>& pts) {
  if (pts.empty()) return IntervalViolation{IntervalViolation::DisconnectedParts, {}};
  for (const auto& p : pts)
    if (!g.inside(p)) throw std::invalid_argument("interval point outside grid");
  // convexity via prefix closures: q is a violation if q not in S but q has
  // points of S both below and above it.
  long long N = g.npoints();
  std::vector<char> in(N, 0), below(N, 0), above(N, 0);
  for (const auto& p : pts) in[g.index(p)] = 1;
  for (long long i = 0; i < N; ++i) {
    Point q = g.point(i);
    below[i] = in[i];
    for (int ax = 0; ax < g.d() && !below[i]; ++ax)
      if (q[ax] > 0) {
        Point r = q;
        --r[ax];
        if (below[g.index(r)]) below[i] = 1;
      }
  }
  for (long long i = N - 1; i >= 0; --i) {
    Point q = g.point(i);
    above[i] = in[i];
    for (int ax = 0; ax < g.d() && !above[i]; ++ax)
      if (q[ax] + 1 < g.sz[ax]) {
        Point r = q;
        ++r[ax];
        if (above[g.index(r)]) above[i] = 1;
      }
  }
  for (long long i = 0; i < N; ++i) {
    if (in[i] || !below[i] || !above[i]) continue;
    Point q = g.point(i);
    // recover witnesses p <= q <= r with p, r in S
    Point p = q;
    while (!in[g.index(p)]) {
      for (int ax = 0; ax < g.d(); ++ax)
        if (p[ax] > 0) {
          Point r2 = p;
          --r2[ax];
          if (below[g.index(r2)]) { p = r2; break; }
        }
    }
    Point r = q;
    while (!in[g.index(r)]) {
      for (int ax = 0; ax < g.d(); ++ax)
        if (r[ax] + 1 < g.sz[ax]) {
          Point r2 = r;
          ++r2[ax];
          if (above[g.index(r2)]) { r = r2; break; }
        }
    }
    return IntervalViolation{IntervalViolation::ConvexityViolation, {p, q, r}};
  }
  auto comps = zigzag_components(pts);
  if (comps.size() > 1)
    return IntervalViolation{IntervalViolation::DisconnectedParts,
                             {*comps[0].begin(), *comps[1].begin()}};
  return std::nullopt;
}

IntervalShape validate_interval(const Grid& g, const std::set<Point>& pts) {
  if (auto v = check_interval(g, pts)) throw std::invalid_argument("not an interval: " + v->describe());
  return IntervalShape{g, pts};
}

// ---- upsets ----------------------------------------------------------------

UpsetShape UpsetShape::from_points(int d, std::vector<Point> pts) {
  UpsetShape u;
  u.d = d;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < pts.size() && !dominated; ++j)
      if (i != j && leq(pts[j], pts[i]) && pts[j] != pts[i]) dominated = true;
    if (!dominated) u.gens.push_back(pts[i]);
  }
  std::sort(u.gens.begin(), u.gens.end());
  return u;
}

bool UpsetShape::contains(const Point& q) const {
  for (const auto& g : gens)
    if (leq(g, q)) return true;
  return false;
}

UpsetShape UpsetShape::shift(int eps) const {
  UpsetShape u = *this;
  for (auto& g : u.gens)
    for (auto& c : g) c -= eps;
  return u;
}

bool upset_contains(const UpsetShape& U, const UpsetShape& V) {
  for (const auto& g : V.gens)
    if (!U.contains(g)) return false;
  return true;
}

bool upset_contains_shifted(const UpsetShape& U, const UpsetShape& V, int eps) {
  return upset_contains(U.shift(eps), V);
}

UpsetShape upset_union(const UpsetShape& U, const UpsetShape& V) {
  std::vector<Point> pts = U.gens;
  pts.insert(pts.end(), V.gens.begin(), V.gens.end());
  return UpsetShape::from_points(U.d, std::move(pts));
}

UpsetShape upset_intersection(const UpsetShape& U, const UpsetShape& V) {
  std::vector<Point> pts;
  for (const auto& a : U.gens)
    for (const auto& b : V.gens) {
      Point j(a.size());
      for (size_t i = 0; i < a.size(); ++i) j[i] = std::max(a[i], b[i]);
      pts.push_back(std::move(j));
    }
  return UpsetShape::from_points(U.d, std::move(pts));
}

UpsetShape up_closure(const IntervalShape& I) {
  return UpsetShape::from_points(I.grid.d(), std::vector<Point>(I.points.begin(), I.points.end()));
}

std::set<Point> up_closure_points(const Grid& g, const std::set<Point>& pts) {
  long long N = g.npoints();
  std::vector<char> in(N, 0);
  for (const auto& p : pts) in[g.index(p)] = 1;
  for (long long i = 0; i < N; ++i) {
    if (in[i]) continue;
    Point q = g.point(i);
    for (int ax = 0; ax < g.d() && !in[i]; ++ax)
      if (q[ax] > 0) {
        Point r = q;
        --r[ax];
        if (in[g.index(r)]) in[i] = 1;
      }
  }
  std::set<Point> out;
  for (long long i = 0; i < N; ++i)
    if (in[i]) out.insert(g.point(i));
  return out;
}

UpsetOpsResult upset_ops(const UpsetShape& U, const UpsetShape& V, int eps) {
  return UpsetOpsResult{upset_contains_shifted(U, V, eps), upset_intersection(U, V), upset_union(U, V)};
}

std::set<Point> upset_points_in(const UpsetShape& U, const Grid& g) {
  std::set<Point> out;
  long long N = g.npoints();
  for (long long i = 0; i < N; ++i) {
    Point q = g.point(i);
    if (U.contains(q)) out.insert(std::move(q));
  }
  return out;
}

IntervalParts interval_parts(const IntervalShape& I) {
  IntervalParts out;
  out.U = up_closure(I);
  auto up = up_closure_points(I.grid, I.points);
  for (const auto& q : up)
    if (!I.points.count(q)) out.E_points.insert(q);
  out.E = UpsetShape::from_points(I.grid.d(), std::vector<Point>(out.E_points.begin(), out.E_points.end()));
  return out;
}

std::set<Point> upset_difference_points(const UpsetShape& U, const UpsetShape& E, const Grid& g) {
  std::set<Point> out;
  long long N = g.npoints();
  for (long long i = 0; i < N; ++i) {
    Point q = g.point(i);
    if (U.contains(q) && !E.contains(q)) out.insert(std::move(q));
  }
  return out;
}

}  // namespace pmod
