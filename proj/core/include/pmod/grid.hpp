#pragma once
// Finite integer grid poset, diagonal shifts, and combinatorial shapes
// (intervals and upsets) living on it.

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmod {

using Point = std::vector<int>;

struct MarginTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Grid {
  std::vector<int> sz;  // extent per axis; points are 0 <= p[i] < sz[i]

  Grid() = default;
  explicit Grid(std::vector<int> sizes) : sz(std::move(sizes)) {
    for (int s : sz)
      if (s <= 0) throw std::invalid_argument("grid extents must be positive");
  }
  static Grid square(int d, int n) { return Grid(std::vector<int>(d, n)); }

  int d() const { return (int)sz.size(); }
  long long npoints() const {
    long long n = 1;
    for (int s : sz) n *= s;
    return n;
  }
  bool inside(const Point& p) const {
    if ((int)p.size() != d()) return false;
    for (int i = 0; i < d(); ++i)
      if (p[i] < 0 || p[i] >= sz[i]) return false;
    return true;
  }
  // row-major index; iteration in index order is a linear extension of <=
  long long index(const Point& p) const {
    long long idx = 0;
    for (int i = 0; i < d(); ++i) idx = idx * sz[i] + p[i];
    return idx;
  }
  Point point(long long idx) const {
    Point p(d());
    for (int i = d() - 1; i >= 0; --i) {
      p[i] = (int)(idx % sz[i]);
      idx /= sz[i];
    }
    return p;
  }
  bool operator==(const Grid& o) const { return sz == o.sz; }
};

inline bool leq(const Point& a, const Point& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// p + (eps,...,eps); nullopt when the result leaves the box.
std::optional<Point> shift_point(const Grid& g, const Point& p, int eps);
inline Point shifted(const Point& p, int eps) {
  Point q = p;
  for (auto& c : q) c += eps;
  return q;
}

// ---- intervals -------------------------------------------------------------

struct IntervalShape {
  Grid grid;
  std::set<Point> points;
};

struct IntervalViolation {
  enum Kind { ConvexityViolation, DisconnectedParts } kind;
  std::vector<Point> witness;  // (p,q,r) for convexity; one point per part for connectivity
  std::string describe() const;
};

// Returns the shape, or reports the first violated axiom.
std::optional<IntervalViolation> check_interval(const Grid& g, const std::set<Point>& pts);
IntervalShape validate_interval(const Grid& g, const std::set<Point>& pts);  // throws on violation

// zigzag-connected components of a point set
std::vector<std::set<Point>> zigzag_components(const std::set<Point>& pts);

// ---- upsets ----------------------------------------------------------------

// Box-free staircase upset, stored by minimal generators (an antichain).
// Generators may have negative coordinates; membership is dominance.
struct UpsetShape {
  int d = 2;
  std::vector<Point> gens;  // antichain, lex-sorted

  static UpsetShape from_points(int d, std::vector<Point> pts);
  bool contains(const Point& q) const;
  bool empty() const { return gens.empty(); }
  UpsetShape shift(int eps) const;  // U(eps) = {q : q + eps*1 in U} = gens - eps*1
  bool operator==(const UpsetShape& o) const { return d == o.d && gens == o.gens; }
};

// V ⊆ U ?
bool upset_contains(const UpsetShape& U, const UpsetShape& V);
// V ⊆ U(eps) ?
bool upset_contains_shifted(const UpsetShape& U, const UpsetShape& V, int eps);
UpsetShape upset_union(const UpsetShape& U, const UpsetShape& V);
UpsetShape upset_intersection(const UpsetShape& U, const UpsetShape& V);

// U(I) = up-closure of an interval, E(I) = U(I) \ I (as an upset, valid for
// intervals whose complement-in-upclosure is up-closed, e.g. hooks/staircases).
UpsetShape up_closure(const IntervalShape& I);
std::set<Point> up_closure_points(const Grid& g, const std::set<Point>& pts);

struct UpsetOpsResult {
  bool contains_shifted;
  UpsetShape intersection;
  UpsetShape union_;
};
UpsetOpsResult upset_ops(const UpsetShape& U, const UpsetShape& V, int eps);

// points of U within the box
std::set<Point> upset_points_in(const UpsetShape& U, const Grid& g);

// I = U(I) \ E(I): the up-closure and the "erased" upset of an interval.
struct IntervalParts {
  UpsetShape U;
  UpsetShape E;                 // minimal generators of U(I) \ I (box-relative)
  std::set<Point> E_points;     // U(I) \ I within the box
};
IntervalParts interval_parts(const IntervalShape& I);

// interval given as upset difference: points of (U \ E) within the box
std::set<Point> upset_difference_points(const UpsetShape& U, const UpsetShape& E, const Grid& g);

}  // namespace pmod
