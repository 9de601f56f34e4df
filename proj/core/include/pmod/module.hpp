#pragma once
// Persistence modules on a finite grid: pointwise spaces + commuting edge maps,
// morphisms (natural transformations), submodules, shifts and transitions.
//
// Convention: a module represents a bounded-support module that is genuinely
// zero outside the box. Downward shifts M(eps), eps >= 0, are always faithful
// for morphism-level computations; upward shifts raise MarginTooSmall when
// nonzero support would be pushed out of the box.

#include <memory>

#include "pmod/grid.hpp"
#include "pmod/matrix.hpp"

namespace pmod {

struct Module;
using ModPtr = std::shared_ptr<const Module>;

struct Module {
  Grid grid;
  u32 p = kDefaultP;
  std::vector<int> dim;                   // per point index
  std::vector<std::vector<Matrix>> edge;  // edge[axis][idx] : M_idx -> M_{idx+e_axis}

  Module() = default;
  Module(Grid g, u32 p_);

  int d() const { return grid.d(); }
  long long npoints() const { return grid.npoints(); }
  int dim_at(const Point& q) const { return grid.inside(q) ? dim[grid.index(q)] : 0; }
  int supdim() const;
  long long total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  // edge map out of point idx along axis (target may be outside: 0 x dim)
  const Matrix& edge_at(int axis, long long idx) const { return edge[axis][idx]; }
  Matrix& edge_mut(int axis, long long idx) { return edge[axis][idx]; }

  // (re)allocate zero edge matrices consistent with dim
  void init_edges();
  void check_commutativity() const;  // throws std::runtime_error with the offending square
  bool operator==(const Module& o) const {
    return grid == o.grid && p == o.p && dim == o.dim && edge == o.edge;
  }
};

ModPtr mk(Module&& m);

// composite transition M_a -> M_b for a <= b componentwise; zero-dimensional
// domain/codomain when a or b leaves the box.
Matrix path_map(const Module& M, const Point& a, const Point& b);
// diagonal: M_q -> M_{q + s*1}
Matrix diag_path(const Module& M, const Point& q, int s);

// M(eps)_q = M_{q+eps*1}. eps < 0 raises MarginTooSmall if support escapes.
ModPtr shift_module(const Module& M, int eps);

struct Morphism {
  ModPtr src, dst;
  std::vector<Matrix> comp;  // per point index, dim_dst(q) x dim_src(q)

  Morphism() = default;
  Morphism(ModPtr s, ModPtr t);
  bool is_natural() const;
  Matrix& at(long long idx) { return comp[idx]; }
  const Matrix& at(long long idx) const { return comp[idx]; }
};

Morphism identity_morphism(ModPtr M);
Morphism zero_morphism(ModPtr src, ModPtr dst);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism madd(const Morphism& f, const Morphism& g);
Morphism msub(const Morphism& f, const Morphism& g);
Morphism mscale(const Morphism& f, u32 c);
// f(s): components at q are f_{q+s*1}; shifts both endpoints.
Morphism shift_morphism(const Morphism& f, int s);
// transition M(a) -> M(b), a <= b
Morphism transition(const Module& M, int a, int b);

// basis of Hom(M, N): deterministic incremental propagation (see hom.cpp)
std::vector<Morphism> hom_basis(const Module& M, const Module& N);
// oracle: same space via one global naturality nullspace (small inputs only)
std::vector<Morphism> hom_basis_bruteforce(const Module& M, const Module& N);

// ---- submodules ------------------------------------------------------------

struct Submodule {
  ModPtr ambient;
  std::vector<Matrix> basis;  // per point: dim(q) x k(q), canonical column form

  int dim_at(long long idx) const { return basis[idx].cols; }
  long long total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
};

Submodule full_submodule(ModPtr M);
Submodule zero_submodule(ModPtr M);
Submodule canonicalized(Submodule s);
bool sub_equal(const Submodule& a, const Submodule& b);
bool sub_contains(const Submodule& big, const Submodule& small);
Submodule sub_sum(const Submodule& a, const Submodule& b);
Submodule sub_intersect(const Submodule& a, const Submodule& b);
bool sub_is_closed(const Submodule& s);  // edges carry basis into span at next point

Submodule image(const Morphism& f);                       // submodule of dst
Submodule kernel(const Morphism& f);                      // submodule of src
Submodule sub_image(const Morphism& f, const Submodule& s);
Submodule sub_preimage(const Morphism& f, const Submodule& t);
// image of submodule s under the diagonal transition M -> M(steps)
Submodule sub_push(const Submodule& s, int steps);

// realize a submodule as a module; incl: result -> ambient
struct SubmoduleModule {
  ModPtr mod;
  Morphism incl;
};
SubmoduleModule module_from_submodule(const Submodule& s);

// ---- sums and building blocks ----------------------------------------------

struct DirectSum {
  ModPtr mod;
  std::vector<Morphism> incl;  // part_i -> mod
  std::vector<Morphism> proj;  // mod -> part_i
};
DirectSum direct_sum(const std::vector<ModPtr>& parts, const Grid& g, u32 p);

// indicator module of a support set (all internal edges identity)
ModPtr indicator_module(const Grid& g, u32 p, const std::set<Point>& support);
// 1-parameter interval [a, b) on a 1-d grid
ModPtr bar_module(const Grid& g, u32 p, int a, int b);

// apply a random-looking invertible base change at every point (iso image)
ModPtr base_change(const Module& M, u64 seed);

}  // namespace pmod
