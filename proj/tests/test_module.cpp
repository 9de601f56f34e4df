#include "doctest.h"
#include "pmod/fixtures.hpp"
#include "pmod/module.hpp"

using namespace pmod;

TEST_CASE("indicator and bar modules") {
  Grid g1(std::vector<int>{10});
  ModPtr bar = bar_module(g1, 5, 2, 7);
  CHECK(bar->total_dim() == 5);
  CHECK(bar->dim_at({2}) == 1);
  CHECK(bar->dim_at({7}) == 0);
  Grid g = Grid::square(2, 4);
  ModPtr ind = indicator_module(g, 5, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  CHECK(ind->total_dim() == 4);
  CHECK(path_map(*ind, {1, 1}, {2, 2}).is_identity());
}

TEST_CASE("path maps compose and respect the box") {
  Grid g = Grid::square(2, 5);
  ModPtr M = random_module(g, 32003, 42);
  Matrix direct = path_map(*M, {0, 0}, {3, 3});
  Matrix via = path_map(*M, {2, 1}, {3, 3}) * path_map(*M, {0, 0}, {2, 1});
  CHECK(direct == via);
  CHECK(path_map(*M, {-1, 0}, {1, 1}).cols == 0);
  CHECK(path_map(*M, {3, 3}, {6, 6}).rows == 0);
}

TEST_CASE("shift module moves support diagonally") {
  Grid g = Grid::square(2, 6);
  ModPtr M = indicator_module(g, 5, rect_support(2, 3, 2, 3));
  ModPtr S = shift_module(*M, 1);
  CHECK(S->dim_at({1, 1}) == 1);
  CHECK(S->dim_at({3, 3}) == 0);
  ModPtr up = shift_module(*M, -2);
  CHECK(up->dim_at({4, 4}) == 1);
  CHECK_THROWS_AS(shift_module(*M, -3), MarginTooSmall);
}

TEST_CASE("hom basis agrees with the brute-force oracle") {
  Grid g = Grid::square(2, 3);
  for (u64 seed = 1; seed <= 8; ++seed) {
    ModPtr M = random_module(g, 3, seed, 2);
    ModPtr N = random_module(g, 3, seed + 100, 2);
    auto fast = hom_basis(*M, *N);
    auto slow = hom_basis_bruteforce(*M, *N);
    CHECK(fast.size() == slow.size());
    for (const auto& f : fast) CHECK(f.is_natural());
  }
}

TEST_CASE("morphism algebra") {
  Grid g = Grid::square(2, 4);
  ModPtr M = random_module(g, 32003, 5);
  Morphism id = identity_morphism(M);
  Morphism z = zero_morphism(M, M);
  CHECK(compose(id, id).comp == id.comp);
  CHECK(madd(id, msub(z, id)).comp == z.comp);
  CHECK(mscale(id, 3).comp == madd(id, madd(id, id)).comp);
}

TEST_CASE("submodule operations") {
  Grid g = Grid::square(2, 4);
  ModPtr M = random_module(g, 32003, 9);
  Submodule full = full_submodule(M);
  Submodule zero = zero_submodule(M);
  CHECK(sub_contains(full, zero));
  CHECK(sub_is_closed(full));
  CHECK(sub_is_closed(zero));
  Morphism f = random_morphism(M, shift_module(*M, 1), 10);
  Submodule k = kernel(f);
  Submodule im = image(f);
  CHECK(sub_is_closed(k));
  CHECK(sub_is_closed(im));
  for (long long i = 0; i < g.npoints(); ++i) {
    Point q = g.point(i);
    Point r = shifted(q, 1);
    int imdim = g.inside(r) ? rank(f.comp[i]) : 0;
    CHECK(k.basis[i].cols + imdim == M->dim[i]);
  }
}

TEST_CASE("direct sum inclusions and projections") {
  Grid g = Grid::square(2, 4);
  ModPtr A = random_module(g, 5, 21, 1);
  ModPtr B = random_module(g, 5, 22, 1);
  DirectSum D = direct_sum({A, B}, g, 5);
  CHECK(D.mod->total_dim() == A->total_dim() + B->total_dim());
  CHECK(compose(D.proj[0], D.incl[0]).comp == identity_morphism(A).comp);
  CHECK(compose(D.proj[1], D.incl[0]).comp == zero_morphism(A, B).comp);
  CHECK(D.incl[0].is_natural());
  CHECK(D.proj[1].is_natural());
}

TEST_CASE("base change preserves the isomorphism type pointwise") {
  Grid g = Grid::square(2, 4);
  ModPtr M = random_module(g, 32003, 33);
  ModPtr N = base_change(*M, 99);
  CHECK(M->dim == N->dim);
  N->check_commutativity();
}
