#include "doctest.h"
#include "pmod/fixtures.hpp"
#include "pmod/subquotient.hpp"

using namespace pmod;

TEST_CASE("subquotient dimensions and coset expression") {
  Grid g = Grid::square(2, 4);
  ModPtr M = random_module(g, 32003, 3);
  Morphism f = random_morphism(M, shift_module(*M, 1), 4);
  Submodule full = full_submodule(M);
  Submodule k = kernel(f);
  k.ambient = M;
  Subquotient q = subquotient(full, k);
  for (long long i = 0; i < g.npoints(); ++i) {
    CHECK(q.quotient->dim[i] == M->dim[i] - k.basis[i].cols);
    // reps followed by express is the identity on the quotient
    if (q.quotient->dim[i]) {
      Matrix round = q.express(i, q.reps[i]);
      CHECK(round.is_identity());
    }
  }
  q.quotient->check_commutativity();
}

TEST_CASE("nested submodules are required") {
  Grid g = Grid::square(2, 3);
  ModPtr M = random_module(g, 5, 8);
  Morphism f = random_morphism(M, shift_module(*M, 1), 9);
  Submodule k = kernel(f);
  k.ambient = M;
  Submodule im = image(random_morphism(random_module(g, 5, 10), M, 11));
  im.ambient = M;
  if (!sub_contains(k, im)) CHECK_THROWS_AS(subquotient(im, k), NotNested);
}

TEST_CASE("quotient by zero is the whole module") {
  Grid g = Grid::square(2, 3);
  ModPtr M = random_module(g, 5, 12);
  Subquotient q = subquotient(full_submodule(M), zero_submodule(M));
  CHECK(q.quotient->dim == M->dim);
}
