#include "doctest.h"
#include "pmod/matrix.hpp"
#include "pmod/rng.hpp"

using namespace pmod;

namespace {

Matrix random_matrix(int r, int c, u32 p, Rng& rng) {
  Matrix m(r, c, p);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rng.field_elem(p);
  return m;
}

}  // namespace

TEST_CASE("field arithmetic") {
  CHECK(is_prime(2));
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
  CHECK(fmul(finv(17, 32003), 17, 32003) == 1);
  CHECK(fof(-1, 7) == 6);
}

TEST_CASE("rref ranks and nullspace annihilation") {
  Rng rng(7);
  for (u32 p : {2u, 3u, 32003u}) {
    for (int t = 0; t < 20; ++t) {
      Matrix A = random_matrix(3 + (int)rng.below(4), 3 + (int)rng.below(4), p, rng);
      Matrix N = nullspace(A);
      CHECK(rank(A) + N.cols == A.cols);
      CHECK((A * N).is_zero());
    }
  }
}

TEST_CASE("solve produces solutions; inconsistent systems rejected") {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    Matrix A = random_matrix(4, 3, 32003, rng);
    Matrix x = random_matrix(3, 1, 32003, rng);
    Matrix b = A * x;
    auto s = solve(A, b);
    REQUIRE(s.has_value());
    CHECK(A * *s == b);
  }
  Matrix A = Matrix::from(2, 1, 5, {1, 1});
  Matrix b = Matrix::from(2, 1, 5, {1, 2});
  CHECK_FALSE(solve(A, b).has_value());
}

TEST_CASE("span operations are canonical and consistent") {
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    Matrix U = random_matrix(5, 2, 3, rng);
    Matrix V = random_matrix(5, 3, 3, rng);
    Matrix s = span_sum(U, V);
    Matrix i = span_intersect(U, V);
    CHECK(span_contains(s, U));
    CHECK(span_contains(s, V));
    CHECK(span_contains(colspan(U), i));
    CHECK(span_contains(colspan(V), i));
    CHECK(rank(s) + rank(i) == rank(colspan(U)) + rank(colspan(V)));
    // canonical form is idempotent
    CHECK(colspan(s) == s);
    CHECK(colspan(i) == i);
  }
}

TEST_CASE("preimage characterizes membership") {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    Matrix A = random_matrix(4, 4, 5, rng);
    Matrix W = random_matrix(4, 2, 5, rng);
    Matrix P = preimage(A, W);
    CHECK(span_contains(colspan(W), colspan(A * P)));
    // every standard vector outside P must map outside span W
    for (int j = 0; j < 4; ++j) {
      Matrix e(4, 1, 5);
      e.at(j, 0) = 1;
      if (!in_span(P, e)) CHECK_FALSE(in_span(colspan(W), A * e));
    }
  }
}

TEST_CASE("inverse round trips") {
  Rng rng(19);
  for (int t = 0; t < 10; ++t) {
    Matrix A = random_matrix(4, 4, 32003, rng);
    if (!invertible(A)) continue;
    CHECK((A * inverse(A)).is_identity());
  }
}
