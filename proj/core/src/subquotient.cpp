#include "pmod/subquotient.hpp"

namespace pmod {

Matrix Subquotient::express(long long idx, const Matrix& vecs) const {
  const Matrix& B2 = M2.basis[idx];
  const Matrix& R = reps[idx];
  auto X = solve_all(hstack(B2, R), vecs);
  if (!X) throw std::runtime_error("Subquotient::express: vector outside M1");
  return X->rows_slice(B2.cols, B2.cols + R.cols);
}

Subquotient subquotient(const Submodule& M1, const Submodule& M2) {
  if (!sub_contains(M1, M2)) throw NotNested("subquotient: M2 is not contained in M1");
  const Module& M = *M1.ambient;
  Subquotient out;
  out.ambient = M1.ambient;
  out.M1 = M1;
  out.M2 = M2;
  out.reps.resize(M.npoints());
  Module Q(M.grid, M.p);
  for (long long i = 0; i < M.npoints(); ++i) {
    const Matrix& B2 = M2.basis[i];
    const Matrix& B1 = M1.basis[i];
    // pick columns of B1 completing a basis of span(B1) over span(B2)
    Rref rr = rref(hstack(B2, B1));
    Matrix R(M.dim[i], 0, M.p);
    for (int c : rr.pivots)
      if (c >= B2.cols) R = hstack(R, B1.col(c - B2.cols));
    out.reps[i] = R;
    Q.dim[i] = R.cols;
  }
  Q.init_edges();
  for (int ax = 0; ax < M.d(); ++ax)
    for (long long i = 0; i < M.npoints(); ++i) {
      Point q = M.grid.point(i);
      Point r = q;
      ++r[ax];
      if (!M.grid.inside(r)) continue;
      long long j = M.grid.index(r);
      Q.edge[ax][i] = out.express(j, M.edge[ax][i] * out.reps[i]);
    }
  out.quotient = mk(std::move(Q));
  return out;
}

}  // namespace pmod
