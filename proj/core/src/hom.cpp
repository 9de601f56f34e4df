#include "pmod/module.hpp"

namespace pmod {

// Basis of Hom(M, N) by incremental propagation over a linear extension of the
// grid (index order). We keep a global parameter vector t of current length k;
// for each processed point we store F[i] with vec(f_i) = F[i] * t, where F[i]
// is implicitly zero-padded on the right to width k. Appending parameters is
// free; only constraints that bind existing parameters force a global update.
std::vector<Morphism> hom_basis(const Module& M, const Module& N) {
  if (!(M.grid == N.grid) || M.p != N.p) throw std::invalid_argument("hom on mismatched modules");
  const Grid& g = M.grid;
  const u32 p = M.p;
  const long long P = g.npoints();
  int k = 0;
  std::vector<Matrix> F(P);

  for (long long idx = 0; idx < P; ++idx) {
    Point q = g.point(idx);
    const int m = M.dim[idx], n2 = N.dim[idx];
    const int u = n2 * m;

    // gather incoming edges (predecessors are earlier in index order)
    struct In {
      long long pr;
      int ax;
    };
    std::vector<In> ins;
    int nrows = 0;
    for (int ax = 0; ax < g.d(); ++ax) {
      if (q[ax] == 0) continue;
      Point r = q;
      --r[ax];
      long long pr = g.index(r);
      int rcnt = n2 * M.dim[pr];
      if (rcnt > 0) ins.push_back({pr, ax});
      nrows += rcnt;
    }

    if (nrows == 0) {
      // all of f_q is free: append u new parameters
      Matrix Fq(u, k + u, p);
      for (int i = 0; i < u; ++i) Fq.at(i, k + i) = 1;
      F[idx] = std::move(Fq);
      k += u;
      continue;
    }

    Matrix C(nrows, u + k, p);
    int r0 = 0;
    for (const auto& in : ins) {
      const int m_pr = M.dim[in.pr], n_pr = N.dim[in.pr];
      const Matrix& Me = M.edge[in.ax][in.pr];  // m x m_pr
      const Matrix& Ne = N.edge[in.ax][in.pr];  // n2 x n_pr
      const Matrix& Fpr = F[in.pr];             // (n_pr*m_pr) x w_pr
      const int w_pr = Fpr.cols;
      for (int a2 = 0; a2 < n2; ++a2)
        for (int b = 0; b < m_pr; ++b) {
          const int r = r0 + a2 * m_pr + b;
          for (int c = 0; c < m; ++c)
            C.at(r, a2 * m + c) = fadd(C.at(r, a2 * m + c), Me.at(c, b), p);
          for (int c2 = 0; c2 < n_pr; ++c2) {
            u32 v = Ne.at(a2, c2);
            if (!v) continue;
            const u32* frow = &Fpr.a[(size_t)(c2 * m_pr + b) * w_pr];
            for (int j = 0; j < w_pr; ++j) {
              if (!frow[j]) continue;
              C.at(r, u + j) = fsub(C.at(r, u + j), fmul(v, frow[j], p), p);
            }
          }
        }
      r0 += n2 * m_pr;
    }

    bool binds_params = false;
    Matrix Z = nullspace_split(C, u, binds_params);
    const int knew = Z.cols;
    if (binds_params) {
      // genuine re-parameterization: t_old = T * t_new
      Matrix T = Z.rows_slice(u, u + k);
      for (long long i = 0; i < idx; ++i) {
        if (F[i].rows == 0) {
          F[i] = Matrix(0, knew, p);
          continue;
        }
        if (F[i].cols < k) F[i] = hstack(F[i], Matrix(F[i].rows, k - F[i].cols, p));
        F[i] = F[i] * T;
      }
    }
    F[idx] = Z.rows_slice(0, u);
    k = knew;
  }

  // extract the basis
  ModPtr Mp = std::make_shared<Module>(M);
  ModPtr Np = std::make_shared<Module>(N);
  std::vector<Morphism> out;
  out.reserve(k);
  for (int j = 0; j < k; ++j) {
    Morphism f(Mp, Np);
    for (long long i = 0; i < P; ++i) {
      const int m = M.dim[i], n2 = N.dim[i];
      const Matrix& Fi = F[i];
      if (j >= Fi.cols) continue;  // implicit zero padding
      for (int a2 = 0; a2 < n2; ++a2)
        for (int c = 0; c < m; ++c) f.comp[i].at(a2, c) = Fi.at(a2 * m + c, j);
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace pmod
