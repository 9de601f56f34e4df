#include "pmod/matrix.hpp"

#include <algorithm>

namespace pmod {

bool is_prime(u32 p) {
  if (p < 2) return false;
  for (u64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(u32 p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
}

u32 finv(u32 a, u32 p) {
  if (a == 0) throw std::domain_error("inverse of 0");
  // extended euclid
  long long t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    long long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (t < 0) t += p;
  return (u32)t;
}

Matrix Matrix::identity(int n, u32 p) {
  Matrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from(int r, int c, u32 p, std::initializer_list<long long> vals) {
  Matrix m(r, c, p);
  if ((int)vals.size() != r * c) throw std::invalid_argument("Matrix::from size mismatch");
  int i = 0;
  for (long long v : vals) m.a[i++] = fof(v, p);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](u32 x) { return x == 0; });
}

bool Matrix::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols != o.rows || p != o.p) throw std::invalid_argument("matmul shape/field mismatch");
  Matrix r(rows, o.cols, p);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      u32 v = at(i, k);
      if (!v) continue;
      const u32* orow = &o.a[(size_t)k * o.cols];
      u32* rrow = &r.a[(size_t)i * o.cols];
      for (int j = 0; j < o.cols; ++j) rrow[j] = (u32)(((u64)v * orow[j] + rrow[j]) % p);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols || p != o.p) throw std::invalid_argument("matadd mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = fadd(a[i], o.a[i], p);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols || p != o.p) throw std::invalid_argument("matsub mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = fsub(a[i], o.a[i], p);
  return r;
}

Matrix Matrix::scaled(u32 c) const {
  Matrix r = *this;
  for (auto& x : r.a) x = fmul(x, c, p);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols, rows, p);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::col(int j) const { return cols_slice(j, j + 1); }

Matrix Matrix::cols_slice(int j0, int j1) const {
  Matrix r(rows, j1 - j0, p);
  for (int i = 0; i < rows; ++i)
    for (int j = j0; j < j1; ++j) r.at(i, j - j0) = at(i, j);
  return r;
}

Matrix Matrix::rows_slice(int i0, int i1) const {
  Matrix r(i1 - i0, cols, p);
  for (int i = i0; i < i1; ++i)
    for (int j = 0; j < cols; ++j) r.at(i - i0, j) = at(i, j);
  return r;
}

Matrix hstack(const Matrix& A, const Matrix& B) {
  if (A.rows != B.rows || A.p != B.p) throw std::invalid_argument("hstack mismatch");
  Matrix r(A.rows, A.cols + B.cols, A.p);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) r.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols; ++j) r.at(i, A.cols + j) = B.at(i, j);
  }
  return r;
}

Matrix vstack(const Matrix& A, const Matrix& B) {
  if (A.cols != B.cols || A.p != B.p) throw std::invalid_argument("vstack mismatch");
  Matrix r(A.rows + B.rows, A.cols, A.p);
  std::copy(A.a.begin(), A.a.end(), r.a.begin());
  std::copy(B.a.begin(), B.a.end(), r.a.begin() + A.a.size());
  return r;
}

Matrix block_diag(const Matrix& A, const Matrix& B) {
  if (A.p != B.p) throw std::invalid_argument("block_diag field mismatch");
  Matrix r(A.rows + B.rows, A.cols + B.cols, A.p);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) r.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < B.cols; ++j) r.at(A.rows + i, A.cols + j) = B.at(i, j);
  return r;
}

Rref rref(const Matrix& A) {
  Rref out{A, {}};
  Matrix& m = out.R;
  const u32 p = m.p;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    u32 inv = finv(m.at(r, c), p);
    for (int j = c; j < m.cols; ++j) m.at(r, j) = fmul(m.at(r, j), inv, p);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      u32 f = m.at(i, c);
      if (!f) continue;
      for (int j = c; j < m.cols; ++j) m.at(i, j) = fsub(m.at(i, j), fmul(f, m.at(r, j), p), p);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

int rank(const Matrix& A) { return (int)rref(A).pivots.size(); }

static Matrix nullspace_from_rref(const Rref& rr, int ncols, const std::vector<int>& free_order) {
  const Matrix& R = rr.R;
  Matrix N(ncols, (int)free_order.size(), R.p);
  for (int k = 0; k < (int)free_order.size(); ++k) {
    int fc = free_order[k];
    N.at(fc, k) = 1;
    for (int pr = 0; pr < (int)rr.pivots.size(); ++pr) {
      u32 v = R.at(pr, fc);
      if (v) N.at(rr.pivots[pr], k) = fneg(v, R.p);
    }
  }
  return N;
}

Matrix nullspace(const Matrix& A) {
  Rref rr = rref(A);
  std::vector<bool> isp(A.cols, false);
  for (int c : rr.pivots) isp[c] = true;
  std::vector<int> free_order;
  for (int c = 0; c < A.cols; ++c)
    if (!isp[c]) free_order.push_back(c);
  return nullspace_from_rref(rr, A.cols, free_order);
}

Matrix nullspace_split(const Matrix& A, int split, bool& pivot_at_or_after_split) {
  Rref rr = rref(A);
  pivot_at_or_after_split = false;
  for (int c : rr.pivots)
    if (c >= split) pivot_at_or_after_split = true;
  std::vector<bool> isp(A.cols, false);
  for (int c : rr.pivots) isp[c] = true;
  std::vector<int> free_order;
  for (int c = split; c < A.cols; ++c)
    if (!isp[c]) free_order.push_back(c);
  for (int c = 0; c < split; ++c)
    if (!isp[c]) free_order.push_back(c);
  return nullspace_from_rref(rr, A.cols, free_order);
}

std::optional<Matrix> solve(const Matrix& A, const Matrix& b) {
  auto X = solve_all(A, b);
  return X;
}

std::optional<Matrix> solve_all(const Matrix& A, const Matrix& B) {
  if (A.rows != B.rows) throw std::invalid_argument("solve shape mismatch");
  Rref rr = rref(hstack(A, B));
  // inconsistent if any pivot lies in the B block
  for (int c : rr.pivots)
    if (c >= A.cols) return std::nullopt;
  Matrix X(A.cols, B.cols, A.p);
  for (int pr = 0; pr < (int)rr.pivots.size(); ++pr)
    for (int j = 0; j < B.cols; ++j) X.at(rr.pivots[pr], j) = rr.R.at(pr, A.cols + j);
  return X;
}

Matrix colspan(const Matrix& A) {
  Rref rr = rref(A.transpose());
  Matrix out(A.rows, (int)rr.pivots.size(), A.p);
  for (int i = 0; i < out.cols; ++i)
    for (int j = 0; j < A.rows; ++j) out.at(j, i) = rr.R.at(i, j);
  return out;
}

Matrix span_sum(const Matrix& U, const Matrix& V) { return colspan(hstack(U, V)); }

Matrix span_intersect(const Matrix& U, const Matrix& V) {
  if (U.cols == 0 || V.cols == 0) return Matrix(U.rows, 0, U.p);
  Matrix N = nullspace(hstack(U, V));
  Matrix X = N.rows_slice(0, U.cols);
  return colspan(U * X);
}

Matrix preimage(const Matrix& A, const Matrix& W) {
  if (W.cols == 0) return colspan(nullspace(A));
  Matrix N = nullspace(hstack(A, W));
  return colspan(N.rows_slice(0, A.cols));
}

bool span_contains(const Matrix& U, const Matrix& V) {
  if (V.cols == 0) return true;
  return rank(hstack(U, V)) == rank(U);
}

bool in_span(const Matrix& U, const Matrix& v) { return span_contains(U, v); }

bool invertible(const Matrix& A) { return A.rows == A.cols && rank(A) == A.rows; }

Matrix inverse(const Matrix& A) {
  if (A.rows != A.cols) throw std::invalid_argument("inverse of non-square");
  auto X = solve_all(A, Matrix::identity(A.rows, A.p));
  if (!X) throw std::domain_error("matrix not invertible");
  return *X;
}

}  // namespace pmod
