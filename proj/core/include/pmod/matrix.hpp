#pragma once
// Dense exact linear algebra over a prime field GF(p).
// Row-major matrices; 0xN / Nx0 matrices are valid (maps to/from the zero space).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pmod {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

constexpr u32 kDefaultP = 32003;

bool is_prime(u32 p);
void require_prime(u32 p);

inline u32 fadd(u32 a, u32 b, u32 p) { u32 s = a + b; return s >= p ? s - p : s; }
inline u32 fsub(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
inline u32 fmul(u32 a, u32 b, u32 p) { return u32((u64)a * b % p); }
inline u32 fneg(u32 a, u32 p) { return a == 0 ? 0 : p - a; }
u32 finv(u32 a, u32 p);
// reduce a signed integer into [0, p)
inline u32 fof(long long v, u32 p) { long long r = v % (long long)p; if (r < 0) r += p; return (u32)r; }

struct Matrix {
  int rows = 0, cols = 0;
  u32 p = kDefaultP;
  std::vector<u32> a;  // row-major

  Matrix() = default;
  Matrix(int r, int c, u32 p_) : rows(r), cols(c), p(p_), a((size_t)r * c, 0) {}

  u32& at(int i, int j) { return a[(size_t)i * cols + j]; }
  u32 at(int i, int j) const { return a[(size_t)i * cols + j]; }

  static Matrix identity(int n, u32 p);
  static Matrix from(int r, int c, u32 p, std::initializer_list<long long> vals);

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && p == o.p && a == o.a; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(u32 c) const;
  Matrix transpose() const;
  Matrix col(int j) const;
  Matrix cols_slice(int j0, int j1) const;   // columns [j0, j1)
  Matrix rows_slice(int i0, int i1) const;   // rows [i0, i1)
};

Matrix hstack(const Matrix& A, const Matrix& B);
Matrix vstack(const Matrix& A, const Matrix& B);
Matrix block_diag(const Matrix& A, const Matrix& B);

struct Rref {
  Matrix R;
  std::vector<int> pivots;  // pivot column per pivot row
};

// Reduced row echelon form; pivots are leftmost.
Rref rref(const Matrix& A);
int rank(const Matrix& A);

// Basis of ker A as columns. Deterministic: one basis vector per free column, in
// a caller-chosen order of free columns; default is increasing column order, with
// the free column's entry set to 1.
Matrix nullspace(const Matrix& A);
// Same, but emit basis vectors for free columns >= split first (in increasing
// order), then free columns < split. Used by the Hom propagation.
Matrix nullspace_split(const Matrix& A, int split, bool& pivot_at_or_after_split);

// One particular solution x of A x = b (free variables zero), or nullopt.
std::optional<Matrix> solve(const Matrix& A, const Matrix& b);
// Columnwise: solve A X = B; nullopt if any column inconsistent.
std::optional<Matrix> solve_all(const Matrix& A, const Matrix& B);

// Canonical basis of the column span (unique reduced column echelon form).
Matrix colspan(const Matrix& A);
// span(U) + span(V), canonical.
Matrix span_sum(const Matrix& U, const Matrix& V);
// span(U) ∩ span(V), canonical.
Matrix span_intersect(const Matrix& U, const Matrix& V);
// basis of {x : A x ∈ span W}, canonical.
Matrix preimage(const Matrix& A, const Matrix& W);
// span(V) ⊆ span(U)?
bool span_contains(const Matrix& U, const Matrix& V);
bool in_span(const Matrix& U, const Matrix& v);

bool invertible(const Matrix& A);
Matrix inverse(const Matrix& A);  // throws if singular

}  // namespace pmod
