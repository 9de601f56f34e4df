#pragma once
// Subquotient presentations M1/M2 (M2 ⊆ M1 ⊆ M) with coset representatives and
// induced quotient modules.

#include "pmod/module.hpp"

namespace pmod {

struct NotNested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Subquotient {
  ModPtr ambient;
  Submodule M1, M2;
  ModPtr quotient;            // the induced module, dim = dim M1 - dim M2
  std::vector<Matrix> reps;   // per point: ambient-coordinate coset representatives

  // coordinates of ambient vectors (columns, must lie in M1) in the quotient
  Matrix express(long long idx, const Matrix& vecs) const;
};

Subquotient subquotient(const Submodule& M1, const Submodule& M2);

}  // namespace pmod
