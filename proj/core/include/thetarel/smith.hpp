#pragma once

#include <vector>

#include "thetarel/rational.hpp"

namespace thetarel {

// D == U * A * V with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::vector<BigInt> invariants;  // the diagonal of d, min(rows, cols) entries
};

// Pivot choice: smallest nonzero absolute value, ties broken by row-major position.
SmithForm smithNormalForm(const IntMatrix& a);

BigInt integerDeterminant(const IntMatrix& a);

}  // namespace thetarel
