#include "thetarel/smith.hpp"

#include "thetarel/errors.hpp"

namespace thetarel {

namespace {

void swapRows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swapCols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row dst -= q * row src
void addRowMultiple(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
}
void addColMultiple(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) -= q * m(i, src);
}

}  // namespace

SmithForm smithNormalForm(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  SmithForm s{a, IntMatrix::identity(rows), IntMatrix::identity(cols), {}};
  IntMatrix& d = s.d;
  const std::size_t k = std::min(rows, cols);
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          if (pi == rows || abs(d(i, j)) < abs(d(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) break;  // remaining block is zero
      swapRows(d, t, pi);
      swapRows(s.u, t, pi);
      swapCols(d, t, pj);
      swapCols(s.v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = d(i, t) / d(t, t);
        addRowMultiple(d, i, t, q);
        addRowMultiple(s.u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = d(t, j) / d(t, t);
        addColMultiple(d, j, t, q);
        addColMultiple(s.v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row t and go again
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            addRowMultiple(d, t, i, -1);
            addRowMultiple(s.u, t, i, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) s.u(t, j) = -s.u(t, j);
    }
  }
  for (std::size_t t = 0; t < k; ++t) s.invariants.push_back(d(t, t));
  return s;
}

BigInt integerDeterminant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw StructuralError("determinant of non-square matrix");
  Rational det = determinant(RationalMatrix(a));
  return det.get_num();
}

}  // namespace thetarel
