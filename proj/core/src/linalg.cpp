#include "thetarel/linalg.hpp"

namespace thetarel {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, unsigned order)
    : rows_(rows), cols_(cols), order_(order), data_(rows * cols, Cyclotomic(order)) {}

ExactMatrix::ExactMatrix(const std::vector<std::vector<Cyclotomic>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()), order_(1) {
  for (const auto& r : rows) {
    if (r.size() != cols_) throw StructuralError("ragged matrix");
    for (const auto& x : r) order_ = lcmOrder(order_, x.order());
  }
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows)
    for (const auto& x : r) data_.push_back(x.liftTo(order_));
}

std::vector<Cyclotomic> ExactMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_)};
}

namespace {

// Reduced row echelon form in place; returns pivot columns. Among candidate pivots the
// cheapest entry (by bit size) is chosen to slow coefficient growth.
std::vector<std::size_t> rref(std::vector<std::vector<Cyclotomic>>& m, std::size_t cols, std::size_t pivotCols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivotCols && r < m.size(); ++c) {
    std::size_t best = m.size();
    std::size_t bestSize = 0;
    for (std::size_t i = r; i < m.size(); ++i) {
      if (m[i][c].isZero()) continue;
      std::size_t sz = m[i][c].bitSize();
      if (best == m.size() || sz < bestSize) {
        best = i;
        bestSize = sz;
      }
    }
    if (best == m.size()) continue;
    std::swap(m[r], m[best]);
    Cyclotomic inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m[r][j].isZero()) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].isZero()) continue;
      Cyclotomic f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].isZero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t matrixRank(const ExactMatrix& a) {
  std::vector<std::vector<Cyclotomic>> m;
  for (std::size_t i = 0; i < a.rows(); ++i) m.push_back(a.row(i));
  return rref(m, a.cols(), a.cols()).size();
}

std::optional<std::vector<Cyclotomic>> solveLeft(const ExactMatrix& a, const std::vector<Cyclotomic>& b) {
  if (b.size() != a.cols()) throw StructuralError("solveLeft: right-hand side length mismatch");
  unsigned order = a.order();
  for (const auto& x : b) order = lcmOrder(order, x.order());
  // x*A = b  <=>  A^T x^T = b^T; augmented system has a.cols() equations in a.rows() unknowns
  const std::size_t n = a.rows();
  std::vector<std::vector<Cyclotomic>> m(a.cols(), std::vector<Cyclotomic>(n + 1, Cyclotomic(order)));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < n; ++i) m[j][i] = a(i, j).liftTo(order);
    m[j][n] = b[j].liftTo(order);
  }
  auto pivots = rref(m, n + 1, n);
  for (std::size_t r = pivots.size(); r < m.size(); ++r)
    if (!m[r][n].isZero()) return std::nullopt;
  std::vector<Cyclotomic> x(n, Cyclotomic(order));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][n];
  return x;
}

bool IntegerEchelonBasis::add(std::vector<BigInt> row) {
  if (row.size() != cols_) throw StructuralError("row length mismatch in echelon basis");
  BigInt g;
  for (std::size_t b = 0; b < rows_.size(); ++b) {
    const std::size_t pc = pivots_[b];
    if (row[pc] == 0) continue;
    const auto& br = rows_[b];
    // row <- (br[pc]/g) * row - (row[pc]/g) * br
    mpz_gcd(g.get_mpz_t(), br[pc].get_mpz_t(), row[pc].get_mpz_t());
    BigInt fa = br[pc] / g;
    BigInt fb = row[pc] / g;
    // the whole row is scaled: entries left of pc need not vanish
    for (std::size_t j = 0; j < cols_; ++j) {
      if (row[j] != 0) row[j] *= fa;
      if (j >= pc && br[j] != 0) row[j] -= fb * br[j];
    }
    g = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (row[j] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
    if (g > 1)
      for (std::size_t j = 0; j < cols_; ++j)
        if (row[j] != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
  }
  std::size_t pc = 0;
  while (pc < cols_ && row[pc] == 0) ++pc;
  if (pc == cols_) return false;
  g = 0;
  for (std::size_t j = pc; j < cols_; ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
  if (g > 1)
    for (std::size_t j = pc; j < cols_; ++j) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < pc) ++pos;
  rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(row));
  pivots_.insert(pivots_.begin() + static_cast<long>(pos), pc);
  return true;
}

}  // namespace thetarel
