#pragma once

#include <optional>
#include <vector>

#include "thetarel/cyclotomic.hpp"
#include "thetarel/errors.hpp"
#include "thetarel/rational.hpp"

namespace thetarel {

// Dense matrix over Q(zeta_m); every entry shares the same order.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, unsigned order = 1);
  explicit ExactMatrix(const std::vector<std::vector<Cyclotomic>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned order() const { return order_; }
  Cyclotomic& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<Cyclotomic> row(std::size_t i) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  unsigned order_;
  std::vector<Cyclotomic> data_;
};

std::size_t matrixRank(const ExactMatrix& m);

// Some x with x*A == b, free variables set to zero; nullopt when b is outside the row span.
std::optional<std::vector<Cyclotomic>> solveLeft(const ExactMatrix& a, const std::vector<Cyclotomic>& b);

namespace detail {
inline bool isZeroEntry(const Rational& r) { return r == 0; }
inline bool isZeroEntry(const Cyclotomic& c) { return c.isZero(); }
inline Rational inverseEntry(const Rational& r) {
  if (r == 0) throw DivisionError("division by zero");
  return 1 / r;
}
inline Cyclotomic inverseEntry(const Cyclotomic& c) { return c.inverse(); }
}  // namespace detail

// Incrementally maintained row echelon basis; tells whether a new row raises the rank.
template <class F>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

  std::size_t rank() const { return rows_.size(); }

  // Reduces the row against the basis; returns true and keeps it if a nonzero remainder survives.
  bool add(std::vector<F> row) {
    if (row.size() != cols_) throw StructuralError("row length mismatch in echelon basis");
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      const std::size_t pc = pivots_[b];
      if (detail::isZeroEntry(row[pc])) continue;
      F f = row[pc];
      const auto& br = rows_[b];
      for (std::size_t j = pc; j < cols_; ++j)
        if (!detail::isZeroEntry(br[j])) row[j] -= f * br[j];
    }
    std::size_t pc = 0;
    while (pc < cols_ && detail::isZeroEntry(row[pc])) ++pc;
    if (pc == cols_) return false;
    F inv = detail::inverseEntry(row[pc]);
    for (std::size_t j = pc; j < cols_; ++j) row[j] *= inv;
    // pivots stay sorted: reducing in increasing pivot order never refills an earlier pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pc) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(row));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), pc);
    return true;
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

// Fraction-free variant for integer rows: each stored row is primitive.
class IntegerEchelonBasis {
 public:
  explicit IntegerEchelonBasis(std::size_t cols) : cols_(cols) {}
  std::size_t rank() const { return rows_.size(); }
  bool add(std::vector<BigInt> row);

 private:
  std::size_t cols_;
  std::vector<std::vector<BigInt>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace thetarel
