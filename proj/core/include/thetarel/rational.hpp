#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace thetarel {

using BigInt = mpz_class;
// gmpxx keeps mpq_class canonical after every arithmetic operation.
using Rational = mpq_class;

using IntVector = std::vector<long>;
using RationalVector = std::vector<Rational>;

// Small dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix scaled(const BigInt& f) const;
  bool operator==(const IntMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// Dense rational matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RationalMatrix(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  bool operator==(const RationalMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Inverse of a nonsingular rational matrix by Gauss-Jordan; throws DivisionError if singular.
RationalMatrix inverse(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);

Rational parseRational(std::string_view text);
std::string toString(const Rational& r);
std::string toString(const RationalVector& v);

// Fractional part in [0,1).
Rational fracPart(const Rational& r);
BigInt floorOf(const Rational& r);
bool isIntegral(const Rational& r);

BigInt lcmOfDenominators(const RationalVector& v);

}  // namespace thetarel
