#pragma once

#include <map>
#include <string>
#include <vector>

#include "thetarel/rational.hpp"

namespace thetarel {

struct MultiIndex {
  std::vector<int> e;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> comps);
  static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<int>(n, 0)); }

  std::size_t size() const { return e.size(); }
  int sum() const;
  // p' precedes p: componentwise <= with sums of equal parity
  bool precedes(const MultiIndex& p) const;
  std::string toString() const;

  // graded lexicographic: total degree first, then componentwise
  friend bool operator<(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e == b.e; }
};

std::vector<MultiIndex> hatClosure(const std::vector<MultiIndex>& set);

// All nonzero multi-indices of length n with total degree <= maxSum, in graded lex order.
std::vector<MultiIndex> multiIndicesUpTo(std::size_t n, int maxSum);

// Half-integers stored as twice their value.
class HalfInteger {
 public:
  static HalfInteger fromTwice(long twice) { return HalfInteger(twice); }
  static HalfInteger fromInteger(long v) { return HalfInteger(2 * v); }
  long twice() const { return twice_; }
  Rational value() const;
  bool isNonPositiveInteger() const { return twice_ <= 0 && twice_ % 2 == 0; }
  std::string toString() const;
  friend bool operator==(HalfInteger a, HalfInteger b) { return a.twice_ == b.twice_; }

 private:
  explicit HalfInteger(long t) : twice_(t) {}
  long twice_;
};

// Gamma(k + a) / Gamma(k + b) as a finite product; DivisionError if a zero lands in the denominator.
Rational gammaRatio(HalfInteger k, long a, long b);

// Sparse polynomial in a fixed number of variables with rational coefficients.
class Polynomial {
 public:
  using Exponent = std::vector<int>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;

  void addTerm(const Exponent& e, const Rational& c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
  Polynomial pow(int e) const;

  Rational evaluate(const RationalVector& x) const;
  int totalDegree() const;
  // Variables print as X0, X1, ...; the first is the q-exponent slot in P polynomials.
  std::string toString() const;

 private:
  std::size_t nvars_;
  std::map<Exponent, Rational> terms_;
};

// P_{k,p,M} via the quadratic-power formula; variables (X0, X1..Xn).
Polynomial pkpm(HalfInteger k, const MultiIndex& p, const RationalMatrix& m);

// Same polynomial from the defining multi-sum over matrices Lambda and Omega; used as an oracle.
Polynomial pkpmDefinition(HalfInteger k, const MultiIndex& p, const RationalMatrix& m);

// Evaluates P(n, t) with t = y / e for integer y, using integer arithmetic throughout.
// P must be weighted homogeneous of degree s (X0 has weight 2), which pkpm output is.
class ScaledEvaluator {
 public:
  ScaledEvaluator(const Polynomial& p, int weightedDegree);
  // P(n, y/e)
  Rational operator()(const BigInt& n, const std::vector<BigInt>& y, const BigInt& e) const;

 private:
  int degree_;
  BigInt den_;
  std::vector<std::pair<std::vector<int>, BigInt>> terms_;
};

}  // namespace thetarel
