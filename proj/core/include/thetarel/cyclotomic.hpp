#pragma once

#include <memory>
#include <string>
#include <vector>

#include "thetarel/rational.hpp"

namespace thetarel {

// Phi_m as an integer coefficient list, constant term first.
std::vector<BigInt> cyclotomicPolynomial(unsigned m);
unsigned eulerPhi(unsigned m);

namespace detail {
struct CyclotomicField;
}

// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
class Cyclotomic {
 public:
  Cyclotomic();  // zero of Q
  explicit Cyclotomic(unsigned order);
  Cyclotomic(unsigned order, const Rational& value);
  Cyclotomic(unsigned order, std::vector<Rational> coeffs);

  static Cyclotomic rootOfUnity(unsigned order, long exponent);

  unsigned order() const;
  unsigned degree() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool isZero() const;
  bool isRational() const;
  // Constant coefficient; meaningful as a value only when isRational().
  const Rational& constantTerm() const { return coeffs_[0]; }

  // Image under zeta_m -> zeta_L^{L/m}; L must be a multiple of order().
  Cyclotomic liftTo(unsigned largerOrder) const;

  Cyclotomic inverse() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic& operator/=(const Cyclotomic& o);

  // Adds r * zeta^e in place, e taken mod order.
  void addRootMultiple(const Rational& r, long e);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  // Same-order comparison is coefficientwise; mixed orders compare after lifting to the lcm.
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  // Rough cost of an entry, used for pivot selection.
  std::size_t bitSize() const;

  // "0", "3/2", "1 + 2*z - z^2" with z = zeta_m.
  std::string toString() const;

 private:
  void bringToCommonOrder(const Cyclotomic& o, const char* op);
  std::shared_ptr<const detail::CyclotomicField> field_;
  std::vector<Rational> coeffs_;
};

// Strict arithmetic: orders must agree exactly, otherwise StructuralError.
enum class CycOp { Add, Sub, Mul, Div };
Cyclotomic cycArith(CycOp op, const Cyclotomic& a, const Cyclotomic& b);

unsigned lcmOrder(unsigned a, unsigned b);

}  // namespace thetarel
