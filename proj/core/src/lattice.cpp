#include "thetarel/lattice.hpp"

#include <numeric>

#include "thetarel/errors.hpp"

namespace thetarel {

GramLattice::GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
  const std::size_t n = gram_.rows();
  if (n == 0 || gram_.cols() != n) throw InputError("Gram matrix must be square and non-empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_(i, i) % 2 != 0) throw InputError("Gram matrix has an odd diagonal entry; lattice is not even");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_(i, j) != gram_(j, i)) throw InputError("Gram matrix is not symmetric");
  }
  // Sylvester: every leading principal minor must be positive.
  RationalMatrix g(gram_);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = g(i, j);
    if (determinant(minor) <= 0) throw InputError("Gram matrix is not positive definite");
  }
  det_ = integerDeterminant(gram_);
  inverse_ = inverse(g);
  BigInt lev = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational e = (i == j) ? Rational(inverse_(i, j) / 2) : inverse_(i, j);
      mpz_lcm(lev.get_mpz_t(), lev.get_mpz_t(), e.get_den_mpz_t());
    }
  if (!lev.fits_slong_p()) throw InputError("lattice level does not fit in a machine integer");
  level_ = lev.get_si();
  smith_ = smithNormalForm(gram_);
}

RationalVector GramLattice::pairWithBasis(const RationalVector& v) const {
  if (v.size() != dim()) throw StructuralError("vector length does not match lattice rank");
  RationalVector r(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (gram_(i, j) != 0) r[i] += Rational(gram_(i, j)) * v[j];
  return r;
}

Rational GramLattice::bilinear(const RationalVector& v, const RationalVector& w) const {
  RationalVector gw = pairWithBasis(w);
  Rational s = 0;
  for (std::size_t i = 0; i < dim(); ++i) s += v.at(i) * gw[i];
  return s;
}

Rational GramLattice::quad(const RationalVector& v) const { return bilinear(v, v) / 2; }

GramLattice GramLattice::rescaled(long factor) const {
  if (factor <= 0) throw PreconditionError("rescale factor must be positive");
  return GramLattice(gram_.scaled(factor));
}

RationalVector reduceModOne(RationalVector v) {
  for (auto& x : v) x = fracPart(x);
  return v;
}

RationalVector toRational(const IntVector& v) {
  RationalVector r;
  r.reserve(v.size());
  for (long x : v) r.emplace_back(x);
  return r;
}

namespace {

// Walks the mixed-radix box prod [0, m_i) with the first coordinate slowest.
template <class Visit>
void forEachInBox(const std::vector<long>& radix, Visit visit) {
  std::vector<long> k(radix.size(), 0);
  for (;;) {
    visit(k);
    std::size_t i = radix.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (++k[i] < radix[i]) break;
      k[i] = 0;
    }
  }
}

}  // namespace

std::vector<RationalVector> GramLattice::dualCosetReps() const {
  const std::size_t n = dim();
  std::vector<long> radix;
  for (const auto& d : smith_.invariants) radix.push_back(d.get_si());
  std::vector<RationalVector> reps;
  forEachInBox(radix, [&](const std::vector<long>& k) {
    RationalVector v(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (k[j] == 0) continue;
      Rational c(k[j], radix[j]);
      c.canonicalize();
      for (std::size_t i = 0; i < n; ++i) v[i] += Rational(smith_.v(i, j)) * c;
    }
    reps.push_back(reduceModOne(std::move(v)));
  });
  return reps;
}

std::vector<RationalVector> GramLattice::betaReps(long power) const {
  if (power <= 0 || level_ % power != 0)
    throw PreconditionError("power " + std::to_string(power) + " does not divide the level " + std::to_string(level_));
  const std::size_t n = dim();
  std::vector<long> radix;
  for (const auto& d : smith_.invariants) radix.push_back(power / std::gcd(d.get_si(), power));
  std::vector<RationalVector> reps;
  forEachInBox(radix, [&](const std::vector<long>& y) {
    RationalVector v(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t i = 0; i < n; ++i) v[i] += Rational(smith_.v(i, j) * y[j]);
    }
    for (auto& x : v) x /= power;
    reps.push_back(reduceModOne(std::move(v)));
  });
  return reps;
}

bool GramLattice::inDual(const RationalVector& v) const {
  for (const auto& x : pairWithBasis(v))
    if (!isIntegral(x)) return false;
  return true;
}

bool GramLattice::inBetaGroup(const RationalVector& beta, long power) const {
  if (beta.size() != dim()) throw StructuralError("vector length does not match lattice rank");
  // y = V^{-1} (N' beta) must satisfy y_i * d_i / gcd(N', d_i) in Z
  RationalMatrix vinv = inverse(RationalMatrix(smith_.v));
  for (std::size_t i = 0; i < dim(); ++i) {
    Rational y = 0;
    for (std::size_t j = 0; j < dim(); ++j) y += vinv(i, j) * beta[j];
    y *= power;
    const long d = smith_.invariants[i].get_si();
    if (!isIntegral(y * Rational(d / std::gcd(d, power)))) return false;
  }
  return true;
}

bool GramLattice::validateAlpha(const RationalVector& alpha, long power) const {
  if (!inDual(alpha)) throw PreconditionError("alpha " + toString(alpha) + " is not in the dual lattice");
  return isIntegral(Rational(power) * quad(alpha));
}

bool GramLattice::equivalentModL(const RationalVector& a, const RationalVector& b) const {
  if (a.size() != b.size()) throw StructuralError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!isIntegral(a[i] - b[i])) return false;
  return true;
}

bool GramLattice::equivalentModDual(const RationalVector& a, const RationalVector& b) const {
  if (a.size() != b.size()) throw StructuralError("vector length mismatch");
  RationalVector diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  return inDual(diff);
}

IntMatrix gramD4() { return {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}; }
IntMatrix gramA2() { return {{2, -1}, {-1, 2}}; }
IntMatrix gramA3() { return {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}; }
IntMatrix gramE8() {
  return {{2, -1, 0, 0, 0, 0, 0, 0},  {-1, 2, -1, 0, 0, 0, 0, 0}, {0, -1, 2, -1, 0, 0, 0, -1},
          {0, 0, -1, 2, -1, 0, 0, 0}, {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
          {0, 0, 0, 0, 0, -1, 2, 0},  {0, 0, -1, 0, 0, 0, 0, 2}};
}

IntMatrix blockDiagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

}  // namespace thetarel
