#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thetarel/cyclotomic.hpp"
#include "thetarel/lattice.hpp"
#include "thetarel/relations.hpp"
#include "thetarel/taylor.hpp"

namespace thetarel {

// Exponent vector of zeta_1..zeta_n; the term zeta^m stands for e(sum_l m_l z_l).
using Monomial = std::vector<long>;
using LaurentPoly = std::map<Monomial, Cyclotomic>;

// Truncated series sum_{r < trunc} c_r(zeta) q^r with rational exponents r.
class JacobiQSeries {
 public:
  JacobiQSeries(std::size_t nvars, Rational trunc) : nvars_(nvars), trunc_(std::move(trunc)) {}

  std::size_t nvars() const { return nvars_; }
  const Rational& trunc() const { return trunc_; }
  const std::map<Rational, LaurentPoly>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const;

  // Ignored when exponent >= trunc.
  void addTerm(const Rational& exponent, const Monomial& m, const Cyclotomic& c);

  JacobiQSeries& operator+=(const JacobiQSeries& o);
  JacobiQSeries& operator*=(const Cyclotomic& c);
  friend JacobiQSeries operator*(const JacobiQSeries& a, const JacobiQSeries& b);
  JacobiQSeries pow(int e) const;

  // One line per (exponent, monomial): "q^r z^(m1,..,mn) : coefficient".
  std::string dump() const;

 private:
  std::size_t nvars_;
  Rational trunc_;
  std::map<Rational, LaurentPoly> terms_;
};

// theta_{alpha,beta} = sum_{v in L} e(B(beta,v)) q^{Q(alpha+v)} zeta^{G(alpha+v)}; alpha must lie in L#.
JacobiQSeries thetaQexp(const GramLattice& lattice, const RationalVector& alpha, const RationalVector& beta,
                        const Rational& trunc, const std::optional<Rational>& c = std::nullopt);

// Residual theta_dep^{N'} - sum coeffs[i] * theta_basis[i]^{N'}; zero up to trunc exactly when the relation holds there.
JacobiQSeries evaluateRelation(const GramLattice& lattice, long power, const ThetaLabel& dependent,
                               const std::vector<ThetaLabel>& basis, const std::vector<Cyclotomic>& coeffs,
                               const Rational& trunc);

// sum_{i} coeffs[i] * theta_{labels[i]}^{N'} as a series.
JacobiQSeries combinationSeries(const GramLattice& lattice, long power, const std::vector<ThetaLabel>& labels,
                                const std::vector<Cyclotomic>& coeffs, const Rational& trunc);

// Single-variable series with rational exponents and rational coefficients.
struct PlainQSeries {
  std::map<Rational, Rational> coeffs;
  Rational trunc;
};

// sum_{v in t + L, Q(v) < trunc} prod_l B(v, e_l)^{p_l} q^{Q(v)}
PlainQSeries thetaPartialQexp(const GramLattice& lattice, const RationalVector& t, const MultiIndex& p,
                              const Rational& trunc, const std::optional<Rational>& c = std::nullopt);

// Fourier-coefficient route to the I-indexed vector of a combination: for each (p, n), the sum over terms
// c(n, t) q^n e(N' B(t, z)) of the series of c(n, t) P_{k,p,N'G}(n, t).
std::vector<Cyclotomic> dkpOfCombination(const GramLattice& lattice, long power, const JacobiQSeries& series,
                                         const std::vector<IndexEntry>& index);

}  // namespace thetarel

namespace thetarel {

// D_{k,p} applied to sum coeffs[i] * theta_{labels[i]}^{N'}: map n -> coefficient for 0 <= n <= nMax.
std::map<long, Cyclotomic> dkpOfCombination(const GramLattice& lattice, long power,
                                            const std::vector<ThetaLabel>& labels,
                                            const std::vector<Cyclotomic>& coeffs, const MultiIndex& p, long nMax);

}  // namespace thetarel
