#include "thetarel/qseries.hpp"

#include <sstream>

#include "thetarel/enumeration.hpp"
#include "thetarel/errors.hpp"

namespace thetarel {

std::size_t JacobiQSeries::termCount() const {
  std::size_t n = 0;
  for (const auto& [r, lp] : terms_) n += lp.size();
  return n;
}

void JacobiQSeries::addTerm(const Rational& exponent, const Monomial& m, const Cyclotomic& c) {
  if (exponent >= trunc_ || c.isZero()) return;
  if (m.size() != nvars_) throw StructuralError("monomial has wrong number of variables");
  auto& lp = terms_[exponent];
  auto it = lp.find(m);
  if (it == lp.end()) {
    lp.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.isZero()) {
    lp.erase(it);
    if (lp.empty()) terms_.erase(exponent);
  }
}

JacobiQSeries& JacobiQSeries::operator+=(const JacobiQSeries& o) {
  if (o.nvars_ != nvars_) throw StructuralError("series arity mismatch");
  if (o.trunc_ < trunc_) {
    trunc_ = o.trunc_;
    terms_.erase(terms_.lower_bound(trunc_), terms_.end());
  }
  for (const auto& [r, lp] : o.terms_)
    for (const auto& [m, c] : lp) addTerm(r, m, c);
  return *this;
}

JacobiQSeries& JacobiQSeries::operator*=(const Cyclotomic& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [r, lp] : terms_)
    for (auto& [m, v] : lp) v *= c;
  return *this;
}

JacobiQSeries operator*(const JacobiQSeries& a, const JacobiQSeries& b) {
  if (a.nvars_ != b.nvars_) throw StructuralError("series arity mismatch");
  JacobiQSeries r(a.nvars_, std::min(a.trunc_, b.trunc_));
  Monomial m(a.nvars_);
  for (const auto& [ra, la] : a.terms_) {
    for (const auto& [rb, lb] : b.terms_) {
      const Rational s = ra + rb;
      if (s >= r.trunc_) break;
      for (const auto& [ma, ca] : la)
        for (const auto& [mb, cb] : lb) {
          for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
          r.addTerm(s, m, ca * cb);
        }
    }
  }
  return r;
}

JacobiQSeries JacobiQSeries::pow(int e) const {
  if (e < 1) throw PreconditionError("series power must be positive");
  JacobiQSeries r = *this;
  for (int i = 1; i < e; ++i) r = r * *this;
  return r;
}

std::string JacobiQSeries::dump() const {
  std::ostringstream os;
  os << "# truncation " << trunc_.get_str() << ", " << nvars_ << " variables\n";
  for (const auto& [r, lp] : terms_)
    for (const auto& [m, c] : lp) {
      os << "q^" << r.get_str() << " z^(";
      for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
      os << ") : " << c.toString() << '\n';
    }
  return os.str();
}

namespace {

// Points alpha' + v of the coset with Q < trunc, where alpha' is alpha reduced into [0,1).
std::vector<RationalVector> cosetPointsBelow(const GramLattice& lattice, const RationalVector& alpha,
                                             const Rational& trunc, const std::optional<Rational>& c) {
  const RationalVector a0 = reduceModOne(alpha);
  std::vector<RationalVector> out;
  for (const auto& cv : vectorsInCosetBounded(lattice, a0, trunc, c ? *c : safeCBound(lattice))) {
    if (cv.q >= trunc) continue;
    RationalVector x = a0;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += cv.v[i];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

JacobiQSeries thetaQexp(const GramLattice& lattice, const RationalVector& alpha, const RationalVector& beta,
                        const Rational& trunc, const std::optional<Rational>& c) {
  if (!lattice.inDual(alpha)) throw PreconditionError("alpha " + toString(alpha) + " is not in the dual lattice");
  const RationalVector gb = lattice.pairWithBasis(beta);
  const BigInt ord = lcmOfDenominators(gb);
  const unsigned order = static_cast<unsigned>(ord.get_ui());
  JacobiQSeries s(lattice.dim(), trunc);
  for (const auto& x : cosetPointsBelow(lattice, alpha, trunc, c)) {
    Rational phase = 0;  // B(beta, v) with v = x - alpha
    for (std::size_t i = 0; i < x.size(); ++i) phase += gb[i] * (x[i] - alpha[i]);
    const BigInt e = BigInt(phase * ord);
    Monomial m;
    for (const auto& g : lattice.pairWithBasis(x)) m.push_back(g.get_num().get_si());
    s.addTerm(lattice.quad(x), m, Cyclotomic::rootOfUnity(order, BigInt(e % ord).get_si()));
  }
  return s;
}

JacobiQSeries combinationSeries(const GramLattice& lattice, long power, const std::vector<ThetaLabel>& labels,
                                const std::vector<Cyclotomic>& coeffs, const Rational& trunc) {
  if (labels.size() != coeffs.size()) throw StructuralError("labels and coefficients differ in length");
  JacobiQSeries total(lattice.dim(), trunc);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (coeffs[i].isZero()) continue;
    JacobiQSeries t = thetaQexp(lattice, labels[i].alpha, labels[i].beta, trunc).pow(static_cast<int>(power));
    t *= coeffs[i];
    total += t;
  }
  return total;
}

JacobiQSeries evaluateRelation(const GramLattice& lattice, long power, const ThetaLabel& dependent,
                               const std::vector<ThetaLabel>& basis, const std::vector<Cyclotomic>& coeffs,
                               const Rational& trunc) {
  std::vector<ThetaLabel> labels{dependent};
  std::vector<Cyclotomic> cs{Cyclotomic(1u, Rational(1))};
  labels.insert(labels.end(), basis.begin(), basis.end());
  for (const auto& c : coeffs) cs.push_back(-c);
  return combinationSeries(lattice, power, labels, cs, trunc);
}

PlainQSeries thetaPartialQexp(const GramLattice& lattice, const RationalVector& t, const MultiIndex& p,
                              const Rational& trunc, const std::optional<Rational>& c) {
  if (p.size() != lattice.dim()) throw StructuralError("multi-index length does not match lattice rank");
  PlainQSeries s{{}, trunc};
  for (const auto& x : cosetPointsBelow(lattice, t, trunc, c)) {
    Rational w = 1;
    const RationalVector b = lattice.pairWithBasis(x);
    for (std::size_t l = 0; l < b.size(); ++l)
      for (int k = 0; k < p.e[l]; ++k) w *= b[l];
    if (w == 0) continue;
    Rational& slot = s.coeffs[lattice.quad(x)];
    slot += w;
  }
  for (auto it = s.coeffs.begin(); it != s.coeffs.end();) it = (it->second == 0) ? s.coeffs.erase(it) : std::next(it);
  return s;
}

std::vector<Cyclotomic> dkpOfCombination(const GramLattice& lattice, long power, const JacobiQSeries& series,
                                         const std::vector<IndexEntry>& index) {
  const std::size_t n = lattice.dim();
  long nMax = 0;
  for (const auto& e : index) nMax = std::max(nMax, e.n);
  if (series.trunc() <= nMax) throw PreconditionError("series truncation does not cover the index set");

  const HalfInteger k = HalfInteger::fromTwice(power * static_cast<long>(n));
  const RationalMatrix m(lattice.gram().scaled(power));
  std::map<MultiIndex, Polynomial> polys;
  for (const auto& e : index)
    if (!polys.count(e.p)) polys.emplace(e.p, pkpm(k, e.p, m));

  std::vector<Cyclotomic> out(index.size(), Cyclotomic(static_cast<unsigned>(power)));
  const RationalMatrix& ginv = lattice.gramInverse();
  for (std::size_t i = 0; i < index.size(); ++i) {
    const Rational qn(index[i].n);
    auto it = series.terms().find(qn);
    if (it == series.terms().end()) continue;
    const Polynomial& poly = polys.at(index[i].p);
    for (const auto& [mono, coeff] : it->second) {
      // the term zeta^m is e(N' B(t, z)) with t = G^{-1} m / N'
      RationalVector pt(n + 1);
      pt[0] = qn;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) pt[a + 1] += ginv(a, b) * mono[b];
        pt[a + 1] /= power;
      }
      out[i] += coeff * Cyclotomic(1u, poly.evaluate(pt));
    }
  }
  return out;
}

std::map<long, Cyclotomic> dkpOfCombination(const GramLattice& lattice, long power,
                                            const std::vector<ThetaLabel>& labels,
                                            const std::vector<Cyclotomic>& coeffs, const MultiIndex& p, long nMax) {
  JacobiQSeries s = combinationSeries(lattice, power, labels, coeffs, Rational(nMax + 1));
  std::vector<IndexEntry> idx;
  for (long n = 0; n <= nMax; ++n) idx.push_back({p, n});
  auto v = dkpOfCombination(lattice, power, s, idx);
  std::map<long, Cyclotomic> out;
  for (long n = 0; n <= nMax; ++n) out.emplace(n, v[static_cast<std::size_t>(n)]);
  return out;
}

}  // namespace thetarel
