#include "thetarel/p0search.hpp"

#include "thetarel/errors.hpp"
#include "thetarel/linalg.hpp"
#include "thetarel/qseries.hpp"

namespace thetarel {

BpTable::BpTable(const GramLattice& rescaled, const std::optional<Rational>& c,
                 const std::optional<RationalMatrix>& form) {
  const std::size_t n = rescaled.dim();
  RationalMatrix f = form ? *form : RationalMatrix(rescaled.gram());
  if (f.rows() != n || f.cols() != n) throw StructuralError("pairing form has wrong size");
  for (auto& t : rescaled.dualCosetReps()) {
    bool zero = true;
    for (const auto& x : t) zero = zero && x == 0;
    if (zero) continue;
    MinimalVectors mv = minVectors(rescaled, t, c);
    std::vector<RationalVector> pair;
    for (const auto& v : mv.vectors) {
      RationalVector b(n);
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t i = 0; i < n; ++i) b[l] += v[i] * f(i, l);
      pair.push_back(std::move(b));
    }
    reps_.push_back(std::move(t));
    minimal_.push_back(std::move(mv));
    pairings_.push_back(std::move(pair));
  }
}

std::vector<Rational> BpTable::row(const MultiIndex& p) const {
  std::vector<Rational> out(reps_.size());
  Rational term;
  for (std::size_t j = 0; j < reps_.size(); ++j) {
    for (const auto& b : pairings_[j]) {
      term = 1;
      for (std::size_t l = 0; l < b.size() && term != 0; ++l) {
        Rational pw;
        mpq_set(pw.get_mpq_t(), b[l].get_mpq_t());
        mpz_pow_ui(mpq_numref(pw.get_mpq_t()), mpq_numref(b[l].get_mpq_t()), static_cast<unsigned long>(p.e[l]));
        mpz_pow_ui(mpq_denref(pw.get_mpq_t()), mpq_denref(b[l].get_mpq_t()), static_cast<unsigned long>(p.e[l]));
        term *= pw;
      }
      out[j] += term;
    }
  }
  return out;
}

P0Result findP0(const GramLattice& rescaled, const P0SearchOptions& opts) {
  const std::size_t n = rescaled.dim();
  P0Result res;
  res.p0.push_back(MultiIndex::zero(n));
  if (!rescaled.det().fits_ulong_p()) throw PreconditionError("discriminant group too large");
  const std::size_t target = rescaled.det().get_ui() - 1;
  if (target == 0) return res;

  BpTable table(rescaled, opts.c, opts.form);
  IntegerEchelonBasis basis(table.columns());
  for (const auto& p : multiIndicesUpTo(n, opts.maxSum)) {
    ++res.candidatesTried;
    std::vector<Rational> r = table.row(p);
    // clear denominators; a positive row scale never changes the rank
    BigInt den = lcmOfDenominators(r);
    std::vector<BigInt> ir;
    ir.reserve(r.size());
    for (const auto& x : r) ir.emplace_back(x * den);
    if (basis.add(std::move(ir))) {
      res.p0.push_back(p);
      if (basis.rank() == target) break;
    }
  }
  res.rank = basis.rank();
  if (res.rank < target)
    throw SearchError("insufficient max_sum " + std::to_string(opts.maxSum) + ": reached rank " +
                          std::to_string(res.rank) + " of " + std::to_string(target),
                      res.rank, target);
  return res;
}

namespace {

// Power series known modulo q^prec.
struct Series {
  std::vector<Rational> c;  // c.size() == prec
  long prec() const { return static_cast<long>(c.size()); }
  long val() const {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) return static_cast<long>(i);
    return prec();
  }
};

Series mulSeries(const Series& a, const Series& b) {
  const long va = a.val(), vb = b.val();
  const long prec = std::min(a.prec() + vb, b.prec() + va);
  Series r{std::vector<Rational>(static_cast<std::size_t>(std::max(prec, 0L)))};
  for (long i = va; i < a.prec() && i < prec; ++i) {
    if (a.c[static_cast<std::size_t>(i)] == 0) continue;
    for (long j = vb; j < b.prec() && i + j < prec; ++j)
      r.c[static_cast<std::size_t>(i + j)] += a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
  }
  return r;
}

Series subSeries(const Series& a, const Series& b) {
  Series r{std::vector<Rational>(static_cast<std::size_t>(std::min(a.prec(), b.prec())))};
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

// a / b where val(a) >= val(b) and b is nonzero within its precision.
Series divSeries(const Series& a, const Series& b) {
  const long va = a.val(), vb = b.val();
  const long prec = std::min(a.prec() - vb, b.prec() - 2 * vb + va);
  Series r{std::vector<Rational>(static_cast<std::size_t>(std::max(prec, 0L)))};
  // long division of q^{-vb} a by the unit q^{-vb} b
  std::vector<Rational> rem(a.c.begin() + std::min(vb, a.prec()), a.c.end());
  const Rational lead = b.c[static_cast<std::size_t>(vb)];
  for (long k = 0; k < prec; ++k) {
    const Rational x = rem[static_cast<std::size_t>(k)] / lead;
    r.c[static_cast<std::size_t>(k)] = x;
    if (x == 0) continue;
    for (long j = vb; j < b.prec() && k + j - vb < static_cast<long>(rem.size()); ++j)
      rem[static_cast<std::size_t>(k + j - vb)] -= x * b.c[static_cast<std::size_t>(j)];
  }
  return r;
}

}  // namespace

FlpCheck flp0QexpCheck(const GramLattice& rescaled, const std::vector<MultiIndex>& p0,
                       const std::vector<RationalVector>& reps, const Rational& relTrunc,
                       const std::optional<Rational>& c) {
  const std::size_t d = reps.size();
  if (p0.size() != d) throw StructuralError("P0 and representative lists differ in size");
  if (relTrunc <= 0) throw PreconditionError("relative truncation must be positive");
  const long prec = BigInt(floorOf(relTrunc - Rational(1, 1000000)) + 1).get_si();

  FlpCheck out;
  std::vector<Rational> shift(d);
  for (std::size_t j = 0; j < d; ++j) {
    shift[j] = minVectors(rescaled, reps[j], c).minimum;
    out.columnShift += shift[j];
  }
  std::vector<std::vector<Series>> a(d, std::vector<Series>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      PlainQSeries s = thetaPartialQexp(rescaled, reps[j], p0[i], shift[j] + prec, c);
      Series col{std::vector<Rational>(static_cast<std::size_t>(prec))};
      for (const auto& [r, v] : s.coeffs) {
        Rational e = r - shift[j];
        // every exponent of a coset sits in Q(t_j) + Z
        if (!isIntegral(e)) throw PreconditionError("coset exponents are not congruent modulo 1");
        col.c[static_cast<std::size_t>(e.get_num().get_si())] += v;
      }
      a[i][j] = std::move(col);
    }

  // the empty product is exact; give it more precision than any entry can carry
  Series det{std::vector<Rational>(static_cast<std::size_t>(prec) * (d + 2) + 1)};
  det.c[0] = 1;
  bool negate = false;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = d;
    long best = 0;
    for (std::size_t r = col; r < d; ++r) {
      const long v = a[r][col].val();
      if (v >= a[r][col].prec()) continue;
      if (piv == d || v < best) {
        piv = r;
        best = v;
      }
    }
    if (piv == d) return out;  // column vanishes to the available precision; nothing can be concluded
    if (piv != col) {
      std::swap(a[piv], a[col]);
      negate = !negate;
    }
    for (std::size_t r = col + 1; r < d; ++r) {
      if (a[r][col].val() >= a[r][col].prec()) continue;
      Series f = divSeries(a[r][col], a[col][col]);
      for (std::size_t j = col + 1; j < d; ++j) a[r][j] = subSeries(a[r][j], mulSeries(f, a[col][j]));
    }
    det = mulSeries(det, a[col][col]);
  }
  const long v = det.val();
  if (v < det.prec()) {
    out.nonzero = true;
    out.lowestExponent = out.columnShift + v;
    out.lowestCoefficient = det.c[static_cast<std::size_t>(v)];
    if (negate) out.lowestCoefficient = -out.lowestCoefficient;
  }
  return out;
}

}  // namespace thetarel
