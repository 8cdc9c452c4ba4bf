#include "thetarel/enumeration.hpp"

#include <algorithm>

#include "thetarel/errors.hpp"

namespace thetarel {

Rational safeCBound(const GramLattice& lattice) {
  Rational t = 0;
  for (std::size_t i = 0; i < lattice.dim(); ++i) t += lattice.gramInverse()(i, i);
  return 2 * t;
}

namespace {

long toLong(const BigInt& z, const char* what) {
  if (!z.fits_slong_p()) throw PreconditionError(std::string("enumeration bound overflow: ") + what);
  return z.get_si();
}

}  // namespace

CosetVectorStream::CosetVectorStream(const GramLattice& lattice, const RationalVector& alpha, const Rational& bound,
                                     const Rational& c)
    : lattice_(&lattice), n_(lattice.dim()) {
  if (alpha.size() != n_) throw StructuralError("coset offset length does not match lattice rank");
  if (c <= 0) throw PreconditionError("enumeration constant c must be positive");
  denom_ = toLong(lcmOfDenominators(alpha), "denominator");
  for (const auto& a : alpha) shift_.push_back(toLong(BigInt(a * denom_), "offset"));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) gram_.push_back(toLong(lattice.gram()(i, j), "gram"));
  if (bound >= 0) {
    const Rational d2 = Rational(denom_) * denom_;
    boxLimit_ = toLong(floorOf(c * bound * d2), "box");
    qLimit_ = toLong(floorOf(2 * bound * d2), "norm");
  }
  idx_.assign(n_, -1);
  cur_.assign(n_, 0);
  partial_.assign(n_ + 1, 0);
  reset();
}

void CosetVectorStream::reset() {
  level_ = 0;
  std::fill(idx_.begin(), idx_.end(), -1);
  partial_[0] = 0;
  done_ = boxLimit_ < 0;
}

bool CosetVectorStream::next(CosetVector& out) {
  while (!done_) {
    const long i = integerAt(++idx_[level_]);
    const __int128 x = static_cast<__int128>(i) * denom_ + shift_[level_];
    const __int128 s = partial_[level_] + x * x;
    if (s > boxLimit_) {
      // (i + alpha)^2 only grows once a negative candidate overshoots
      if (i < 0) {
        if (level_ == 0) {
          done_ = true;
          return false;
        }
        --level_;
      }
      continue;
    }
    cur_[level_] = i;
    if (level_ + 1 < n_) {
      partial_[level_ + 1] = static_cast<long>(s);
      ++level_;
      idx_[level_] = -1;
      continue;
    }
    // exact filter: x^T G x with x = D (alpha + v)
    __int128 qq = 0;
    for (std::size_t a = 0; a < n_; ++a) {
      const __int128 xa = static_cast<__int128>(cur_[a]) * denom_ + shift_[a];
      if (xa == 0) continue;
      for (std::size_t b = 0; b < n_; ++b) {
        const long g = gram_[a * n_ + b];
        if (g) qq += xa * g * (static_cast<__int128>(cur_[b]) * denom_ + shift_[b]);
      }
    }
    if (qq > qLimit_) continue;
    out.v = cur_;
    out.q = Rational(BigInt(static_cast<long>(qq)), BigInt(2 * denom_ * denom_));
    out.q.canonicalize();
    return true;
  }
  return false;
}

std::vector<CosetVector> vectorsInCosetBounded(const GramLattice& lattice, const RationalVector& alpha,
                                               const Rational& bound, const Rational& c) {
  CosetVectorStream s(lattice, alpha, bound, c);
  std::vector<CosetVector> out;
  CosetVector cv;
  while (s.next(cv)) out.push_back(cv);
  return out;
}

MinimalVectors minVectors(const GramLattice& lattice, const RationalVector& alpha, const std::optional<Rational>& c) {
  const Rational cc = c ? *c : safeCBound(lattice);
  const RationalVector a = reduceModOne(alpha);
  MinimalVectors mv;
  if (std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; })) {
    mv.minimum = 0;
    mv.vectors.push_back(a);
    return mv;
  }
  // Q(alpha) bounds the minimum from above since alpha itself is in the coset
  auto all = vectorsInCosetBounded(lattice, a, lattice.quad(a), cc);
  if (all.empty()) throw PreconditionError("coset enumeration came back empty; c is too small");
  mv.minimum = all.front().q;
  for (const auto& cv : all) mv.minimum = std::min(mv.minimum, cv.q);
  for (const auto& cv : all) {
    if (cv.q != mv.minimum) continue;
    RationalVector p = a;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += cv.v[i];
    mv.vectors.push_back(std::move(p));
  }
  return mv;
}

void sortByQ(std::vector<CosetVector>& vs) {
  std::stable_sort(vs.begin(), vs.end(), [](const CosetVector& a, const CosetVector& b) { return a.q < b.q; });
}

void forEachTupleBounded(const std::vector<Rational>& w, int count, const Rational& maxSum,
                         const std::function<void(const std::vector<std::size_t>&, const Rational&)>& visit) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] < w[i - 1]) throw PreconditionError("tuple candidates are not sorted by Q");
  if (count <= 0) throw PreconditionError("tuple length must be positive");
  if (maxSum < 0 || w.empty()) return;
  // integer weights over a common denominator keep the inner loop cheap
  BigInt den = lcmOfDenominators(w);
  mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), maxSum.get_den_mpz_t());
  std::vector<long> iw;
  for (const auto& x : w) iw.push_back(toLong(BigInt(x * den), "weight"));
  const long limit = toLong(floorOf(maxSum * den), "limit");
  std::vector<std::size_t> idx(static_cast<std::size_t>(count));
  std::vector<long> pre(static_cast<std::size_t>(count) + 1, 0);
  const Rational denR(den);
  std::function<void(std::size_t)> rec = [&](std::size_t slot) {
    for (std::size_t k = 0; k < iw.size(); ++k) {
      const long s = pre[slot] + iw[k];
      if (s > limit) break;
      idx[slot] = k;
      if (slot + 1 == idx.size()) {
        visit(idx, Rational(s) / denR);
      } else {
        pre[slot + 1] = s;
        rec(slot + 1);
      }
    }
  };
  rec(0);
}

std::vector<std::vector<std::size_t>> tuplesWithQSum(const std::vector<Rational>& w, int count, const Rational& n) {
  std::vector<std::vector<std::size_t>> out;
  forEachTupleBounded(w, count, n, [&](const std::vector<std::size_t>& idx, const Rational& s) {
    if (s == n) out.push_back(idx);
  });
  return out;
}

}  // namespace thetarel
