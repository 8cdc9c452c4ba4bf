#include "thetarel/taylor.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "thetarel/errors.hpp"

namespace thetarel {

MultiIndex::MultiIndex(std::vector<int> comps) : e(std::move(comps)) {
  for (int c : e)
    if (c < 0) throw PreconditionError("multi-index components must be non-negative");
}

int MultiIndex::sum() const {
  int s = 0;
  for (int c : e) s += c;
  return s;
}

bool MultiIndex::precedes(const MultiIndex& p) const {
  if (p.e.size() != e.size()) throw StructuralError("multi-index length mismatch");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > p.e[i]) return false;
  return (p.sum() - sum()) % 2 == 0;
}

std::string MultiIndex::toString() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ')';
  return os.str();
}

bool operator<(const MultiIndex& a, const MultiIndex& b) {
  const int sa = a.sum(), sb = b.sum();
  if (sa != sb) return sa < sb;
  return a.e < b.e;
}

namespace {

// Every q with 0 <= q <= p componentwise.
void forEachBelow(const MultiIndex& p, const std::function<void(const MultiIndex&)>& f) {
  MultiIndex q = MultiIndex::zero(p.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == p.size()) {
      f(q);
      return;
    }
    for (int v = 0; v <= p.e[i]; ++v) {
      q.e[i] = v;
      rec(i + 1);
    }
    q.e[i] = 0;
  };
  rec(0);
}

BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt indexFactorial(const std::vector<int>& e) {
  BigInt r = 1;
  for (int c : e) r *= factorial(c);
  return r;
}

long floorDiv(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Rational powRational(const Rational& x, long e) {
  Rational r = 1;
  for (long i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

std::vector<MultiIndex> hatClosure(const std::vector<MultiIndex>& set) {
  std::set<MultiIndex> out;
  for (const auto& p : set)
    forEachBelow(p, [&](const MultiIndex& q) {
      if ((p.sum() - q.sum()) % 2 == 0) out.insert(q);
    });
  return {out.begin(), out.end()};
}

std::vector<MultiIndex> multiIndicesUpTo(std::size_t n, int maxSum) {
  std::vector<MultiIndex> out;
  MultiIndex cur = MultiIndex::zero(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      if (cur.sum() > 0) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur.e[i] = v;
      rec(i + 1, left - v);
    }
    cur.e[i] = 0;
  };
  rec(0, maxSum);
  std::sort(out.begin(), out.end());
  return out;
}

Rational HalfInteger::value() const {
  Rational r(twice_, 2);
  r.canonicalize();
  return r;
}

std::string HalfInteger::toString() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

Rational gammaRatio(HalfInteger k, long a, long b) {
  const Rational kv = k.value();
  Rational prod = 1;
  if (a >= b) {
    for (long j = b; j < a; ++j) prod *= kv + j;
    return prod;
  }
  for (long j = a; j < b; ++j) prod *= kv + j;
  if (prod == 0)
    throw DivisionError("gamma ratio has a pole in the denominator at k=" + k.toString());
  return 1 / prod;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.addTerm(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Polynomial p(nvars);
  Exponent e(nvars, 0);
  e.at(i) = 1;
  p.addTerm(e, 1);
  return p;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::addTerm(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw StructuralError("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw StructuralError("polynomial arity mismatch");
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw StructuralError("polynomial arity mismatch");
  for (const auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw StructuralError("polynomial arity mismatch");
  Polynomial r(a.nvars_);
  Polynomial::Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.addTerm(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::pow(int e) const {
  Polynomial r = constant(nvars_, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Rational Polynomial::evaluate(const RationalVector& x) const {
  if (x.size() != nvars_) throw StructuralError("evaluation point has wrong length");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= powRational(x[i], e[i]);
    s += t;
  }
  return s;
}

int Polynomial::totalDegree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

std::string Polynomial::toString() const {
  if (terms_.empty()) return "0";
  // highest total degree first, then reverse lex, which reads naturally
  std::vector<std::pair<Exponent, Rational>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ts) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (mag != 1 || constant) {
      os << mag.get_str();
      if (!constant) os << '*';
    }
    bool firstVar = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!firstVar) os << '*';
      firstVar = false;
      os << 'X' << i;
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

namespace {

void checkWeightAndMatrix(HalfInteger k, const MultiIndex& p, const RationalMatrix& m) {
  if (k.isNonPositiveInteger()) throw PreconditionError("weight k=" + k.toString() + " is a non-positive integer");
  if (m.rows() != m.cols() || m.rows() != p.size()) throw StructuralError("matrix size does not match multi-index");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) throw PreconditionError("matrix M must be symmetric");
}

}  // namespace

Polynomial pkpm(HalfInteger k, const MultiIndex& p, const RationalMatrix& m) {
  checkWeightAndMatrix(k, p, m);
  const std::size_t n = p.size();
  const long s = p.sum();
  const long lam = floorDiv(s - 1, 2);

  // quadratic form sum_{i,j} m_ij T_i T_j in n variables, and its powers divided by h!
  Polynomial quad(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial::Exponent e(n, 0);
      e[i] += 1;
      e[j] += 1;
      quad.addTerm(e, m(i, j));
    }
  std::vector<Polynomial> quadPow{Polynomial::constant(n, 1)};
  for (long h = 1; h <= s / 2; ++h) {
    Polynomial next = quadPow.back() * quad;
    next *= Rational(1, h) /* 1/h accumulates to 1/h! */;
    quadPow.push_back(std::move(next));
  }

  // linear forms (X*M)_j over X0..Xn and their powers
  std::vector<std::vector<Polynomial>> linPow(n);
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial lf(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial::Exponent e(n + 1, 0);
      e[i + 1] = 1;
      lf.addTerm(e, m(i, j));
    }
    linPow[j].push_back(Polynomial::constant(n + 1, 1));
    for (int a = 1; a <= p.e[j]; ++a) linPow[j].push_back(linPow[j].back() * lf);
  }

  Polynomial result(n + 1);
  const BigInt twoS = BigInt(1) << static_cast<unsigned>(s);
  forEachBelow(p, [&](const MultiIndex& q) {
    const long diff = s - q.sum();
    if (diff % 2 != 0) return;
    const long h = diff / 2;
    Polynomial::Exponent pq(n);
    for (std::size_t i = 0; i < n; ++i) pq[i] = p.e[i] - q.e[i];
    Rational c = quadPow[static_cast<std::size_t>(h)].coefficient(pq);
    if (c == 0) return;
    Rational factor = c * Rational(twoS) / Rational(indexFactorial(q.e));
    factor *= gammaRatio(k, (s + q.sum()) / 2 - 1, lam);
    factor *= powRational(Rational(-1, 2), h);
    Polynomial term = Polynomial::constant(n + 1, factor);
    Polynomial::Exponent x0(n + 1, 0);
    x0[0] = static_cast<int>(h);
    Polynomial mono(n + 1);
    mono.addTerm(x0, 1);
    term = term * mono;
    for (std::size_t j = 0; j < n; ++j)
      if (q.e[j]) term = term * linPow[j][static_cast<std::size_t>(q.e[j])];
    result += term;
  });
  return result;
}

Polynomial pkpmDefinition(HalfInteger k, const MultiIndex& p, const RationalMatrix& m) {
  checkWeightAndMatrix(k, p, m);
  const std::size_t n = p.size();
  const long s = p.sum();
  const long lam = floorDiv(s - 1, 2);
  Polynomial result(n + 1);

  std::vector<int> lambda(n * n, 0), omega(n * n, 0);
  std::vector<int> pi(n, 0);

  auto matrixWeight = [&](const std::vector<int>& entries) {
    Rational w = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const int a = entries[i * n + j];
        if (a == 0) continue;
        w *= powRational(m(i, j), a) / Rational(factorial(a));
      }
    return w;
  };

  // Omega is filled column by column; column j must sum to r_j = p_j - pi_j(Lambda).
  std::function<void(std::size_t, std::size_t, int, long)> fillOmega = [&](std::size_t col, std::size_t row, int left,
                                                                           long mu0) {
    if (col == n) {
      Polynomial::Exponent e(n + 1, 0);
      e[0] = static_cast<int>(mu0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i + 1] += omega[i * n + j];
      Rational c = (mu0 % 2 ? Rational(-1) : Rational(1)) * Rational(BigInt(1) << static_cast<unsigned>(s - mu0));
      c *= gammaRatio(k, s - 1 - mu0, lam);
      c *= matrixWeight(lambda) * matrixWeight(omega);
      result.addTerm(e, c);
      return;
    }
    if (row + 1 == n) {
      omega[row * n + col] = left;
      const std::size_t nc = col + 1;
      fillOmega(nc, 0, nc < n ? p.e[nc] - pi[nc] : 0, mu0);
      omega[row * n + col] = 0;
      return;
    }
    for (int a = 0; a <= left; ++a) {
      omega[row * n + col] = a;
      fillOmega(col, row + 1, left - a, mu0);
    }
    omega[row * n + col] = 0;
  };

  std::function<void(std::size_t, long)> fillLambda = [&](std::size_t pos, long mu0) {
    if (pos == n * n) {
      fillOmega(0, 0, p.e[0] - pi[0], mu0);
      return;
    }
    const std::size_t i = pos / n, j = pos % n;
    for (int a = 0;; ++a) {
      // Lambda_ij contributes to pi_i and pi_j (twice to pi_i on the diagonal)
      if (pi[i] + a > p.e[i] || pi[j] + a > p.e[j] || (i == j && pi[i] + 2 * a > p.e[i])) break;
      lambda[pos] = a;
      pi[i] += a;
      pi[j] += a;
      fillLambda(pos + 1, mu0 + a);
      pi[i] -= a;
      pi[j] -= a;
    }
    lambda[pos] = 0;
  };

  fillLambda(0, 0);
  return result;
}

ScaledEvaluator::ScaledEvaluator(const Polynomial& p, int weightedDegree) : degree_(weightedDegree), den_(1) {
  for (const auto& [e, c] : p.terms()) {
    int w = 2 * e[0];
    for (std::size_t i = 1; i < e.size(); ++i) w += e[i];
    if (w != weightedDegree) throw PreconditionError("polynomial is not weighted homogeneous");
    mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& [e, c] : p.terms()) terms_.emplace_back(e, BigInt(c * den_));
}

Rational ScaledEvaluator::operator()(const BigInt& n, const std::vector<BigInt>& y, const BigInt& e) const {
  // P(n, y/e) = e^{-s} * sum c * (n e^2)^{mu0} * prod y_i^{mu_i}
  const std::size_t nv = y.size() + 1;
  std::vector<std::vector<BigInt>> pw(nv);
  auto power = [&](std::size_t var, int k) -> const BigInt& {
    auto& tab = pw[var];
    if (tab.empty()) tab.push_back(1);
    while (static_cast<int>(tab.size()) <= k) tab.push_back(tab.back() * (var == 0 ? BigInt(n * e * e) : y[var - 1]));
    return tab[static_cast<std::size_t>(k)];
  };
  BigInt acc = 0, t;
  for (const auto& [ex, c] : terms_) {
    t = c;
    for (std::size_t i = 0; i < nv; ++i)
      if (ex[i]) t *= power(i, ex[i]);
    acc += t;
  }
  BigInt scale = den_;
  BigInt ep;
  mpz_pow_ui(ep.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(degree_));
  scale *= ep;
  Rational r(acc, scale);
  r.canonicalize();
  return r;
}

}  // namespace thetarel
