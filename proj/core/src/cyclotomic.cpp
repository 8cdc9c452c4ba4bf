#include "thetarel/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "thetarel/errors.hpp"

namespace thetarel {

namespace {

using IPoly = std::vector<BigInt>;
using QPoly = std::vector<Rational>;

void trim(IPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}
void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
IPoly divideExact(IPoly num, const IPoly& den) {
  const std::size_t dd = den.size() - 1;
  IPoly q(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    BigInt c = num[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return q;
}

QPoly polyMul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly polySub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void polyDivMod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, 0);
  const Rational lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    trim(r);
  }
}

}  // namespace

std::vector<BigInt> cyclotomicPolynomial(unsigned m) {
  if (m == 0) throw PreconditionError("cyclotomic order must be positive");
  IPoly num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) num = divideExact(num, cyclotomicPolynomial(d));
  trim(num);
  return num;
}

unsigned eulerPhi(unsigned m) {
  unsigned r = m;
  unsigned x = m;
  for (unsigned p = 2; p * p <= x; ++p)
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      r -= r / p;
    }
  if (x > 1) r -= r / x;
  return r;
}

unsigned lcmOrder(unsigned a, unsigned b) { return std::lcm(a, b); }

namespace detail {

struct CyclotomicField {
  unsigned order;
  unsigned phi;
  QPoly modulus;
  // power[k] = x^k mod Phi_m for k < max(order, 2*phi - 1)
  std::vector<QPoly> power;
};

namespace {

std::shared_ptr<const CyclotomicField> buildField(unsigned m) {
  auto f = std::make_shared<CyclotomicField>();
  f->order = m;
  IPoly phi = cyclotomicPolynomial(m);
  f->phi = static_cast<unsigned>(phi.size() - 1);
  for (const auto& c : phi) f->modulus.emplace_back(c);
  const std::size_t count = std::max<std::size_t>(m, 2 * f->phi);
  QPoly cur(f->phi, 0);
  cur[0] = 1;
  for (std::size_t k = 0; k < count; ++k) {
    f->power.push_back(cur);
    // multiply by x, then fold the overflow coefficient back using the monic modulus
    Rational top = cur.back();
    for (std::size_t i = f->phi; i-- > 1;) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < f->phi; ++i) cur[i] -= top * f->modulus[i];
  }
  return f;
}

}  // namespace

std::shared_ptr<const CyclotomicField> field(unsigned m) {
  if (m == 0) throw PreconditionError("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto f = buildField(m);
  cache.emplace(m, f);
  return f;
}

}  // namespace detail

Cyclotomic::Cyclotomic() : Cyclotomic(1u) {}

Cyclotomic::Cyclotomic(unsigned order) : field_(detail::field(order)), coeffs_(field_->phi) {}

Cyclotomic::Cyclotomic(unsigned order, const Rational& value) : Cyclotomic(order) { coeffs_[0] = value; }

Cyclotomic::Cyclotomic(unsigned order, std::vector<Rational> coeffs) : field_(detail::field(order)) {
  // Arbitrary length input is reduced modulo Phi_m.
  coeffs_.assign(field_->phi, 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (k < field_->phi) {
      coeffs_[k] += coeffs[k];
    } else {
      addRootMultiple(coeffs[k], static_cast<long>(k));
    }
  }
}

Cyclotomic Cyclotomic::rootOfUnity(unsigned order, long exponent) {
  Cyclotomic c(order);
  c.addRootMultiple(1, exponent);
  return c;
}

unsigned Cyclotomic::order() const { return field_->order; }
unsigned Cyclotomic::degree() const { return field_->phi; }

bool Cyclotomic::isZero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::isRational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void Cyclotomic::addRootMultiple(const Rational& r, long e) {
  const long m = field_->order;
  long k = ((e % m) + m) % m;
  const QPoly& p = field_->power[static_cast<std::size_t>(k)];
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) coeffs_[i] += r * p[i];
}

Cyclotomic Cyclotomic::liftTo(unsigned largerOrder) const {
  if (largerOrder % order() != 0)
    throw StructuralError("cannot lift order " + std::to_string(order()) + " to " + std::to_string(largerOrder));
  if (largerOrder == order()) return *this;
  Cyclotomic r(largerOrder);
  const long step = largerOrder / order();
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) r.addRootMultiple(coeffs_[k], static_cast<long>(k) * step);
  return r;
}

void Cyclotomic::bringToCommonOrder(const Cyclotomic& o, const char*) {
  if (o.order() == order()) return;
  *this = liftTo(lcmOrder(order(), o.order()));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order() != order()) {
    bringToCommonOrder(o, "+");
    return *this += o.liftTo(order());
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.order() != order()) {
    bringToCommonOrder(o, "-");
    return *this -= o.liftTo(order());
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order() != order()) {
    bringToCommonOrder(o, "*");
    return *this *= o.liftTo(order());
  }
  const std::size_t n = coeffs_.size();
  if (n == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  for (std::size_t i = 0; i < n; ++i) coeffs_[i] = prod[i];
  for (std::size_t k = n; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const QPoly& p = field_->power[k];
    for (std::size_t i = 0; i < n; ++i)
      if (p[i] != 0) coeffs_[i] += prod[k] * p[i];
  }
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (isZero()) throw DivisionError("inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
  if (isRational()) return Cyclotomic(order(), 1 / coeffs_[0]);
  // extended Euclid: track s with s*a == r (mod Phi_m)
  QPoly r0 = field_->modulus, r1 = coeffs_;
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    QPoly q, rem;
    polyDivMod(r0, r1, q, rem);
    QPoly s2 = polySub(s0, polyMul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because Phi_m is irreducible
  Rational c = r1.at(0);
  for (auto& x : s1) x /= c;
  return Cyclotomic(order(), s1);
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
  const unsigned l = lcmOrder(a.order(), b.order());
  return a.liftTo(l).coeffs_ == b.liftTo(l).coeffs_;
}

std::size_t Cyclotomic::bitSize() const {
  std::size_t s = 0;
  for (const auto& c : coeffs_)
    if (c != 0) s += mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
  return s;
}

std::string Cyclotomic::toString() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'z';
    if (k > 1) os << '^' << k;
  }
  if (first) return "0";
  return os.str();
}

Cyclotomic cycArith(CycOp op, const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order())
    throw StructuralError("cyclotomic order mismatch: " + std::to_string(a.order()) + " vs " +
                          std::to_string(b.order()));
  switch (op) {
    case CycOp::Add: return a + b;
    case CycOp::Sub: return a - b;
    case CycOp::Mul: return a * b;
    case CycOp::Div: return a / b;
  }
  return a;
}

}  // namespace thetarel
