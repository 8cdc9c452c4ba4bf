#include "thetarel/rational.hpp"

#include <sstream>

#include "thetarel/errors.hpp"

namespace thetarel {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw StructuralError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw StructuralError("matrix product shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

IntMatrix IntMatrix::scaled(const BigInt& f) const {
  IntMatrix r = *this;
  for (auto& x : r.data_) x *= f;
  return r;
}

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Rational(m(i, j));
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw StructuralError("inverse of non-square matrix");
  RationalMatrix a = m;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw DivisionError("singular matrix has no inverse");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(c, j), a(piv, j));
        std::swap(inv(c, j), inv(piv, j));
      }
    Rational s = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw StructuralError("determinant of non-square matrix");
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

Rational parseRational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw InputError("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  Rational r;
  // mpq_set_str accepts "a/b" but not a zero denominator or stray characters.
  const auto slash = s.find('/');
  auto digitsOk = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!digitsOk(s.substr(0, slash)) ||
      (slash != std::string::npos && (!digitsOk(s.substr(slash + 1)) || s[slash + 1] == '-')))
    throw InputError("malformed rational literal '" + s + "'");
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw InputError("malformed rational literal '" + s + "'");
  if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string toString(const Rational& r) { return r.get_str(); }

std::string toString(const RationalVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

BigInt floorOf(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational fracPart(const Rational& r) { return r - Rational(floorOf(r)); }

bool isIntegral(const Rational& r) { return r.get_den() == 1; }

BigInt lcmOfDenominators(const RationalVector& v) {
  BigInt l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

}  // namespace thetarel
