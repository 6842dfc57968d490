#include "gsurj/intpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "gsurj/errors.hpp"

namespace gsurj {

namespace {

void strip_trailing_zeros(std::vector<mpz_class>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  strip_trailing_zeros(coeffs_);
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  strip_trailing_zeros(coeffs_);
}

IntPoly IntPoly::monomial(unsigned k, const mpz_class& c) {
  if (c == 0) return IntPoly();
  std::vector<mpz_class> v(k + 1, 0);
  v[k] = c;
  return IntPoly(std::move(v));
}

const mpz_class& IntPoly::coeff(size_t i) const {
  static const mpz_class kZero = 0;
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const mpz_class& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return coeffs_.back();
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
  mpz_class acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
  std::vector<mpz_class> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + other.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& other) const {
  std::vector<mpz_class> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - other.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
  if (is_zero() || other.is_zero()) return IntPoly();
  std::vector<mpz_class> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  return IntPoly(std::move(out));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    mpz_class a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "X";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPoly derivative(const IntPoly& f) {
  if (f.degree() < 1) return IntPoly();
  std::vector<mpz_class> out(f.degree());
  for (int i = 1; i <= f.degree(); ++i) out[i - 1] = f.coeff(i) * i;
  return IntPoly(std::move(out));
}

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
  const int df = f.degree(), dg = g.degree();
  const int n = df + dg;
  if (n == 0) return 1;

  // Sylvester matrix, highest-degree coefficients left: df shifted copies
  // of g on top, dg shifted copies of f below.
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
  for (int row = 0; row < df; ++row)
    for (int j = 0; j <= dg; ++j) m[row][row + j] = g.coeff(dg - j);
  for (int row = 0; row < dg; ++row)
    for (int j = 0; j <= df; ++j) m[df + row][row + j] = f.coeff(df - j);

  // Bareiss fraction-free elimination; all divisions are exact.
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (m[i][k] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (r != 0) throw InternalError("Bareiss elimination: inexact division");
        m[i][j] = q;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

mpz_class discriminant(const IntPoly& f) {
  const int d = f.degree();
  if (d < 2) throw std::invalid_argument("discriminant requires degree >= 2");
  const IntPoly fp = derivative(f);
  if (fp.is_zero()) return 0;
  mpz_class res = resultant(f, fp);
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
  if (r != 0) throw InternalError("discriminant: resultant not divisible by leading coefficient");
  return (d * (d - 1) / 2) % 2 == 0 ? q : -q;
}

}  // namespace gsurj
