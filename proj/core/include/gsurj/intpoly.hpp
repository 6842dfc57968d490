#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gsurj {

// Dense univariate polynomial over Z.  Coefficients are stored constant
// term first; the representation is normalized (no trailing zeros), so the
// zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly zero() { return IntPoly(); }
  // X^k with unit coefficient
  static IntPoly monomial(unsigned k, const mpz_class& c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  // Coefficient of X^i; zero beyond the degree.
  const mpz_class& coeff(size_t i) const;
  const mpz_class& leading() const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  mpz_class operator()(const mpz_class& x) const;

  IntPoly operator+(const IntPoly& other) const;
  IntPoly operator-(const IntPoly& other) const;
  IntPoly operator*(const IntPoly& other) const;
  bool operator==(const IntPoly& other) const { return coeffs_ == other.coeffs_; }

  std::string str() const;  // human-readable, highest degree first

 private:
  std::vector<mpz_class> coeffs_;
};

IntPoly derivative(const IntPoly& f);

// Resultant of f and g, both nonzero, as the determinant of the Sylvester
// matrix laid out with deg(f) rows of g's coefficients on top.  With this
// orientation Res(f, g) = lc(g)^deg(f) * prod f(beta) over the roots beta
// of g; in particular Res(X - a, X - b) = b - a.
mpz_class resultant(const IntPoly& f, const IntPoly& g);

// (-1)^(d(d-1)/2) Res(f, f') / lc(f) for d = deg(f) >= 2.
mpz_class discriminant(const IntPoly& f);

}  // namespace gsurj
