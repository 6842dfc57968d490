#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gsurj/intpoly.hpp"
#include "gsurj/primefield.hpp"

namespace gsurj {

// Dense univariate polynomial over Z/m, constant term first, normalized.
class ModPoly {
 public:
  ModPoly(const Zmod& ring, std::vector<uint64_t> coeffs);

  static ModPoly zero(const Zmod& ring) { return ModPoly(ring, {}); }
  static ModPoly constant(const Zmod& ring, uint64_t c) { return ModPoly(ring, {c}); }
  static ModPoly x(const Zmod& ring) { return ModPoly(ring, {0, 1}); }

  const Zmod& ring() const { return ring_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  uint64_t leading() const;
  const std::vector<uint64_t>& coeffs() const { return c_; }

  uint64_t operator()(uint64_t x) const;

  ModPoly operator+(const ModPoly& other) const;
  ModPoly operator-(const ModPoly& other) const;
  ModPoly operator*(const ModPoly& other) const;
  ModPoly scaled(uint64_t c) const;
  bool operator==(const ModPoly& other) const;

  // Monic associate (requires invertible leading coefficient).
  ModPoly monic() const;

 private:
  Zmod ring_;
  std::vector<uint64_t> c_;
  void normalize();
};

// Coefficient-wise reduction of an integer polynomial mod m >= 2 (any
// modulus, not necessarily prime).  The image may drop degree or vanish.
ModPoly reduce_mod(const IntPoly& f, const Zmod& ring);

ModPoly derivative(const ModPoly& f);

// Quotient and remainder; den must be nonzero with invertible leading
// coefficient.
std::pair<ModPoly, ModPoly> divmod(const ModPoly& num, const ModPoly& den);

// Monic gcd over a prime field.
ModPoly polymod_gcd(ModPoly a, ModPoly b);

// Extended gcd over a prime field: returns (g, s, t) with s*a + t*b = g,
// g monic (or zero when both inputs are zero).
struct XgcdResult {
  ModPoly g, s, t;
};
XgcdResult polymod_xgcd(const ModPoly& a, const ModPoly& b);

// base^e mod modulus for e >= 0; modulus monic of degree >= 1.
ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& modulus);
ModPoly powmod(const ModPoly& base, uint64_t e, const ModPoly& modulus);

// Rabin's test over a prime field F_l: P of degree d >= 1 is irreducible
// iff X^(l^d) = X mod P and gcd(X^(l^(d/t)) - X, P) = 1 for every prime
// t | d.  The towers X^(l^k) are built by successive l-th powers.
bool is_irreducible(const ModPoly& P);

// Squarefree decomposition over a prime field F_p, p odd, p >= deg f:
// pairs (monic factor, multiplicity) with distinct multiplicities in
// increasing order; the product of factor^multiplicity is f / lc(f).
// Errors when p < deg f or when f is a p-th power (f' = 0).
std::vector<std::pair<ModPoly, unsigned>> squarefree_decompose(const ModPoly& f);

}  // namespace gsurj
