#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

#include "gsurj/primefield.hpp"

namespace gsurj {

inline constexpr unsigned kMaxExtDegree = 12;

// Element of an extension field F_{q^r}, r <= kMaxExtDegree: coefficients
// on the power basis 1, X, ..., X^{r-1}.  Slots at index >= r are zero.
struct FqElem {
  std::array<uint64_t, kMaxExtDegree> c{};
  bool operator==(const FqElem&) const = default;
};

// F_{q^r} presented as F_q[X]/(modulus) for a monic irreducible modulus of
// degree r.  The canonical presentation (make) picks the lexicographically
// smallest irreducible modulus, coefficient tuples (c_0, ..., c_{r-1})
// compared with the constant term c_0 most significant.
class ExtField {
 public:
  static ExtField make(uint64_t q, unsigned r);
  // Caller-supplied monic irreducible modulus (constant term first, length
  // r+1).  Counting results must not depend on this choice.
  static ExtField with_modulus(uint64_t q, std::vector<uint64_t> modulus);

  const Zmod& base() const { return fq_; }
  unsigned degree() const { return r_; }
  const std::vector<uint64_t>& modulus() const { return mod_; }
  mpz_class order() const;          // q^r
  uint64_t order_u64() const;       // q^r, throws if it does not fit

  FqElem zero() const { return FqElem{}; }
  FqElem one() const;
  FqElem from_base(uint64_t a) const;
  bool is_zero(const FqElem& a) const;

  // Enumeration: element number i has coefficients given by the base-q
  // digits of i, c_0 least significant.
  FqElem elem_at(uint64_t index) const;
  uint64_t index_of(const FqElem& a) const;
  void next(FqElem& a) const;  // odometer increment (wraps at q^r - 1)

  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem mul_base(const FqElem& a, uint64_t s) const;
  FqElem pow(FqElem a, mpz_class e) const;

  // a^((q^r - 1)/2) interpreted in {-1, 0, +1}; odd characteristic only.
  int quadratic_character(const FqElem& a) const;

  // Matrix of the q-power Frobenius on the power basis: column j is
  // (X^j)^q mod modulus.
  std::vector<FqElem> frobenius_matrix() const;
  FqElem apply_matrix(const std::vector<FqElem>& m, const FqElem& a) const;
  // Norm to the base field: product of the r Frobenius conjugates.
  uint64_t norm(const FqElem& a, const std::vector<FqElem>& frob) const;

 private:
  ExtField(Zmod fq, unsigned r, std::vector<uint64_t> modulus, bool check);
  Zmod fq_;
  unsigned r_;
  std::vector<uint64_t> mod_;
  // reduction rows: X^(r+k) mod modulus for k = 0..r-2
  std::vector<std::array<uint64_t, kMaxExtDegree>> red_;
};

}  // namespace gsurj
