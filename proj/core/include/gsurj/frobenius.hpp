#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "gsurj/curve.hpp"
#include "gsurj/pointcount.hpp"

namespace gsurj {

// Characteristic polynomial of the q-power Frobenius acting on the Tate
// module: monic of degree 2g, integer coefficients, constant term first.
// P(X) = X^2g + a_1 X^(2g-1) + ... + a_2g with a_(2g-i) = q^(g-i) a_i and
// |a_i| <= C(2g, i) q^(i/2).
struct FrobeniusPoly {
  uint64_t q = 0;
  unsigned genus = 0;
  std::vector<mpz_class> coeffs;

  const mpz_class& trace_coeff() const { return coeffs[2 * genus - 1]; }
};

// Power sums of the Frobenius eigenvalues from point counts:
// p_r = q^r + 1 - N_r for r = 1..counts.size().
std::vector<mpz_class> power_sums_from_counts(uint64_t q, const std::vector<uint64_t>& counts);

// Reconstructs P from N_1..N_g via Newton's identities and the functional
// equation, verifying exact divisibility at every step and the Weil bounds
// on every coefficient; violations raise InternalError (the counts cannot
// come from an abelian variety over F_q).
FrobeniusPoly charpoly_from_counts(uint64_t q, unsigned genus,
                                   const std::vector<uint64_t>& counts);

// Inverts the reconstruction: expected N_1..N_rmax for any rmax >= 1, by
// extending the Newton recurrence past degree 2g.
std::vector<mpz_class> predict_counts(const FrobeniusPoly& P, unsigned rmax);

// Count points over F_q..F_{q^g} and reconstruct.
FrobeniusPoly charpoly_for(const HyperellipticCurve& C, uint64_t q,
                           const CountOptions& opts = {});

}  // namespace gsurj
