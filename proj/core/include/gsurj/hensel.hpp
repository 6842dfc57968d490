#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "gsurj/intpoly.hpp"

namespace gsurj {

// f = quadratic * cofactor as polynomials mod p^precision, where the
// quadratic is the monic degree-2 lift of (X - a)^2.
struct NodalLift {
  unsigned precision;
  std::vector<mpz_class> quadratic;  // constant term first, length 3
  std::vector<mpz_class> cofactor;
};

// Lifts the coprime factorization f = (X - a)^2 * h (mod p), h(a) != 0, to
// the requested p-adic precision by quadratic Hensel steps.  Requires f
// monic; validates the mod-p hypotheses and the product invariant at every
// doubling.
NodalLift lift_nodal_quadratic(const IntPoly& f, uint64_t p, uint64_t double_root,
                               unsigned precision);

// v_p(disc(quadratic)) for the lifted quadratic factor.  The valuation m is
// certified once m < N/2 at working precision N; N starts at
// start_precision and doubles up to max_precision, after which an
// InternalError is raised (the node would be too thick to certify).
unsigned node_thickness(const IntPoly& f, uint64_t p, uint64_t double_root,
                        unsigned start_precision = 16, unsigned max_precision = 1024);

}  // namespace gsurj
