#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsurj/curve.hpp"

namespace gsurj {

// Odd primes p <= bound with p not dividing disc(f), increasing.
std::vector<uint64_t> good_reduction_primes(const HyperellipticCurve& C, uint64_t bound);

enum class TpFailure {
  kNone,
  kGoodReduction,       // f squarefree mod p: nothing to analyze
  kTripleRoot,          // some root of f mod p has multiplicity >= 3
  kMultipleDoubleRoots, // more than one double root in the algebraic closure
  kConjugateDoublePair, // the double roots form an irreducible quadratic:
                        // a conjugate pair of nodes, not a single F_p-node
  kDegreeDrop,          // deg(f mod p) < deg(f) (impossible for monic f)
};

// Outcome of the reduction-type test at p: either a certificate (the unique
// double root and the component group order) or a classified failure.
struct TpResult {
  uint64_t p = 0;
  bool ok = false;
  TpFailure failure = TpFailure::kNone;
  std::string detail;
  uint64_t double_root = 0;  // abar in [0, p), valid when ok
  unsigned phi_order = 0;    // |Phi_p|, valid when ok
};

// Checks that f mod p has exactly one repeated zero, which is rational with
// multiplicity exactly 2 and all other zeros simple; on success computes the
// component group order.  Requires p an odd prime with p >= deg f (the
// squarefree decomposition underneath needs the characteristic to exceed
// every multiplicity, and deg f is the cheap safe bound).
TpResult check_condition_tp(const HyperellipticCurve& C, uint64_t p);

// Order of the component group of the Neron model at a prime of nodal
// reduction: the p-adic valuation of disc of the Hensel-lifted quadratic.
unsigned component_group_order(const HyperellipticCurve& C, uint64_t p, uint64_t double_root);

}  // namespace gsurj
