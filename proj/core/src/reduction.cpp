#include "gsurj/reduction.hpp"

#include <stdexcept>

#include "gsurj/errors.hpp"
#include "gsurj/hensel.hpp"
#include "gsurj/modpoly.hpp"
#include "gsurj/primefield.hpp"
#include "gsurj/primes.hpp"

namespace gsurj {

std::vector<uint64_t> good_reduction_primes(const HyperellipticCurve& C, uint64_t bound) {
  std::vector<uint64_t> out;
  for (uint64_t p : sieve_primes(bound)) {
    if (p == 2) continue;  // the Y^2 model always has bad reduction at 2
    if (!mpz_divisible_ui_p(C.disc().get_mpz_t(), (unsigned long)p)) out.push_back(p);
  }
  return out;
}

TpResult check_condition_tp(const HyperellipticCurve& C, uint64_t p) {
  TpResult res;
  res.p = p;
  Zmod Fp(p);
  if (!Fp.prime() || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (!mpz_divisible_ui_p(C.disc().get_mpz_t(), (unsigned long)p)) {
    // monic model: disc(f) mod p = disc(f mod p), so f is squarefree mod p
    res.failure = TpFailure::kGoodReduction;
    res.detail = "p does not divide disc(f): good reduction, nothing to analyze";
    return res;
  }
  if (p < (uint64_t)C.f().degree())
    throw std::invalid_argument("p < deg f: squarefree analysis needs a larger characteristic");

  ModPoly fbar = reduce_mod(C.f(), Fp);
  if (fbar.degree() != C.f().degree()) {
    // unreachable for the monic models accepted by validate()
    res.failure = TpFailure::kDegreeDrop;
    res.detail = "degree of f drops mod p";
    return res;
  }

  auto parts = squarefree_decompose(fbar);
  const ModPoly* doubled = nullptr;
  for (const auto& [factor, mult] : parts) {
    if (mult >= 3) {
      res.failure = TpFailure::kTripleRoot;
      res.detail = "a zero of f mod " + std::to_string(p) + " has multiplicity " +
                   std::to_string(mult);
      return res;
    }
    if (mult == 2) doubled = &factor;
  }
  if (doubled == nullptr)
    throw InternalError("disc(f) vanishes mod p yet f mod p is squarefree");
  if (doubled->degree() > 1) {
    if (doubled->degree() == 2 && is_irreducible(*doubled)) {
      res.failure = TpFailure::kConjugateDoublePair;
      res.detail = "the double zeros form a conjugate pair over F_" + std::to_string(p) +
                   "^2: two nodes, not one";
    } else {
      res.failure = TpFailure::kMultipleDoubleRoots;
      res.detail = std::to_string(doubled->degree()) + " distinct double zeros of f mod " +
                   std::to_string(p);
    }
    return res;
  }

  // unique rational double zero: X + c  =>  abar = -c
  const uint64_t abar = Fp.neg(doubled->coeff(0));
  res.ok = true;
  res.double_root = abar;
  res.phi_order = component_group_order(C, p, abar);
  res.detail = "node at " + std::to_string(abar) + " mod " + std::to_string(p) +
               ", component group of order " + std::to_string(res.phi_order);
  return res;
}

unsigned component_group_order(const HyperellipticCurve& C, uint64_t p, uint64_t double_root) {
  return node_thickness(C.f(), p, double_root);
}

}  // namespace gsurj
