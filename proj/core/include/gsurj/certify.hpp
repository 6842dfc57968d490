#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gsurj/curve.hpp"
#include "gsurj/frobenius.hpp"
#include "gsurj/reduction.hpp"

namespace gsurj {

// Primes l for which the mod-l representation is certified surjective by
// the sieve at the auxiliary prime q: l <= bound, l does not divide
// 6 p q |Phi_p| a_1, and the Frobenius charpoly at q is irreducible mod l.
// When a_1 = 0 the criterion is empty and the certificate is vacuous.
struct Certificate {
  uint64_t p = 0;
  unsigned phi_order = 0;
  uint64_t q = 0;
  mpz_class trace_coeff;
  uint64_t bound = 0;
  std::vector<mpz_class> charpoly;
  std::vector<uint64_t> primes;
  bool vacuous = false;
};

struct CertifyOptions {
  unsigned jobs = 0;  // threads for the mod-l sieve; 0 = hardware concurrency
  CountOptions counting;
};

Certificate certify_q(const HyperellipticCurve& C, const TpResult& tp,
                      const FrobeniusPoly& P, uint64_t bound,
                      const CertifyOptions& opts = {});
// Convenience overload that counts points first.
Certificate certify_q(const HyperellipticCurve& C, const TpResult& tp, uint64_t q,
                      uint64_t bound, const CertifyOptions& opts = {});

// Exact observed density with a fixed 4-place decimal rendering, plus the
// absolute deviation from an optional reference density.
struct DensityLine {
  mpq_class observed;  // member_count / pi(bound)
  std::string decimal;
  std::optional<mpq_class> deviation;
  std::optional<std::string> deviation_decimal;
};
DensityLine density_report(uint64_t member_count, uint64_t bound,
                           std::optional<mpq_class> reference = {});

// Fixed 4-decimal rendering of a rational, round half away from zero.
std::string decimal4(const mpq_class& v);

struct QDensity {
  uint64_t q = 0;
  uint64_t count = 0;
  bool vacuous = false;
  mpq_class observed;
};

struct UnionReport {
  uint64_t bound = 0;
  uint64_t prime_count = 0;  // pi(bound)
  std::vector<Certificate> certificates;  // ascending q, as processed
  std::vector<uint64_t> covered;          // sorted union of certified primes
  std::vector<uint64_t> uncovered;        // l <= bound, l ∤ 6 p |Phi_p|, uncovered
  std::vector<QDensity> per_q;
  uint64_t union_count = 0;
  mpq_class union_density;
  bool early_exited = false;
};

struct UnionOptions {
  bool early_exit = false;  // stop adding q's once uncovered is empty
  CertifyOptions certify;
  // Override charpoly acquisition (e.g. a cache); default counts points.
  std::function<FrobeniusPoly(uint64_t q)> charpoly_source;
  // Observer invoked after each finished certificate.
  std::function<void(const Certificate&)> on_certificate;
};

// Runs certify_q over q_list (nonempty, ascending good primes distinct from
// p) and aggregates coverage of the primes l <= bound.
UnionReport certify_union(const HyperellipticCurve& C, const TpResult& tp,
                          const std::vector<uint64_t>& q_list, uint64_t bound,
                          const UnionOptions& opts = {});

}  // namespace gsurj
