#include "gsurj/certify.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "gsurj/errors.hpp"
#include "gsurj/modpoly.hpp"
#include "gsurj/primes.hpp"

namespace gsurj {

namespace {

IntPoly charpoly_as_intpoly(const std::vector<mpz_class>& coeffs) {
  return IntPoly(std::vector<mpz_class>(coeffs));
}

}  // namespace

Certificate certify_q(const HyperellipticCurve& C, const TpResult& tp, const FrobeniusPoly& P,
                      uint64_t bound, const CertifyOptions& opts) {
  if (!tp.ok) throw std::invalid_argument("a passing reduction-type certificate is required");
  const uint64_t q = P.q;
  if (q == tp.p) throw std::invalid_argument("auxiliary prime q must differ from p");
  if (q < 3 || !is_prime_u64(q)) throw std::invalid_argument("q must be an odd prime");
  if (mpz_divisible_ui_p(C.disc().get_mpz_t(), (unsigned long)q))
    throw MathConditionError("q divides disc(f): bad reduction prime");
  if (P.genus != C.genus() || P.coeffs.size() != 2 * C.genus() + 1)
    throw std::invalid_argument("charpoly does not match the curve's genus");

  Certificate cert;
  cert.p = tp.p;
  cert.phi_order = tp.phi_order;
  cert.q = q;
  cert.trace_coeff = P.trace_coeff();
  cert.bound = bound;
  cert.charpoly = P.coeffs;

  if (cert.trace_coeff == 0) {
    cert.vacuous = true;  // the divisibility condition excludes every l
    return cert;
  }

  // D = 6 p q |Phi_p| |a_1|: candidates must not divide it
  mpz_class D = 6 * cert.trace_coeff;
  mpz_abs(D.get_mpz_t(), D.get_mpz_t());
  D *= mpz_class(static_cast<unsigned long>(tp.p));
  D *= mpz_class(static_cast<unsigned long>(q));
  D *= mpz_class(static_cast<unsigned long>(tp.phi_order));

  const IntPoly Pz = charpoly_as_intpoly(P.coeffs);
  const std::vector<uint64_t> candidates = sieve_primes(bound);

  auto sieve_range = [&](size_t lo, size_t hi, std::vector<uint64_t>& hits) {
    for (size_t i = lo; i < hi; ++i) {
      const uint64_t l = candidates[i];
      if (mpz_divisible_ui_p(D.get_mpz_t(), (unsigned long)l)) continue;
      Zmod Fl(l);
      if (is_irreducible(reduce_mod(Pz, Fl))) hits.push_back(l);
    }
  };

  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  if (jobs > candidates.size()) jobs = std::max<size_t>(1, candidates.size());

  if (jobs <= 1 || candidates.size() < 64) {
    sieve_range(0, candidates.size(), cert.primes);
  } else {
    std::vector<std::vector<uint64_t>> parts(jobs);
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    const size_t chunk = candidates.size() / jobs, extra = candidates.size() % jobs;
    size_t lo = 0;
    for (unsigned w = 0; w < jobs; ++w) {
      const size_t hi = lo + chunk + (w < extra ? 1 : 0);
      pool.emplace_back(sieve_range, lo, hi, std::ref(parts[w]));
      lo = hi;
    }
    for (auto& t : pool) t.join();
    for (const auto& part : parts)
      cert.primes.insert(cert.primes.end(), part.begin(), part.end());
  }
  return cert;
}

Certificate certify_q(const HyperellipticCurve& C, const TpResult& tp, uint64_t q,
                      uint64_t bound, const CertifyOptions& opts) {
  if (q == tp.p) throw std::invalid_argument("auxiliary prime q must differ from p");
  CountOptions counting = opts.counting;
  if (counting.jobs == 0) counting.jobs = opts.jobs;
  return certify_q(C, tp, charpoly_for(C, q, counting), bound, opts);
}

std::string decimal4(const mpq_class& v) {
  mpz_class num = v.get_num(), den = v.get_den();
  const bool neg = num < 0;
  if (neg) num = -num;
  // round(|v| * 10^4), half away from zero
  mpz_class scaled = (num * 20000 + den) / (2 * den);
  mpz_class ip = scaled / 10000, fp = scaled % 10000;
  std::string frac = fp.get_str();
  frac.insert(0, 4 - frac.size(), '0');
  return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

DensityLine density_report(uint64_t member_count, uint64_t bound,
                           std::optional<mpq_class> reference) {
  const uint64_t pi = sieve_primes(bound).size();
  if (pi == 0) throw std::invalid_argument("no primes below the bound");
  DensityLine line;
  line.observed = mpq_class(member_count, pi);
  line.observed.canonicalize();
  line.decimal = decimal4(line.observed);
  if (reference) {
    mpq_class dev = line.observed - *reference;
    if (dev < 0) dev = -dev;
    line.deviation = dev;
    line.deviation_decimal = decimal4(dev);
  }
  return line;
}

UnionReport certify_union(const HyperellipticCurve& C, const TpResult& tp,
                          const std::vector<uint64_t>& q_list, uint64_t bound,
                          const UnionOptions& opts) {
  if (!tp.ok) throw std::invalid_argument("a passing reduction-type certificate is required");
  if (q_list.empty()) throw std::invalid_argument("q_list must be nonempty");

  std::vector<uint64_t> qs = q_list;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  for (uint64_t q : qs)
    if (q == tp.p) throw std::invalid_argument("auxiliary prime q must differ from p");

  UnionReport rep;
  rep.bound = bound;
  const std::vector<uint64_t> all = sieve_primes(bound);
  rep.prime_count = all.size();
  if (rep.prime_count == 0) throw std::invalid_argument("no primes below the bound");

  // l is a candidate for coverage unless it divides 6 p |Phi_p|
  const uint64_t small = 6 * tp.p * tp.phi_order;
  std::vector<uint64_t> want;
  for (uint64_t l : all)
    if (small % l != 0) want.push_back(l);

  std::vector<uint64_t> covered;
  auto recompute_uncovered = [&] {
    rep.uncovered.clear();
    for (uint64_t l : want)
      if (!std::binary_search(covered.begin(), covered.end(), l)) rep.uncovered.push_back(l);
  };

  for (uint64_t q : qs) {
    FrobeniusPoly P = opts.charpoly_source ? opts.charpoly_source(q)
                                           : charpoly_for(C, q, opts.certify.counting);
    Certificate cert = certify_q(C, tp, P, bound, opts.certify);

    std::vector<uint64_t> merged;
    merged.reserve(covered.size() + cert.primes.size());
    std::set_union(covered.begin(), covered.end(), cert.primes.begin(), cert.primes.end(),
                   std::back_inserter(merged));
    covered = std::move(merged);

    rep.per_q.push_back(QDensity{cert.q, cert.primes.size(), cert.vacuous,
                                 mpq_class(cert.primes.size(), rep.prime_count)});
    rep.per_q.back().observed.canonicalize();
    if (opts.on_certificate) opts.on_certificate(cert);
    rep.certificates.push_back(std::move(cert));

    if (opts.early_exit) {
      recompute_uncovered();
      if (rep.uncovered.empty()) {
        rep.early_exited = true;
        break;
      }
    }
  }

  recompute_uncovered();
  rep.covered = std::move(covered);
  rep.union_count = rep.covered.size();
  rep.union_density = mpq_class(rep.union_count, rep.prime_count);
  rep.union_density.canonicalize();
  return rep;
}

}  // namespace gsurj
