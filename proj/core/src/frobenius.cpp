#include "gsurj/frobenius.hpp"

#include <stdexcept>

#include "gsurj/errors.hpp"
#include "gsurj/primefield.hpp"

namespace gsurj {

std::vector<mpz_class> power_sums_from_counts(uint64_t q, const std::vector<uint64_t>& counts) {
  std::vector<mpz_class> out(counts.size());
  mpz_class qr = 1;
  const mpz_class qz(static_cast<unsigned long>(q));
  for (size_t r = 0; r < counts.size(); ++r) {
    qr *= qz;
    out[r] = qr + 1 - mpz_class(static_cast<unsigned long>(counts[r]));
  }
  return out;
}

FrobeniusPoly charpoly_from_counts(uint64_t q, unsigned genus,
                                   const std::vector<uint64_t>& counts) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  if (!is_prime_u64(q)) throw std::invalid_argument("q must be prime");
  if (counts.size() < genus)
    throw std::invalid_argument("need point counts N_1..N_g to reconstruct the charpoly");
  const unsigned n = genus, deg = 2 * n;
  const mpz_class qz(static_cast<unsigned long>(q));

  const std::vector<mpz_class> ps = power_sums_from_counts(q, counts);

  // Newton's identities: k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) p_i
  std::vector<mpz_class> e(n + 1);
  e[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    mpz_class acc = 0;
    for (unsigned i = 1; i <= k; ++i) {
      if (i % 2 == 1)
        acc += e[k - i] * ps[i - 1];
      else
        acc -= e[k - i] * ps[i - 1];
    }
    mpz_class quot, rem;
    mpz_class kk(k);
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), kk.get_mpz_t());
    if (rem != 0)
      throw InternalError("inconsistent point counts: Newton identity is non-integral");
    e[k] = quot;
  }

  // a_k = (-1)^k e_k for the top half; functional equation for the rest
  std::vector<mpz_class> a(deg + 1);
  a[0] = 1;
  for (unsigned k = 1; k <= n; ++k) a[k] = k % 2 == 0 ? e[k] : -e[k];
  mpz_class qpow = 1;
  for (unsigned i = n; i-- > 0;) {
    qpow *= qz;  // q^(n-i)
    a[deg - i] = qpow * a[i];
  }

  // Weil bounds |a_i| <= C(2n, i) q^(i/2), compared by squaring
  mpz_class qi = 1;
  for (unsigned i = 1; i <= deg; ++i) {
    qi *= qz;
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), deg, i);
    if (a[i] * a[i] > binom * binom * qi)
      throw InternalError("inconsistent point counts: Weil bound violated at coefficient " +
                          std::to_string(i));
  }

  FrobeniusPoly P;
  P.q = q;
  P.genus = genus;
  P.coeffs.resize(deg + 1);
  for (unsigned i = 0; i <= deg; ++i) P.coeffs[deg - i] = a[i];

  // full consistency: the polynomial must reproduce every supplied count
  const std::vector<mpz_class> back = predict_counts(P, (unsigned)counts.size());
  for (size_t r = 0; r < counts.size(); ++r)
    if (back[r] != mpz_class(static_cast<unsigned long>(counts[r])))
      throw InternalError("inconsistent point counts: N_" + std::to_string(r + 1) +
                          " is not matched by the reconstructed charpoly");
  return P;
}

std::vector<mpz_class> predict_counts(const FrobeniusPoly& P, unsigned rmax) {
  const unsigned deg = 2 * P.genus;
  if (P.coeffs.size() != deg + 1 || P.coeffs[deg] != 1)
    throw std::invalid_argument("charpoly must be monic of degree 2*genus");
  const mpz_class qz(static_cast<unsigned long>(P.q));

  // c[i] = coefficient of X^(2n - i)
  std::vector<mpz_class> c(deg + 1);
  for (unsigned i = 0; i <= deg; ++i) c[i] = P.coeffs[deg - i];

  std::vector<mpz_class> ps(rmax + 1);  // ps[k] = p_k, 1-based
  for (unsigned k = 1; k <= rmax; ++k) {
    mpz_class acc = 0;
    if (k <= deg) acc = -mpz_class(k) * c[k];
    const unsigned imax = std::min(k - 1, deg);
    for (unsigned i = 1; i <= imax; ++i) acc -= c[i] * ps[k - i];
    ps[k] = acc;
  }

  std::vector<mpz_class> out(rmax);
  mpz_class qr = 1;
  for (unsigned r = 1; r <= rmax; ++r) {
    qr *= qz;
    out[r - 1] = qr + 1 - ps[r];
  }
  return out;
}

FrobeniusPoly charpoly_for(const HyperellipticCurve& C, uint64_t q, const CountOptions& opts) {
  return charpoly_from_counts(q, C.genus(), count_series(C, q, C.genus(), opts));
}

}  // namespace gsurj
