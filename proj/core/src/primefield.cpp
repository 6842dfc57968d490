#include "gsurj/primefield.hpp"

#include <stdexcept>

namespace gsurj {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)((unsigned __int128)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t acc = 1 % m;
  while (e) {
    if (e & 1) acc = mulmod_u64(acc, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return acc;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven deterministic witness set for 64 bits.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Zmod::Zmod(uint64_t m) : m_(m) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  prime_ = is_prime_u64(m);
  fast_ = m < (uint64_t(1) << 32);
  if (fast_) magic_ = (uint64_t)(((unsigned __int128)1 << 64) / m);
}

uint64_t Zmod::reduce_int(const mpz_class& x) const {
  mpz_class r;
  mpz_class m = mpz_class(static_cast<unsigned long>(m_));
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());  // floor: result in [0, m)
  return mpz_get_ui(r.get_mpz_t());
}

uint64_t Zmod::pow(uint64_t a, uint64_t e) const {
  uint64_t acc = 1 % m_;
  a %= m_;
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

uint64_t Zmod::pow(uint64_t a, const mpz_class& e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (e.fits_ulong_p()) return pow(a, (uint64_t)e.get_ui());
  uint64_t acc = 1 % m_;
  a %= m_;
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    acc = mul(acc, acc);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = mul(acc, a);
  }
  return acc;
}

uint64_t Zmod::inv(uint64_t a) const {
  a %= m_;
  // extended Euclid over signed 128-bit to avoid overflow juggling
  __int128 t = 0, newt = 1;
  __int128 r = m_, newr = a;
  while (newr != 0) {
    __int128 qq = r / newr;
    __int128 tmp = t - qq * newt;
    t = newt;
    newt = tmp;
    tmp = r - qq * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::invalid_argument("not invertible: gcd(a, m) > 1");
  if (t < 0) t += m_;
  return (uint64_t)t;
}

}  // namespace gsurj
