#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace gsurj {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

// The ring Z/m for a word-size modulus m >= 2.  Elements are canonical
// representatives in [0, m).  Primality of m is established once at
// construction; operations that require a field check the flag.
class Zmod {
 public:
  explicit Zmod(uint64_t m);

  uint64_t modulus() const { return m_; }
  bool prime() const { return prime_; }

  uint64_t reduce(uint64_t x) const { return x % m_; }
  // Canonical representative of an arbitrary integer (negatives map to [0, m)).
  uint64_t reduce_int(const mpz_class& x) const;

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= m_ || s < a ? s - m_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + (m_ - b); }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : m_ - a; }

  uint64_t mul(uint64_t a, uint64_t b) const {
    if (fast_) {
      uint64_t x = a * b;  // exact: a, b < m < 2^32
      uint64_t q = (uint64_t)(((unsigned __int128)x * magic_) >> 64);
      uint64_t r = x - q * m_;
      while (r >= m_) r -= m_;
      return r;
    }
    return (uint64_t)((unsigned __int128)a * b % m_);
  }

  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t pow(uint64_t a, const mpz_class& e) const;

  // Inverse of a unit; throws std::invalid_argument if gcd(a, m) > 1.
  uint64_t inv(uint64_t a) const;

  bool operator==(const Zmod& other) const { return m_ == other.m_; }

 private:
  uint64_t m_ = 2;
  uint64_t magic_ = 0;
  bool fast_ = false;
  bool prime_ = false;
};

}  // namespace gsurj
