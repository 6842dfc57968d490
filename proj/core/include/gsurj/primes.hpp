#pragma once

#include <cstdint>
#include <vector>

namespace gsurj {

// All primes <= bound, increasing (segmented Eratosthenes).
std::vector<uint64_t> sieve_primes(uint64_t bound);

}  // namespace gsurj
