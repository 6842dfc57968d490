#include "gsurj/primes.hpp"

#include <cmath>
#include <cstring>
#include <vector>

namespace gsurj {

std::vector<uint64_t> sieve_primes(uint64_t bound) {
  std::vector<uint64_t> out;
  if (bound < 2) return out;

  const uint64_t root = (uint64_t)std::sqrt((double)bound) + 2;
  std::vector<bool> small(root + 1, true);
  small[0] = small[1] = false;
  std::vector<uint64_t> base;
  for (uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    if (i <= bound) base.push_back(i);
    for (uint64_t j = i * i; j <= root; j += i) small[j] = false;
  }

  out.reserve((size_t)(bound > 16 ? (double)bound / std::log((double)bound) * 1.2 : 8));
  for (uint64_t p : base)
    if (p <= bound) out.push_back(p);

  constexpr uint64_t kSegment = 1 << 16;
  std::vector<bool> seg(kSegment);
  for (uint64_t lo = root + 1; lo <= bound; lo += kSegment) {
    const uint64_t hi = std::min(bound, lo + kSegment - 1);
    std::fill(seg.begin(), seg.end(), true);
    for (uint64_t p : base) {
      if (p * p > hi) break;
      uint64_t start = ((lo + p - 1) / p) * p;
      if (start < p * p) start = p * p;
      for (uint64_t j = start; j <= hi; j += p) seg[j - lo] = false;
    }
    for (uint64_t i = lo; i <= hi; ++i)
      if (seg[i - lo]) out.push_back(i);
  }
  return out;
}

}  // namespace gsurj
