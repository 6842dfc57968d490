#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gsurj/curve.hpp"
#include "gsurj/extfield.hpp"

namespace gsurj {

// How the quadratic character of f(x) is evaluated during enumeration.
enum class CharMethod {
  kAuto,    // bitmap when the field is small, norm map otherwise
  kLadder,  // x^((Q-1)/2) by repeated squaring, per element
  kBitmap,  // precomputed table of nonzero squares (fields up to 2^24)
  kNorm,    // push to the base field through the norm, one Legendre lookup
};

struct CountOptions {
  uint64_t element_budget = uint64_t(1) << 31;
  unsigned jobs = 0;  // worker threads; 0 = hardware concurrency
  CharMethod method = CharMethod::kAuto;
  // Count over this field instead of the canonical one (must have the same
  // order); results are presentation-independent.
  const ExtField* field = nullptr;
  // Skip the good-reduction check (test hook for degenerate models).
  bool allow_singular = false;
  // Called with fractions in [0, 1] at coarse milestones.
  std::function<void(double)> progress;
};

// Exact number of points of Y^2 = f(X) over F_{q^r}, including the single
// point at infinity of the odd-degree model.  q must be an odd prime of
// good reduction, r >= 1, and q^r within the element budget.  The result is
// independent of jobs and of the field presentation.
uint64_t count_points(const HyperellipticCurve& C, uint64_t q, unsigned r,
                      const CountOptions& opts = {});

// Same count for a bare monic polynomial of odd degree >= 3, without any
// good-reduction screening; accepts models whose reduction is singular.
uint64_t count_points_f(const IntPoly& f, uint64_t q, unsigned r,
                        const CountOptions& opts = {});

// N_1, ..., N_rmax as one call.
std::vector<uint64_t> count_series(const HyperellipticCurve& C, uint64_t q, unsigned rmax,
                                   const CountOptions& opts = {});

}  // namespace gsurj
