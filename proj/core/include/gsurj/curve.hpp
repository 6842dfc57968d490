#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "gsurj/intpoly.hpp"

namespace gsurj {

class CurveError : public std::invalid_argument {
 public:
  enum class Reason { kBadDegree, kNotMonic, kSingular };
  CurveError(Reason reason, const std::string& what)
      : std::invalid_argument(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// Odd-degree hyperelliptic model Y^2 = f(X) of genus g over Q: f monic of
// degree 2g + 1 with nonzero discriminant.  Instances are only obtainable
// through validate(), so the invariants hold everywhere downstream.
class HyperellipticCurve {
 public:
  static HyperellipticCurve validate(IntPoly f, unsigned genus, std::string label = "");

  const IntPoly& f() const { return f_; }
  unsigned genus() const { return genus_; }
  const mpz_class& disc() const { return disc_; }
  const std::string& label() const { return label_; }

  // Stable content hash of (coefficients, genus); 16 hex digits.
  std::string id() const;

 private:
  HyperellipticCurve(IntPoly f, unsigned genus, mpz_class disc, std::string label)
      : f_(std::move(f)), genus_(genus), disc_(std::move(disc)), label_(std::move(label)) {}
  IntPoly f_;
  unsigned genus_;
  mpz_class disc_;
  std::string label_;
};

}  // namespace gsurj
