#include "gsurj/curve.hpp"

#include <cinttypes>
#include <cstdio>

namespace gsurj {

namespace {

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

HyperellipticCurve HyperellipticCurve::validate(IntPoly f, unsigned genus, std::string label) {
  const int want = 2 * (int)genus + 1;
  if (genus < 1 || f.degree() != want)
    throw CurveError(CurveError::Reason::kBadDegree,
                     "f must have degree 2*genus + 1 = " + std::to_string(want) +
                         ", got degree " + std::to_string(f.degree()));
  if (!f.is_monic())
    throw CurveError(CurveError::Reason::kNotMonic, "f must be monic");
  mpz_class disc = discriminant(f);
  if (disc == 0)
    throw CurveError(CurveError::Reason::kSingular, "f has a repeated root (discriminant 0)");
  return HyperellipticCurve(std::move(f), genus, std::move(disc), std::move(label));
}

std::string HyperellipticCurve::id() const {
  std::string material = "g" + std::to_string(genus_);
  for (const auto& c : f_.coeffs()) {
    material += '|';
    material += c.get_str();
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, fnv1a64(material));
  return std::string(buf);
}

}  // namespace gsurj
