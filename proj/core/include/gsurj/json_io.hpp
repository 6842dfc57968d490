#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsurj/certify.hpp"
#include "gsurj/curve.hpp"

namespace gsurj {

// Curve input document: {"coeffs": [decimal strings, constant term first],
// "genus": g, "label": optional}.  Throws std::invalid_argument on
// malformed documents; validation errors propagate as CurveError.
HyperellipticCurve curve_from_json(const std::string& text);
std::string curve_to_json(const HyperellipticCurve& C);

// RFC 3339 UTC timestamp for the current time.
std::string timestamp_now_utc();
// Fixed timestamp emitted under --deterministic.
inline constexpr const char* kEpochTimestamp = "1970-01-01T00:00:00Z";

std::string certificate_to_json(const HyperellipticCurve& C, const Certificate& cert,
                                const std::string& generated_at);
Certificate certificate_from_json(const std::string& text);

// One certified prime per line, "ell" header.
std::string certificate_to_csv(const Certificate& cert);

std::string union_report_to_json(const HyperellipticCurve& C, const UnionReport& rep,
                                 const std::vector<std::string>& certificate_files,
                                 const std::string& generated_at);

// Cached point-count record for one (curve, q).
struct CountsRecord {
  std::string curve_id;
  uint64_t q = 0;
  std::vector<uint64_t> counts;
  std::vector<mpz_class> charpoly;
};
std::string counts_record_to_json(const CountsRecord& rec);
CountsRecord counts_record_from_json(const std::string& text);

}  // namespace gsurj
