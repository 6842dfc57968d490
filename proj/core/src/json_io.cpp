#include "gsurj/json_io.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <ctime>
#include <stdexcept>

#include "gsurj/version.hpp"

namespace gsurj {

namespace {

using json = nlohmann::ordered_json;

mpz_class mpz_from_json(const json& v) {
  if (v.is_string()) return mpz_class(v.get<std::string>());
  if (v.is_number_integer()) return mpz_class((long)v.get<int64_t>());
  throw std::invalid_argument("coefficient must be a decimal string or integer");
}

json coeffs_to_json(const std::vector<mpz_class>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(c.get_str());
  return arr;
}

std::vector<mpz_class> coeffs_from_json(const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("expected a coefficient array");
  std::vector<mpz_class> out;
  out.reserve(arr.size());
  for (const auto& v : arr) out.push_back(mpz_from_json(v));
  return out;
}

json curve_block(const HyperellipticCurve& C) {
  json j;
  j["coeffs"] = coeffs_to_json(C.f().coeffs());
  j["genus"] = C.genus();
  if (!C.label().empty()) j["label"] = C.label();
  return j;
}

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON document");
  return j;
}

}  // namespace

HyperellipticCurve curve_from_json(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.contains("coeffs") || !j.contains("genus"))
    throw std::invalid_argument("curve document needs 'coeffs' and 'genus'");
  if (!j["genus"].is_number_unsigned())
    throw std::invalid_argument("'genus' must be a nonnegative integer");
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw std::invalid_argument("'label' must be a string");
    label = j["label"].get<std::string>();
  }
  return HyperellipticCurve::validate(IntPoly(coeffs_from_json(j["coeffs"])),
                                      j["genus"].get<unsigned>(), std::move(label));
}

std::string curve_to_json(const HyperellipticCurve& C) {
  return curve_block(C).dump(2) + "\n";
}

std::string timestamp_now_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string certificate_to_json(const HyperellipticCurve& C, const Certificate& cert,
                                const std::string& generated_at) {
  json j;
  j["curve"] = curve_block(C);
  j["curve_id"] = C.id();
  j["p"] = cert.p;
  j["phi_order"] = cert.phi_order;
  j["q"] = cert.q;
  j["trace_coeff"] = cert.trace_coeff.get_str();
  j["bound"] = cert.bound;
  j["charpoly"] = coeffs_to_json(cert.charpoly);
  j["primes"] = cert.primes;
  j["vacuous"] = cert.vacuous;
  j["version"] = std::string(kVersion);
  j["generated_at"] = generated_at;
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  json j = parse_or_throw(text);
  Certificate cert;
  cert.p = j.at("p").get<uint64_t>();
  cert.phi_order = j.at("phi_order").get<unsigned>();
  cert.q = j.at("q").get<uint64_t>();
  cert.trace_coeff = mpz_from_json(j.at("trace_coeff"));
  cert.bound = j.at("bound").get<uint64_t>();
  cert.charpoly = coeffs_from_json(j.at("charpoly"));
  cert.primes = j.at("primes").get<std::vector<uint64_t>>();
  cert.vacuous = j.at("vacuous").get<bool>();
  return cert;
}

std::string certificate_to_csv(const Certificate& cert) {
  std::string out = "ell\n";
  for (uint64_t l : cert.primes) {
    out += std::to_string(l);
    out += '\n';
  }
  return out;
}

std::string union_report_to_json(const HyperellipticCurve& C, const UnionReport& rep,
                                 const std::vector<std::string>& certificate_files,
                                 const std::string& generated_at) {
  json j;
  j["curve"] = curve_block(C);
  j["curve_id"] = C.id();
  if (!rep.certificates.empty()) {
    j["p"] = rep.certificates.front().p;
    j["phi_order"] = rep.certificates.front().phi_order;
  }
  j["bound"] = rep.bound;
  j["prime_count"] = rep.prime_count;

  json certs = json::array();
  for (size_t i = 0; i < rep.certificates.size(); ++i) {
    json c;
    c["q"] = rep.certificates[i].q;
    c["count"] = rep.certificates[i].primes.size();
    c["vacuous"] = rep.certificates[i].vacuous;
    if (i < certificate_files.size()) c["file"] = certificate_files[i];
    certs.push_back(std::move(c));
  }
  j["certificates"] = std::move(certs);

  j["union"] = rep.covered;
  j["uncovered"] = rep.uncovered;

  json densities;
  json per_q = json::array();
  for (const auto& d : rep.per_q) {
    json e;
    e["q"] = d.q;
    e["count"] = d.count;
    e["vacuous"] = d.vacuous;
    e["observed"] = d.observed.get_num().get_str() + "/" + d.observed.get_den().get_str();
    e["decimal"] = decimal4(d.observed);
    per_q.push_back(std::move(e));
  }
  densities["per_q"] = std::move(per_q);
  json u;
  u["count"] = rep.union_count;
  u["observed"] =
      rep.union_density.get_num().get_str() + "/" + rep.union_density.get_den().get_str();
  u["decimal"] = decimal4(rep.union_density);
  densities["union"] = std::move(u);
  j["densities"] = std::move(densities);

  j["early_exited"] = rep.early_exited;
  j["version"] = std::string(kVersion);
  j["generated_at"] = generated_at;
  return j.dump(2) + "\n";
}

std::string counts_record_to_json(const CountsRecord& rec) {
  json j;
  j["curve_id"] = rec.curve_id;
  j["q"] = rec.q;
  json counts = json::array();
  for (uint64_t n : rec.counts) counts.push_back(std::to_string(n));
  j["counts"] = std::move(counts);
  j["charpoly"] = coeffs_to_json(rec.charpoly);
  j["version"] = std::string(kVersion);
  return j.dump(2) + "\n";
}

CountsRecord counts_record_from_json(const std::string& text) {
  json j = parse_or_throw(text);
  CountsRecord rec;
  rec.curve_id = j.at("curve_id").get<std::string>();
  rec.q = j.at("q").get<uint64_t>();
  for (const auto& v : j.at("counts")) {
    mpz_class n = mpz_from_json(v);
    if (n < 0 || !n.fits_ulong_p()) throw std::invalid_argument("count out of range");
    rec.counts.push_back(n.get_ui());
  }
  rec.charpoly = coeffs_from_json(j.at("charpoly"));
  return rec;
}

}  // namespace gsurj
