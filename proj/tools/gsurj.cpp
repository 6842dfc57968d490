// Command-line driver: reduction-type analysis, Frobenius charpolys with a
// point-count cache, per-q surjectivity certificates, and multi-q coverage
// reports for odd-degree hyperelliptic Jacobians.

#include <unistd.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gsurj/certify.hpp"
#include "gsurj/errors.hpp"
#include "gsurj/json_io.hpp"
#include "gsurj/pointcount.hpp"
#include "gsurj/primefield.hpp"
#include "gsurj/version.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write file: " + tmp.string());
    out << text;
  }
  fs::rename(tmp, path);
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
  } else {
    write_atomic(output, text);
  }
}

std::string stamp(bool deterministic) {
  return deterministic ? gsurj::kEpochTimestamp : gsurj::timestamp_now_utc();
}

const char* failure_name(gsurj::TpFailure f) {
  switch (f) {
    case gsurj::TpFailure::kGoodReduction: return "good_reduction";
    case gsurj::TpFailure::kTripleRoot: return "triple_root";
    case gsurj::TpFailure::kMultipleDoubleRoots: return "multiple_double_roots";
    case gsurj::TpFailure::kConjugateDoublePair: return "conjugate_double_pair";
    case gsurj::TpFailure::kDegreeDrop: return "degree_drop";
    default: return "none";
  }
}

// Point counts with a per-(curve, q) cache.  Entries are revalidated by
// recomputing the charpoly from the cached counts; anything inconsistent is
// reported and recomputed.
gsurj::FrobeniusPoly acquire_charpoly(const gsurj::HyperellipticCurve& C, uint64_t q,
                                      unsigned jobs, const std::string& cache_dir) {
  fs::path entry;
  if (!cache_dir.empty()) {
    entry = fs::path(cache_dir) / (C.id() + "_q" + std::to_string(q) + ".json");
    if (fs::exists(entry)) {
      try {
        gsurj::CountsRecord rec = gsurj::counts_record_from_json(slurp(entry.string()));
        if (rec.curve_id != C.id() || rec.q != q)
          throw std::invalid_argument("cache entry is for a different computation");
        gsurj::FrobeniusPoly P = gsurj::charpoly_from_counts(q, C.genus(), rec.counts);
        if (P.coeffs != rec.charpoly)
          throw std::invalid_argument("cached charpoly disagrees with cached counts");
        std::cerr << "cache hit: q=" << q << " (" << entry.string() << ")\n";
        return P;
      } catch (const std::exception& e) {
        std::cerr << "warning: ignoring corrupted cache entry " << entry.string() << ": "
                  << e.what() << "\n";
      }
    }
  }

  gsurj::CountOptions opts;
  opts.jobs = jobs;
  const bool tty = ::isatty(::fileno(stderr));
  std::vector<uint64_t> counts;
  for (unsigned r = 1; r <= C.genus(); ++r) {
    if (tty)
      opts.progress = [q, r](double frac) {
        std::fprintf(stderr, "\rcounting q=%llu r=%u: %3.0f%%", (unsigned long long)q, r,
                     frac * 100.0);
        if (frac >= 1.0) std::fprintf(stderr, "\n");
      };
    counts.push_back(gsurj::count_points(C, q, r, opts));
    std::cerr << "count q=" << q << " r=" << r << ": N=" << counts.back() << "\n";
  }
  gsurj::FrobeniusPoly P = gsurj::charpoly_from_counts(q, C.genus(), counts);

  if (!cache_dir.empty()) {
    fs::create_directories(cache_dir);
    gsurj::CountsRecord rec{C.id(), q, counts, P.coeffs};
    write_atomic(entry, gsurj::counts_record_to_json(rec));
  }
  return P;
}

json tp_to_json(const gsurj::HyperellipticCurve& C, const gsurj::TpResult& res,
                const std::string& generated_at) {
  json j = json::parse(gsurj::curve_to_json(C));
  json out;
  out["curve"] = std::move(j);
  out["curve_id"] = C.id();
  out["p"] = res.p;
  out["ok"] = res.ok;
  if (res.ok) {
    out["double_root"] = res.double_root;
    out["phi_order"] = res.phi_order;
  } else {
    out["failure"] = failure_name(res.failure);
  }
  out["detail"] = res.detail;
  out["version"] = std::string(gsurj::kVersion);
  out["generated_at"] = generated_at;
  return out;
}

int g_exit = 0;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surjectivity sieve for mod-l Galois representations of hyperelliptic Jacobians"};
  app.set_version_flag("--version", std::string(gsurj::kVersion));
  app.require_subcommand(1);

  std::string curve_path, cache_dir, output, out_dir = ".", format = "json";
  unsigned jobs = 0;
  bool deterministic = false, early_exit = false;
  uint64_t p = 0, q = 0, bound = 0, q_min = 3, q_max = 0;

  auto add_common = [&](CLI::App* cmd, bool with_cache) {
    cmd->add_option("curve", curve_path, "curve JSON file (coeffs, genus)")->required();
    cmd->add_flag("--deterministic", deterministic, "fixed timestamp for reproducible output");
    cmd->add_option("--output", output, "write the JSON document here instead of stdout");
    if (with_cache) {
      cmd->add_option("--jobs", jobs, "worker threads (default: hardware concurrency)");
      cmd->add_option("--cache-dir", cache_dir, "point-count cache directory");
    }
  };

  CLI::App* cmd_tp = app.add_subcommand("check-tp", "reduction-type analysis at p");
  add_common(cmd_tp, false);
  cmd_tp->add_option("--p", p, "odd prime of nodal reduction")->required();

  CLI::App* cmd_cp = app.add_subcommand("charpoly", "Frobenius charpoly at a good prime q");
  add_common(cmd_cp, true);
  cmd_cp->add_option("--q", q, "odd prime of good reduction")->required();

  CLI::App* cmd_cert = app.add_subcommand("certify", "certified surjectivity primes from one q");
  add_common(cmd_cert, true);
  cmd_cert->add_option("--p", p, "odd prime of nodal reduction")->required();
  cmd_cert->add_option("--q", q, "odd prime of good reduction")->required();
  cmd_cert->add_option("--bound", bound, "certify primes l <= bound")->required();
  cmd_cert->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* cmd_union = app.add_subcommand("union", "aggregate certificates over a range of q");
  add_common(cmd_union, true);
  cmd_union->add_option("--p", p, "odd prime of nodal reduction")->required();
  cmd_union->add_option("--bound", bound, "certify primes l <= bound")->required();
  cmd_union->add_option("--q-min", q_min, "smallest auxiliary prime (default 3)");
  cmd_union->add_option("--q-max", q_max, "largest auxiliary prime")->required();
  cmd_union->add_flag("--early-exit", early_exit, "stop adding q once every candidate is covered");
  cmd_union->add_option("--out-dir", out_dir, "directory for per-q certificate files");

  cmd_tp->callback([&] {
    gsurj::HyperellipticCurve C = gsurj::curve_from_json(slurp(curve_path));
    gsurj::TpResult res = gsurj::check_condition_tp(C, p);
    emit(tp_to_json(C, res, stamp(deterministic)).dump(2) + "\n", output);
    if (!res.ok) {
      std::cerr << "condition failed at p=" << p << ": " << res.detail << "\n";
      g_exit = 2;
    }
  });

  cmd_cp->callback([&] {
    gsurj::HyperellipticCurve C = gsurj::curve_from_json(slurp(curve_path));
    gsurj::FrobeniusPoly P = acquire_charpoly(C, q, jobs, cache_dir);
    const std::vector<mpz_class> counts = gsurj::predict_counts(P, C.genus());
    json j;
    j["curve_id"] = C.id();
    j["q"] = q;
    json cj = json::array();
    for (const auto& n : counts) cj.push_back(n.get_str());
    j["counts"] = std::move(cj);
    json pj = json::array();
    for (const auto& c : P.coeffs) pj.push_back(c.get_str());
    j["charpoly"] = std::move(pj);
    j["trace_coeff"] = P.trace_coeff().get_str();
    j["version"] = std::string(gsurj::kVersion);
    j["generated_at"] = stamp(deterministic);
    emit(j.dump(2) + "\n", output);
  });

  cmd_cert->callback([&] {
    gsurj::HyperellipticCurve C = gsurj::curve_from_json(slurp(curve_path));
    gsurj::TpResult tp = gsurj::check_condition_tp(C, p);
    if (!tp.ok) throw gsurj::MathConditionError("condition failed at p=" + std::to_string(p) +
                                                ": " + tp.detail);
    gsurj::FrobeniusPoly P = acquire_charpoly(C, q, jobs, cache_dir);
    gsurj::CertifyOptions copts;
    copts.jobs = jobs;
    gsurj::Certificate cert = gsurj::certify_q(C, tp, P, bound, copts);
    if (cert.vacuous)
      std::cerr << "trace coefficient is zero at q=" << q << ": vacuous certificate\n";
    else
      std::cerr << "q=" << q << ": " << cert.primes.size() << " primes certified up to "
                << bound << "\n";
    if (format == "csv")
      emit(gsurj::certificate_to_csv(cert), output);
    else
      emit(gsurj::certificate_to_json(C, cert, stamp(deterministic)), output);
  });

  cmd_union->callback([&] {
    gsurj::HyperellipticCurve C = gsurj::curve_from_json(slurp(curve_path));
    gsurj::TpResult tp = gsurj::check_condition_tp(C, p);
    if (!tp.ok) throw gsurj::MathConditionError("condition failed at p=" + std::to_string(p) +
                                                ": " + tp.detail);
    std::vector<uint64_t> qs;
    for (uint64_t qq : gsurj::good_reduction_primes(C, q_max))
      if (qq >= q_min && qq != p) qs.push_back(qq);
    if (qs.empty())
      throw std::invalid_argument("no good auxiliary primes in [" + std::to_string(q_min) +
                                  ", " + std::to_string(q_max) + "]");
    std::cerr << qs.size() << " auxiliary primes in [" << q_min << ", " << q_max << "]\n";

    fs::create_directories(out_dir);
    const std::string when = stamp(deterministic);
    std::vector<std::string> files;

    gsurj::UnionOptions uopts;
    uopts.early_exit = early_exit;
    uopts.certify.jobs = jobs;
    uopts.charpoly_source = [&](uint64_t qq) {
      return acquire_charpoly(C, qq, jobs, cache_dir);
    };
    uopts.on_certificate = [&](const gsurj::Certificate& cert) {
      const std::string name = "certificate_q" + std::to_string(cert.q) + ".json";
      write_atomic(fs::path(out_dir) / name, gsurj::certificate_to_json(C, cert, when));
      files.push_back(name);
      std::cerr << "q=" << cert.q << ": "
                << (cert.vacuous ? "vacuous" : std::to_string(cert.primes.size()) + " primes")
                << "\n";
    };

    gsurj::UnionReport rep = gsurj::certify_union(C, tp, qs, bound, uopts);
    std::cerr << "union: " << rep.union_count << " of " << rep.prime_count
              << " primes covered; " << rep.uncovered.size() << " uncovered\n";
    emit(gsurj::union_report_to_json(C, rep, files, when), output);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const gsurj::MathConditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gsurj::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return g_exit;
}
