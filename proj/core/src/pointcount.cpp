#include "gsurj/pointcount.hpp"

#include <atomic>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "gsurj/errors.hpp"
#include "gsurj/modpoly.hpp"

namespace gsurj {

namespace {

constexpr uint64_t kBitmapCutoff = uint64_t(1) << 24;

// chi(f(x)) evaluator shared by all workers; immutable after setup.
struct CharContext {
  const ExtField* F = nullptr;
  CharMethod method = CharMethod::kLadder;
  std::vector<uint64_t> square_bits;    // nonzero squares, by element index
  std::vector<FqElem> frob;             // Frobenius matrix for the norm map
  std::vector<int8_t> legendre;         // base-field character table
  uint64_t base_exp = 0;                // (q-1)/2 when no table is feasible

  int chi(const FqElem& v) const {
    switch (method) {
      case CharMethod::kBitmap: {
        const uint64_t i = F->index_of(v);
        return (square_bits[i >> 6] >> (i & 63)) & 1 ? 1 : -1;
      }
      case CharMethod::kNorm: {
        const uint64_t n = F->norm(v, frob);
        if (!legendre.empty()) return legendre[n];
        return F->base().pow(n, base_exp) == 1 ? 1 : -1;
      }
      default:
        return F->quadratic_character(v);
    }
  }
};

}  // namespace

uint64_t count_points(const HyperellipticCurve& C, uint64_t q, unsigned r,
                      const CountOptions& opts) {
  if (q >= 3 && is_prime_u64(q) && !opts.allow_singular &&
      mpz_divisible_ui_p(C.disc().get_mpz_t(), (unsigned long)q))
    throw MathConditionError("q divides disc(f): bad reduction prime");
  return count_points_f(C.f(), q, r, opts);
}

uint64_t count_points_f(const IntPoly& f, uint64_t q, unsigned r, const CountOptions& opts) {
  Zmod Fq(q);
  if (q == 2) throw std::invalid_argument("characteristic 2 unsupported by the Y^2 model");
  if (!Fq.prime()) throw std::invalid_argument("q must be an odd prime");
  if (r < 1 || r > kMaxExtDegree) throw std::invalid_argument("extension degree out of range");
  if (f.degree() < 3 || f.degree() % 2 == 0 || f.coeff(f.degree()) != 1)
    throw std::invalid_argument("f must be monic of odd degree >= 3");

  // q^r within the enumeration budget, checked without overflow
  uint64_t Q = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (Q > opts.element_budget / q)
      throw std::invalid_argument("q^r exceeds the enumeration budget");
    Q *= q;
  }
  if (Q > opts.element_budget)
    throw std::invalid_argument("q^r exceeds the enumeration budget");

  std::optional<ExtField> own;
  const ExtField* F = opts.field;
  if (F == nullptr) {
    own.emplace(ExtField::make(q, r));
    F = &*own;
  } else if (F->base().modulus() != q || F->degree() != r) {
    throw std::invalid_argument("field override has the wrong order");
  }

  // f with coefficients pushed to F_q, leading first for Horner
  std::vector<uint64_t> fc(f.coeffs().size());
  for (size_t i = 0; i < fc.size(); ++i) fc[i] = Fq.reduce_int(f.coeff(i));

  CharContext cc;
  cc.F = F;
  cc.method = opts.method;
  if (cc.method == CharMethod::kAuto)
    cc.method = Q <= kBitmapCutoff ? CharMethod::kBitmap
              : r >= 2             ? CharMethod::kNorm
                                   : CharMethod::kLadder;
  switch (cc.method) {
    case CharMethod::kBitmap: {
      if (Q > kBitmapCutoff)
        throw std::invalid_argument("square bitmap limited to fields of at most 2^24 elements");
      cc.square_bits.assign((Q >> 6) + 1, 0);
      FqElem y = F->elem_at(1);
      for (uint64_t i = 1; i < Q; ++i, F->next(y)) {
        const uint64_t s = F->index_of(F->mul(y, y));
        cc.square_bits[s >> 6] |= uint64_t(1) << (s & 63);
      }
      break;
    }
    case CharMethod::kNorm: {
      cc.frob = F->frobenius_matrix();
      if (q <= kBitmapCutoff) {
        cc.legendre.assign(q, -1);
        cc.legendre[0] = 0;
        for (uint64_t x = 1; x < q; ++x) cc.legendre[Fq.mul(x, x)] = 1;
      } else {
        cc.base_exp = (q - 1) / 2;
      }
      break;
    }
    case CharMethod::kLadder:
      break;
    default:
      throw std::invalid_argument("unresolved character method");
  }

  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  if (jobs > Q) jobs = (unsigned)Q;

  std::vector<long long> partial(jobs, 0);
  std::atomic<uint64_t> done{0};
  std::mutex progress_mu;

  auto work = [&](unsigned w, uint64_t lo, uint64_t hi) {
    const size_t deg = fc.size() - 1;
    long long sum = 0;
    FqElem x = F->elem_at(lo);
    constexpr uint64_t kBlock = 1 << 15;
    uint64_t since_report = 0;
    for (uint64_t i = lo; i < hi; ++i, F->next(x)) {
      // Horner over F_{q^r}
      FqElem acc = F->from_base(fc[deg]);
      for (size_t k = deg; k-- > 0;) {
        acc = F->mul(acc, x);
        acc.c[0] = Fq.add(acc.c[0], fc[k]);
      }
      if (!F->is_zero(acc)) sum += cc.chi(acc);
      if (opts.progress && ++since_report == kBlock) {
        since_report = 0;
        done.fetch_add(kBlock, std::memory_order_relaxed);
        if (w == 0) {
          std::lock_guard<std::mutex> lock(progress_mu);
          opts.progress((double)done.load(std::memory_order_relaxed) / (double)Q);
        }
      }
    }
    partial[w] = sum;
  };

  if (jobs <= 1) {
    work(0, 0, Q);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    const uint64_t chunk = Q / jobs, extra = Q % jobs;
    uint64_t lo = 0;
    for (unsigned w = 0; w < jobs; ++w) {
      const uint64_t hi = lo + chunk + (w < extra ? 1 : 0);
      pool.emplace_back(work, w, lo, hi);
      lo = hi;
    }
    for (auto& t : pool) t.join();
  }

  long long char_sum = 0;
  for (long long s : partial) char_sum += s;
  if (opts.progress) opts.progress(1.0);

  // N = Q + 1 + sum chi(f(x)), with the odd-degree point at infinity
  const long long n_signed = (long long)Q + 1 + char_sum;
  if (n_signed < 0) throw InternalError("negative point count");
  const uint64_t N = (uint64_t)n_signed;

  // Hasse-Weil window: |N - (Q+1)| <= 2g sqrt(Q), compared by squaring;
  // holds at the arithmetic genus also for singular models
  const unsigned g = (unsigned)(f.degree() - 1) / 2;
  const __int128 dev = (__int128)char_sum;
  if (dev * dev > (__int128)4 * g * g * (__int128)Q)
    throw InternalError("point count violates the Hasse-Weil bound");
  return N;
}

std::vector<uint64_t> count_series(const HyperellipticCurve& C, uint64_t q, unsigned rmax,
                                   const CountOptions& opts) {
  std::vector<uint64_t> out;
  out.reserve(rmax);
  for (unsigned r = 1; r <= rmax; ++r) out.push_back(count_points(C, q, r, opts));
  return out;
}

}  // namespace gsurj
