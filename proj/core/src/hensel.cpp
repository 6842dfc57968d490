#include "gsurj/hensel.hpp"

#include <stdexcept>
#include <utility>

#include "gsurj/errors.hpp"
#include "gsurj/modpoly.hpp"
#include "gsurj/primefield.hpp"

namespace gsurj {

namespace {

// Dense mpz polynomials with all arithmetic reduced into [0, M).
using Vec = std::vector<mpz_class>;

void trim(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Vec modv(Vec v, const mpz_class& M) {
  for (auto& c : v) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
  trim(v);
  return v;
}

Vec addv(const Vec& a, const Vec& b, const mpz_class& M) {
  Vec out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return modv(std::move(out), M);
}

Vec subv(const Vec& a, const Vec& b, const mpz_class& M) {
  Vec out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] -= b[i];
  }
  return modv(std::move(out), M);
}

Vec mulv(const Vec& a, const Vec& b, const mpz_class& M) {
  if (a.empty() || b.empty()) return {};
  Vec out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return modv(std::move(out), M);
}

// Long division by a monic divisor; valid over Z/M for any M.
std::pair<Vec, Vec> divmod_monic(Vec num, const Vec& den, const mpz_class& M) {
  if (den.empty() || den.back() != 1) throw InternalError("division by non-monic polynomial");
  const int dd = (int)den.size() - 1;
  if ((int)num.size() - 1 < dd) return {Vec{}, std::move(num)};
  Vec quo(num.size() - dd, 0);
  for (int i = (int)num.size() - 1; i >= dd; --i) {
    mpz_class c = num[i];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
    if (c == 0) continue;
    quo[i - dd] = c;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return {modv(std::move(quo), M), modv(std::move(num), M)};
}

Vec promote(const ModPoly& a) {
  Vec v(a.coeffs().size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = mpz_class(static_cast<unsigned long>(a.coeff(i)));
  return v;
}

bool congruent_mod_p(const Vec& a, const ModPoly& b, const Zmod& Fp) {
  ModPoly red = reduce_mod(IntPoly(a), Fp);
  return red == b;
}

}  // namespace

NodalLift lift_nodal_quadratic(const IntPoly& f, uint64_t p, uint64_t double_root,
                               unsigned precision) {
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  Zmod Fp(p);
  if (!Fp.prime() || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (!f.is_monic()) throw std::invalid_argument("f must be monic");
  const uint64_t abar = Fp.reduce(double_root);

  ModPoly fbar = reduce_mod(f, Fp);
  ModPoly lin(Fp, {Fp.neg(abar), 1});
  ModPoly h0 = lin * lin;
  auto [g0, rem0] = divmod(fbar, h0);
  if (!rem0.is_zero())
    throw std::invalid_argument("given point is not a double zero of f mod p");
  if (g0(abar) == 0)
    throw std::invalid_argument("zero of f mod p has multiplicity > 2");
  XgcdResult xg = polymod_xgcd(g0, h0);
  if (xg.g.degree() != 0) throw InternalError("node and cofactor share a factor");

  Vec g = promote(g0), h = promote(h0), s = promote(xg.s), t = promote(xg.t);
  Vec fint(f.coeffs().begin(), f.coeffs().end());
  const Vec one{mpz_class(1)};

  const mpz_class P(static_cast<unsigned long>(p));
  mpz_class M = P;
  unsigned k = 1;
  while (k < precision) {
    k *= 2;
    const mpz_class M2 = M * M;
    const Vec fr = modv(fint, M2);

    // one quadratic step: correct the factors, then the Bezout pair
    Vec e = subv(fr, mulv(g, h, M2), M2);
    auto [q, r] = divmod_monic(mulv(s, e, M2), h, M2);
    Vec gs = addv(g, addv(mulv(t, e, M2), mulv(q, g, M2), M2), M2);
    Vec hs = addv(h, r, M2);
    Vec b = subv(addv(mulv(s, gs, M2), mulv(t, hs, M2), M2), one, M2);
    auto [c, d] = divmod_monic(mulv(s, b, M2), hs, M2);
    s = subv(s, d, M2);
    t = subv(t, addv(mulv(t, b, M2), mulv(c, gs, M2), M2), M2);
    g = std::move(gs);
    h = std::move(hs);
    M = M2;

    if (mulv(g, h, M) != fr) throw InternalError("lift lost the product invariant");
    if (!congruent_mod_p(h, h0, Fp) || !congruent_mod_p(g, g0, Fp))
      throw InternalError("lift drifted mod p");
    if (subv(addv(mulv(s, g, M), mulv(t, h, M), M), one, M) != Vec{})
      throw InternalError("lift lost the Bezout identity");
  }

  mpz_class Mf;
  mpz_ui_pow_ui(Mf.get_mpz_t(), (unsigned long)p, precision);
  Vec hq = modv(h, Mf), gq = modv(g, Mf);
  if (hq.size() != 3 || hq.back() != 1) throw InternalError("lifted quadratic is not monic");
  return NodalLift{precision, std::move(hq), std::move(gq)};
}

unsigned node_thickness(const IntPoly& f, uint64_t p, uint64_t double_root,
                        unsigned start_precision, unsigned max_precision) {
  if (start_precision < 2) throw std::invalid_argument("start precision must be >= 2");
  for (unsigned N = start_precision; N <= max_precision; N *= 2) {
    NodalLift lift = lift_nodal_quadratic(f, p, double_root, N);
    mpz_class disc = lift.quadratic[1] * lift.quadratic[1] - 4 * lift.quadratic[0];
    mpz_class M;
    mpz_ui_pow_ui(M.get_mpz_t(), (unsigned long)p, N);
    mpz_fdiv_r(disc.get_mpz_t(), disc.get_mpz_t(), M.get_mpz_t());
    if (disc != 0) {
      unsigned v = 0;
      while (mpz_divisible_ui_p(disc.get_mpz_t(), (unsigned long)p)) {
        mpz_divexact_ui(disc.get_mpz_t(), disc.get_mpz_t(), (unsigned long)p);
        ++v;
      }
      // the valuation is certified only when well inside the window
      if (v < N / 2) return v;
    }
  }
  throw InternalError("node thickness not certified within maximum p-adic precision");
}

}  // namespace gsurj
