#include "gsurj/modpoly.hpp"

#include <stdexcept>

#include "gsurj/errors.hpp"

namespace gsurj {

namespace {

void require_same_ring(const ModPoly& a, const ModPoly& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("mixed moduli");
}

void require_prime(const Zmod& R, const char* op) {
  if (!R.prime()) throw std::invalid_argument(std::string(op) + " requires a prime modulus");
}

}  // namespace

ModPoly::ModPoly(const Zmod& ring, std::vector<uint64_t> coeffs)
    : ring_(ring), c_(std::move(coeffs)) {
  for (auto& x : c_) x = ring_.reduce(x);
  normalize();
}

void ModPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

uint64_t ModPoly::leading() const {
  if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return c_.back();
}

uint64_t ModPoly::operator()(uint64_t x) const {
  x = ring_.reduce(x);
  uint64_t acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = ring_.add(ring_.mul(acc, x), c_[i]);
  return acc;
}

ModPoly ModPoly::operator+(const ModPoly& other) const {
  require_same_ring(*this, other);
  std::vector<uint64_t> out(std::max(c_.size(), other.c_.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) out[i] = ring_.add(coeff(i), other.coeff(i));
  return ModPoly(ring_, std::move(out));
}

ModPoly ModPoly::operator-(const ModPoly& other) const {
  require_same_ring(*this, other);
  std::vector<uint64_t> out(std::max(c_.size(), other.c_.size()), 0);
  for (size_t i = 0; i < out.size(); ++i) out[i] = ring_.sub(coeff(i), other.coeff(i));
  return ModPoly(ring_, std::move(out));
}

ModPoly ModPoly::operator*(const ModPoly& other) const {
  require_same_ring(*this, other);
  if (is_zero() || other.is_zero()) return zero(ring_);
  std::vector<uint64_t> out(c_.size() + other.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < other.c_.size(); ++j)
      out[i + j] = ring_.add(out[i + j], ring_.mul(c_[i], other.c_[j]));
  return ModPoly(ring_, std::move(out));
}

ModPoly ModPoly::scaled(uint64_t s) const {
  s = ring_.reduce(s);
  std::vector<uint64_t> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = ring_.mul(c_[i], s);
  return ModPoly(ring_, std::move(out));
}

bool ModPoly::operator==(const ModPoly& other) const {
  return ring_ == other.ring_ && c_ == other.c_;
}

ModPoly ModPoly::monic() const {
  if (is_zero()) throw std::invalid_argument("monic associate of zero polynomial");
  if (c_.back() == 1) return *this;
  return scaled(ring_.inv(c_.back()));
}

ModPoly reduce_mod(const IntPoly& f, const Zmod& ring) {
  std::vector<uint64_t> out(f.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = ring.reduce_int(f.coeff(i));
  return ModPoly(ring, std::move(out));
}

ModPoly derivative(const ModPoly& f) {
  if (f.degree() < 1) return ModPoly::zero(f.ring());
  std::vector<uint64_t> out(f.degree());
  for (int i = 1; i <= f.degree(); ++i)
    out[i - 1] = f.ring().mul(f.coeff(i), f.ring().reduce(i));
  return ModPoly(f.ring(), std::move(out));
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& num, const ModPoly& den) {
  require_same_ring(num, den);
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const Zmod& R = num.ring();
  const int dd = den.degree();
  const uint64_t lc_inv = R.inv(den.leading());
  std::vector<uint64_t> rem(num.coeffs());
  if (num.degree() < dd) return {ModPoly::zero(R), num};
  std::vector<uint64_t> quo(num.degree() - dd + 1, 0);
  for (int i = num.degree(); i >= dd; --i) {
    uint64_t c = rem[i];
    if (c == 0) continue;
    uint64_t qc = R.mul(c, lc_inv);
    quo[i - dd] = qc;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] = R.sub(rem[i - dd + j], R.mul(qc, den.coeff(j)));
  }
  return {ModPoly(R, std::move(quo)), ModPoly(R, std::move(rem))};
}

ModPoly polymod_gcd(ModPoly a, ModPoly b) {
  require_same_ring(a, b);
  require_prime(a.ring(), "polynomial gcd");
  while (!b.is_zero()) {
    ModPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

XgcdResult polymod_xgcd(const ModPoly& a, const ModPoly& b) {
  require_same_ring(a, b);
  require_prime(a.ring(), "polynomial xgcd");
  const Zmod& R = a.ring();
  ModPoly r0 = a, r1 = b;
  ModPoly s0 = ModPoly::constant(R, 1), s1 = ModPoly::zero(R);
  ModPoly t0 = ModPoly::zero(R), t1 = ModPoly::constant(R, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  uint64_t inv = R.inv(r0.leading());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

namespace {

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& modulus) {
  return divmod(a * b, modulus).second;
}

}  // namespace

ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& modulus) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (!modulus.is_monic() || modulus.degree() < 1)
    throw std::invalid_argument("powmod modulus must be monic of degree >= 1");
  const Zmod& R = base.ring();
  ModPoly acc = divmod(ModPoly::constant(R, 1), modulus).second;
  ModPoly b = divmod(base, modulus).second;
  const size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    acc = mulmod(acc, acc, modulus);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = mulmod(acc, b, modulus);
  }
  return acc;
}

ModPoly powmod(const ModPoly& base, uint64_t e, const ModPoly& modulus) {
  return powmod(base, mpz_class(static_cast<unsigned long>(e)), modulus);
}

bool is_irreducible(const ModPoly& P) {
  require_prime(P.ring(), "irreducibility test");
  if (P.is_zero() || P.degree() < 1)
    throw std::invalid_argument("irreducibility needs degree >= 1");
  const ModPoly f = P.monic();
  const Zmod& R = f.ring();
  const uint64_t l = R.modulus();
  const unsigned d = (unsigned)f.degree();
  if (d == 1) return true;

  const ModPoly x = divmod(ModPoly::x(R), f).second;
  // towers[k] = X^(l^k) mod f, built by repeated l-th powers
  std::vector<ModPoly> towers;
  towers.reserve(d + 1);
  towers.push_back(x);
  for (unsigned k = 1; k <= d; ++k) towers.push_back(powmod(towers.back(), l, f));

  for (unsigned t = 2; t <= d; ++t) {
    if (d % t != 0) continue;
    bool t_prime = true;
    for (unsigned u = 2; u * u <= t; ++u)
      if (t % u == 0) {
        t_prime = false;
        break;
      }
    if (!t_prime) continue;
    ModPoly g = polymod_gcd(towers[d / t] - x, f);
    if (g.degree() != 0) return false;
  }
  return towers[d] == x;
}

std::vector<std::pair<ModPoly, unsigned>> squarefree_decompose(const ModPoly& f) {
  require_prime(f.ring(), "squarefree decomposition");
  const uint64_t p = f.ring().modulus();
  if (p == 2) throw std::invalid_argument("squarefree decomposition needs odd characteristic");
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  if (p < (uint64_t)f.degree())
    throw std::invalid_argument("characteristic too small: p < deg f");

  ModPoly w = f.monic();
  ModPoly fp = derivative(w);
  if (fp.is_zero()) throw MathConditionError("polynomial is a p-th power (derivative vanishes)");

  std::vector<std::pair<ModPoly, unsigned>> out;
  ModPoly c = polymod_gcd(w, fp);
  w = divmod(w, c).first;
  unsigned mult = 1;
  while (w.degree() > 0) {
    ModPoly y = polymod_gcd(w, c);
    ModPoly z = divmod(w, y).first;
    if (z.degree() > 0) out.emplace_back(z, mult);
    w = std::move(y);
    c = divmod(c, w).first;
    ++mult;
    if (mult > (unsigned)f.degree() + 1) throw InternalError("squarefree decomposition stalled");
  }
  if (c.degree() > 0)
    throw MathConditionError("multiplicity >= characteristic in squarefree decomposition");
  return out;
}

}  // namespace gsurj
