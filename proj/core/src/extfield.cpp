#include "gsurj/extfield.hpp"

#include <stdexcept>

#include "gsurj/errors.hpp"
#include "gsurj/modpoly.hpp"

namespace gsurj {

ExtField::ExtField(Zmod fq, unsigned r, std::vector<uint64_t> modulus, bool check)
    : fq_(fq), r_(r), mod_(std::move(modulus)) {
  if (r_ < 1 || r_ > kMaxExtDegree) throw std::invalid_argument("extension degree out of range");
  if (mod_.size() != r_ + 1 || mod_.back() != 1)
    throw std::invalid_argument("modulus must be monic of the stated degree");
  for (auto& c : mod_) c = fq_.reduce(c);
  if (check && r_ > 1) {
    ModPoly m(fq_, mod_);
    if (!is_irreducible(m)) throw std::invalid_argument("modulus is reducible");
  }
  if (r_ == 1 && mod_ != std::vector<uint64_t>{0, 1}) {
    // degree-1 presentations are all isomorphic; keep X for canonicity
    if (check) throw std::invalid_argument("degree-1 modulus must be X");
  }
  // X^(r+k) = X^k * X^r = X^k * (-tail(mod)) reduced, built incrementally
  red_.assign(r_ > 1 ? r_ - 1 : 0, {});
  if (r_ > 1) {
    FqElem xr{};  // X^r mod m = -(c_0 + c_1 X + ... + c_{r-1} X^{r-1})
    for (unsigned i = 0; i < r_; ++i) xr.c[i] = fq_.neg(mod_[i]);
    red_[0] = xr.c;
    for (unsigned k = 1; k + 1 < r_; ++k) {
      // multiply previous row by X
      const auto& prev = red_[k - 1];
      std::array<uint64_t, kMaxExtDegree> row{};
      uint64_t top = prev[r_ - 1];
      for (unsigned i = r_ - 1; i > 0; --i) row[i] = prev[i - 1];
      row[0] = 0;
      if (top)
        for (unsigned i = 0; i < r_; ++i) row[i] = fq_.add(row[i], fq_.mul(top, red_[0][i]));
      red_[k] = row;
    }
  }
}

ExtField ExtField::make(uint64_t q, unsigned r) {
  Zmod fq(q);
  if (!fq.prime()) throw std::invalid_argument("base field order must be prime");
  if (r < 1 || r > kMaxExtDegree) throw std::invalid_argument("extension degree out of range");
  if (r == 1) return ExtField(fq, 1, {0, 1}, false);
  // scan monic degree-r candidates in lex order, constant term most
  // significant; the first irreducible one is the canonical modulus
  std::vector<uint64_t> cand(r + 1, 0);
  cand[r] = 1;
  for (;;) {
    ModPoly m(fq, cand);
    if (m.degree() == (int)r && is_irreducible(m)) return ExtField(fq, r, cand, false);
    unsigned i = r - 1;
    for (;;) {
      if (++cand[i] < q) break;
      cand[i] = 0;
      if (i == 0) throw InternalError("no irreducible modulus found");  // unreachable
      --i;
    }
  }
}

ExtField ExtField::with_modulus(uint64_t q, std::vector<uint64_t> modulus) {
  Zmod fq(q);
  if (!fq.prime()) throw std::invalid_argument("base field order must be prime");
  if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
  const unsigned r = (unsigned)modulus.size() - 1;
  return ExtField(fq, r, std::move(modulus), true);
}

mpz_class ExtField::order() const {
  mpz_class o;
  mpz_ui_pow_ui(o.get_mpz_t(), (unsigned long)fq_.modulus(), r_);
  return o;
}

uint64_t ExtField::order_u64() const {
  const uint64_t q = fq_.modulus();
  uint64_t o = 1;
  for (unsigned i = 0; i < r_; ++i) {
    if (o > UINT64_MAX / q) throw std::invalid_argument("field order exceeds 64 bits");
    o *= q;
  }
  return o;
}

FqElem ExtField::one() const {
  FqElem e{};
  e.c[0] = 1;
  return e;
}

FqElem ExtField::from_base(uint64_t a) const {
  FqElem e{};
  e.c[0] = fq_.reduce(a);
  return e;
}

bool ExtField::is_zero(const FqElem& a) const {
  for (unsigned i = 0; i < r_; ++i)
    if (a.c[i]) return false;
  return true;
}

FqElem ExtField::elem_at(uint64_t index) const {
  const uint64_t q = fq_.modulus();
  FqElem e{};
  for (unsigned i = 0; i < r_; ++i) {
    e.c[i] = index % q;
    index /= q;
  }
  return e;
}

uint64_t ExtField::index_of(const FqElem& a) const {
  const uint64_t q = fq_.modulus();
  uint64_t idx = 0;
  for (unsigned i = r_; i-- > 0;) idx = idx * q + a.c[i];
  return idx;
}

void ExtField::next(FqElem& a) const {
  const uint64_t q = fq_.modulus();
  for (unsigned i = 0; i < r_; ++i) {
    if (++a.c[i] < q) return;
    a.c[i] = 0;
  }
}

FqElem ExtField::add(const FqElem& a, const FqElem& b) const {
  FqElem out{};
  for (unsigned i = 0; i < r_; ++i) out.c[i] = fq_.add(a.c[i], b.c[i]);
  return out;
}

FqElem ExtField::sub(const FqElem& a, const FqElem& b) const {
  FqElem out{};
  for (unsigned i = 0; i < r_; ++i) out.c[i] = fq_.sub(a.c[i], b.c[i]);
  return out;
}

FqElem ExtField::mul(const FqElem& a, const FqElem& b) const {
  if (r_ == 1) {
    FqElem out{};
    out.c[0] = fq_.mul(a.c[0], b.c[0]);
    return out;
  }
  std::array<uint64_t, 2 * kMaxExtDegree> conv{};
  for (unsigned i = 0; i < r_; ++i) {
    if (!a.c[i]) continue;
    for (unsigned j = 0; j < r_; ++j)
      if (b.c[j]) conv[i + j] = fq_.add(conv[i + j], fq_.mul(a.c[i], b.c[j]));
  }
  FqElem out{};
  for (unsigned i = 0; i < r_; ++i) out.c[i] = conv[i];
  for (unsigned k = 0; k + 1 < r_; ++k) {
    const uint64_t c = conv[r_ + k];
    if (!c) continue;
    for (unsigned i = 0; i < r_; ++i) out.c[i] = fq_.add(out.c[i], fq_.mul(c, red_[k][i]));
  }
  return out;
}

FqElem ExtField::mul_base(const FqElem& a, uint64_t s) const {
  s = fq_.reduce(s);
  FqElem out{};
  for (unsigned i = 0; i < r_; ++i) out.c[i] = fq_.mul(a.c[i], s);
  return out;
}

FqElem ExtField::pow(FqElem a, mpz_class e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  FqElem acc = one();
  const size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    acc = mul(acc, acc);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = mul(acc, a);
  }
  return acc;
}

int ExtField::quadratic_character(const FqElem& a) const {
  if (fq_.modulus() == 2) throw std::invalid_argument("quadratic character needs odd characteristic");
  if (is_zero(a)) return 0;
  mpz_class e = (order() - 1) / 2;
  FqElem v = pow(a, e);
  if (v == one()) return 1;
  FqElem minus_one = from_base(fq_.neg(1));
  if (!(v == minus_one)) throw InternalError("quadratic character not in {-1, 0, 1}");
  return -1;
}

std::vector<FqElem> ExtField::frobenius_matrix() const {
  const mpz_class q(static_cast<unsigned long>(fq_.modulus()));
  ModPoly m(fq_, mod_);
  std::vector<FqElem> cols(r_);
  for (unsigned j = 0; j < r_; ++j) {
    // (X^j)^q = X^(jq) mod modulus
    ModPoly img = powmod(ModPoly::x(fq_), q * j, m);
    FqElem col{};
    for (int i = 0; i <= img.degree(); ++i) col.c[i] = img.coeff(i);
    cols[j] = col;
  }
  return cols;
}

FqElem ExtField::apply_matrix(const std::vector<FqElem>& m, const FqElem& a) const {
  FqElem out{};
  for (unsigned j = 0; j < r_; ++j) {
    const uint64_t s = a.c[j];
    if (!s) continue;
    for (unsigned i = 0; i < r_; ++i) out.c[i] = fq_.add(out.c[i], fq_.mul(s, m[j].c[i]));
  }
  return out;
}

uint64_t ExtField::norm(const FqElem& a, const std::vector<FqElem>& frob) const {
  if (r_ == 1) return a.c[0];
  FqElem acc = a;
  FqElem conj = a;
  for (unsigned i = 1; i < r_; ++i) {
    conj = apply_matrix(frob, conj);
    acc = mul(acc, conj);
  }
  for (unsigned i = 1; i < r_; ++i)
    if (acc.c[i]) throw InternalError("norm left the base field");
  return acc.c[0];
}

}  // namespace gsurj
