#include <doctest.h>

#include <random>

#include "gsurj/errors.hpp"
#include "gsurj/intpoly.hpp"
#include "oracles.hpp"

using gsurj::IntPoly;

namespace {

// genus-3 running example: Y^2 = X^7 - 3X^6 - 5X^5 + 15X^4 + 4X^3 - 12X^2 + 7X - 196
const IntPoly kF{-196, 7, -12, 4, 15, -5, -3, 1};

IntPoly from_roots(const std::vector<long>& roots) {
  IntPoly f{1};
  for (long a : roots) f = f * IntPoly{-a, 1};
  return f;
}

}  // namespace

TEST_CASE("degree, coefficients, normalization") {
  CHECK(IntPoly().degree() == -1);
  CHECK(IntPoly().is_zero());
  CHECK(IntPoly{0, 0, 0}.is_zero());
  CHECK(IntPoly{5}.degree() == 0);
  CHECK(kF.degree() == 7);
  CHECK(kF.is_monic());
  CHECK(kF.coeff(0) == -196);
  CHECK(kF.coeff(7) == 1);
  CHECK(kF.coeff(12) == 0);
  CHECK(IntPoly::monomial(3).degree() == 3);
  CHECK(IntPoly::monomial(3, 0).is_zero());
}

TEST_CASE("evaluation") {
  CHECK(kF(1) == -189);
  CHECK(kF(0) == -196);
  CHECK(IntPoly{1, 2, 3}(mpz_class(-2)) == 9);
}

TEST_CASE("arithmetic and the product rule") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> pick(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<mpz_class> a(1 + rng() % 5), b(1 + rng() % 5);
    for (auto& c : a) c = pick(rng);
    for (auto& c : b) c = pick(rng);
    IntPoly f(std::move(a)), g(std::move(b));
    CHECK(derivative(f * g) == derivative(f) * g + f * derivative(g));
    CHECK(f + g == g + f);
    CHECK((f - g) + g == f);
    mpz_class x = pick(rng);
    CHECK((f * g)(x) == f(x) * g(x));
  }
}

TEST_CASE("derivative basics") {
  CHECK(derivative(IntPoly{3}).is_zero());
  CHECK(derivative(IntPoly()).is_zero());
  CHECK(derivative(IntPoly::monomial(7)) == IntPoly::monomial(6, 7));
  // f' of the running example: 7X^6 - 18X^5 - 25X^4 + 60X^3 + 12X^2 - 24X + 7
  CHECK(derivative(kF) == IntPoly{7, -24, 12, 60, -25, -18, 7});
  CHECK(derivative(kF)(0) == 7);
}

TEST_CASE("resultant: pinned values") {
  CHECK(resultant(IntPoly{-1, 0, 1}, IntPoly{-2, 1}) == 3);
  CHECK(resultant(IntPoly{1, 2}, IntPoly{-1, 3}) == 5);
  CHECK(resultant(IntPoly{7}, IntPoly{0, 0, 1}) == 49);     // Res(c, g) = c^deg g
  CHECK(resultant(IntPoly{0, 1}, IntPoly{0, 1}) == 0);      // shared root
  CHECK(resultant(kF, derivative(kF)) == mpz_class("44893451222003295247"));
  CHECK_THROWS_AS(resultant(kF, IntPoly()), std::invalid_argument);
  CHECK_THROWS_AS(resultant(IntPoly(), kF), std::invalid_argument);
}

TEST_CASE("resultant: Res(X-a, X-b) = b - a and the product formula") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<long> pick(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    long a = pick(rng), b = pick(rng);
    CHECK(resultant(IntPoly{-a, 1}, IntPoly{-b, 1}) == b - a);
  }
  // split monic f, g: Res(f, g) = prod over pairs (b_j - a_i)
  std::uniform_int_distribution<size_t> deg(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> as(deg(rng)), bs(deg(rng));
    for (auto& a : as) a = pick(rng);
    for (auto& b : bs) b = pick(rng);
    mpz_class want = 1;
    for (long a : as)
      for (long b : bs) want *= (b - a);
    CHECK(resultant(from_roots(as), from_roots(bs)) == want);
  }
}

TEST_CASE("discriminant: pinned values") {
  CHECK(discriminant(IntPoly{-1, 0, 1}) == 4);
  CHECK(discriminant(IntPoly{1, 0, 1}) == -4);
  CHECK(discriminant(IntPoly{0, -1, 0, 1}) == 4);  // X^3 - X
  CHECK(discriminant(kF) == mpz_class("-44893451222003295247"));
  // prime factorization of |disc|: 7^2 * 73 * 1069421 * 11735871491
  mpz_class prod = mpz_class(49) * 73 * mpz_class("1069421") * mpz_class("11735871491");
  CHECK(mpz_class("44893451222003295247") == prod);
  CHECK_THROWS_AS(discriminant(IntPoly{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(discriminant(IntPoly{5}), std::invalid_argument);
}

TEST_CASE("discriminant of split polynomials: exhaustive over small root sets") {
  // disc(prod (X - a_i)) = prod_{i<j} (a_i - a_j)^2
  std::vector<long> universe{-3, -2, -1, 0, 1, 2, 3};
  const size_t n = universe.size();
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k < 2 || k > 5) continue;
    std::vector<long> roots;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) roots.push_back(universe[i]);
    mpz_class want = 1;
    for (size_t i = 0; i < roots.size(); ++i)
      for (size_t j = i + 1; j < roots.size(); ++j) {
        mpz_class d = roots[i] - roots[j];
        want *= d * d;
      }
    CHECK(discriminant(from_roots(roots)) == want);
  }
}
