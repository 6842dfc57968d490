#include <doctest.h>

#include <vector>

#include "gsurj/curve.hpp"
#include "gsurj/errors.hpp"
#include "gsurj/pointcount.hpp"
#include "oracles.hpp"

using gsurj::CharMethod;
using gsurj::count_points;
using gsurj::count_points_f;
using gsurj::count_series;
using gsurj::CountOptions;
using gsurj::ExtField;
using gsurj::HyperellipticCurve;
using gsurj::IntPoly;
using gsurj::MathConditionError;

namespace {

HyperellipticCurve example_curve() {
  return HyperellipticCurve::validate(IntPoly{-196, 7, -12, 4, 15, -5, -3, 1}, 3);
}

}  // namespace

TEST_CASE("pinned counts for the genus-3 example") {
  const HyperellipticCurve C = example_curve();
  CHECK(count_series(C, 3, 3) == std::vector<uint64_t>{4, 18, 40});
  CHECK(count_series(C, 5, 3) == std::vector<uint64_t>{6, 34, 162});
  CHECK(count_series(C, 11, 3) == std::vector<uint64_t>{11, 135, 1247});
  CHECK(count_series(C, 13, 3) == std::vector<uint64_t>{9, 183, 2196});
  CHECK(count_points(C, 11, 4) == 14739);
  CHECK(count_points(C, 11, 5) == 161671);
}

TEST_CASE("counts agree with the exhaustive oracle") {
  const HyperellipticCurve C = example_curve();
  const HyperellipticCurve E = HyperellipticCurve::validate(IntPoly{0, -1, 0, 1}, 1);
  const HyperellipticCurve G2 = HyperellipticCurve::validate(IntPoly{9, 4, 4, 4, 1, 1}, 2);
  const std::vector<std::pair<uint64_t, unsigned>> ranges = {
      {3, 7}, {5, 4}, {11, 3}, {13, 2}, {53, 1}};
  for (const auto* C_ptr : {&C, &E, &G2}) {
    for (auto [q, rmax] : ranges) {
      if (mpz_divisible_ui_p(C_ptr->disc().get_mpz_t(), (unsigned long)q)) continue;
      for (unsigned r = 1; r <= rmax; ++r) {
        ExtField F = ExtField::make(q, r);
        CHECK(count_points(*C_ptr, q, r) == oracles::naive_count_points(C_ptr->f(), F));
      }
    }
  }
}

TEST_CASE("the cuspidal model Y^2 = X^(2g+1) has exactly Q + 1 points") {
  for (unsigned g : {1u, 2u, 3u}) {
    std::vector<mpz_class> c(2 * g + 2, 0);
    c.back() = 1;
    const IntPoly f{std::move(c)};
    for (auto [q, r] : std::vector<std::pair<uint64_t, unsigned>>{{5, 2}, {7, 1}, {3, 3}, {11, 1}}) {
      uint64_t Q = 1;
      for (unsigned i = 0; i < r; ++i) Q *= q;
      CHECK(count_points_f(f, q, r) == Q + 1);
    }
  }
}

TEST_CASE("result does not depend on the modulus presentation") {
  const HyperellipticCurve C = example_curve();
  const ExtField canon = ExtField::make(11, 2);
  const ExtField alt = ExtField::with_modulus(11, {4, 1, 1});  // X^2 + X + 4
  CHECK(canon.modulus() != alt.modulus());
  CountOptions oc, oa;
  oc.field = &canon;
  oa.field = &alt;
  CHECK(count_points(C, 11, 2, oc) == 135);
  CHECK(count_points(C, 11, 2, oa) == 135);

  const ExtField alt3 = ExtField::with_modulus(3, {2, 1, 0, 0, 1});  // X^4 + X + 2
  CountOptions oa3;
  oa3.field = &alt3;
  CHECK(count_points(C, 3, 4, oa3) == count_points(C, 3, 4));
}

TEST_CASE("character evaluation methods agree") {
  const HyperellipticCurve C = example_curve();
  for (auto [q, r] : std::vector<std::pair<uint64_t, unsigned>>{{11, 2}, {3, 4}, {13, 2}, {5, 3}}) {
    CountOptions bitmap, ladder, norm;
    bitmap.method = CharMethod::kBitmap;
    ladder.method = CharMethod::kLadder;
    norm.method = CharMethod::kNorm;
    const uint64_t via_bitmap = count_points(C, q, r, bitmap);
    CHECK(via_bitmap == count_points(C, q, r, ladder));
    CHECK(via_bitmap == count_points(C, q, r, norm));
  }
  CountOptions big_bitmap;
  big_bitmap.method = CharMethod::kBitmap;
  CHECK_THROWS_AS(count_points(example_curve(), 101, 4, big_bitmap), std::invalid_argument);
}

TEST_CASE("worker count never changes the answer") {
  const HyperellipticCurve C = example_curve();
  CountOptions serial;
  serial.jobs = 1;
  const uint64_t n37 = count_points(C, 3, 7, serial);
  for (unsigned jobs : {2u, 3u, 8u}) {
    CountOptions o;
    o.jobs = jobs;
    CHECK(count_points(C, 11, 3, o) == 1247);
    CHECK(count_points(C, 3, 7, o) == n37);
  }
}

TEST_CASE("input screening") {
  const HyperellipticCurve C = example_curve();
  CHECK_THROWS_AS(count_points(C, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(count_points(C, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(count_points(C, 11, 0), std::invalid_argument);
  CHECK_THROWS_AS(count_points(C, 11, 13), std::invalid_argument);
  CHECK_THROWS_AS(count_points(C, 7, 1), MathConditionError);
  CHECK_THROWS_AS(count_points(C, 73, 1), MathConditionError);

  CountOptions tight;
  tight.element_budget = 1000;
  CHECK_THROWS_AS(count_points(C, 11, 3, tight), std::invalid_argument);
  CHECK_THROWS_AS(count_points(C, 11, 12, CountOptions{}), std::invalid_argument);  // 11^12 overflows budget

  ExtField wrong = ExtField::make(13, 2);
  CountOptions o;
  o.field = &wrong;
  CHECK_THROWS_AS(count_points(C, 11, 2, o), std::invalid_argument);
  CHECK_THROWS_AS(count_points(C, 13, 1, o), std::invalid_argument);

  CHECK_THROWS_AS(count_points_f(IntPoly{0, 0, 1}, 5, 1), std::invalid_argument);    // even degree
  CHECK_THROWS_AS(count_points_f(IntPoly{0, 1}, 5, 1), std::invalid_argument);       // degree 1
  CHECK_THROWS_AS(count_points_f(IntPoly{0, 0, 0, 2}, 5, 1), std::invalid_argument); // not monic
}

TEST_CASE("counting a singular reduction when explicitly allowed") {
  const HyperellipticCurve C = example_curve();
  CountOptions o;
  o.allow_singular = true;
  const uint64_t n7 = count_points(C, 7, 1, o);
  CHECK(n7 == oracles::naive_count_points(C.f(), ExtField::make(7, 1)));
  CHECK(n7 == count_points_f(C.f(), 7, 1));
  CHECK(count_points(C, 7, 2, o) == oracles::naive_count_points(C.f(), ExtField::make(7, 2)));
}

TEST_CASE("progress reporting is monotone and finishes at 1") {
  const HyperellipticCurve C = example_curve();
  std::vector<double> seen;
  CountOptions o;
  o.jobs = 1;
  o.progress = [&](double v) { seen.push_back(v); };
  const uint64_t with_progress = count_points(C, 3, 10, o);
  CHECK(with_progress == count_points(C, 3, 10));  // reporting must not perturb the count
  REQUIRE(!seen.empty());
  CHECK(seen.back() == 1.0);
  for (size_t i = 0; i < seen.size(); ++i) {
    CHECK(seen[i] >= 0.0);
    CHECK(seen[i] <= 1.0);
    if (i) CHECK(seen[i] >= seen[i - 1]);
  }
  CHECK(seen.size() > 1);  // 3^10 elements is enough for interim reports
}
