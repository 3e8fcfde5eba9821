#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "rtdist/quadrature.hpp"
#include "rtdist/rectangle.hpp"

using namespace rtdist;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("rectangle pdf frozen value on the unit square", "[rectangle]") {
  const RectDistance sq{RectangleBox(1, 1)};
  // (2 t / area^2) (pi area - perimeter t + t^2) at t = 1/2
  const auto e = sq.pdf(0.5);
  CHECK(e.branch == Branch::Seg1);
  CHECK_THAT(e.value, WithinAbs(kPi - 1.75, 1e-12));  // 1.3915926535897932
}

TEST_CASE("rectangle pdf edge behavior", "[rectangle]") {
  for (const auto box : {RectangleBox(1, 1), RectangleBox(1, 5), RectangleBox(2, 3)}) {
    const RectDistance dist(box);
    CHECK(dist.pdf(0.0).value == 0.0);
    CHECK_THAT(dist.pdf(box.c()).value, WithinAbs(0.0, 1e-10));
    CHECK(dist.pdf(box.c()).branch == Branch::Seg3);
    CHECK(dist.pdf(-1.0).value == 0.0);
    CHECK(dist.pdf(box.c() + 1.0).value == 0.0);
  }
}

TEST_CASE("rectangle pdf integrates to one", "[rectangle]") {
  for (const auto box : {RectangleBox(1, 1), RectangleBox(1, 5), RectangleBox(2, 3)}) {
    const RectDistance dist(box);
    const double total = integrate_split([&](double t) { return dist.pdf(t).value; }, 0.0,
                                         box.c(), {box.a(), box.b()}, 1e-10);
    CHECK_THAT(total, WithinAbs(1.0, 1e-8));
  }
}

TEST_CASE("rectangle cdf edges, monotonicity and continuity", "[rectangle]") {
  for (const auto box : {RectangleBox(1, 1), RectangleBox(1, 5)}) {
    const RectDistance dist(box);
    CHECK(dist.cdf(box.c()).value == 1.0);
    CHECK(dist.cdf(-0.5).value == 0.0);
    double prev = 0;
    for (int i = 0; i <= 2000; ++i) {
      const double v = dist.cdf(box.c() * i / 2000.0).value;
      REQUIRE(v >= prev - 1e-15);
      prev = v;
    }
  }
  const RectDistance thin{RectangleBox(1, 5)};
  CHECK(std::abs(thin.cdf_segment(1, 1.0) - thin.cdf_segment(2, 1.0)) < 1e-10);
  CHECK(std::abs(thin.cdf_segment(2, 5.0) - thin.cdf_segment(3, 5.0)) < 1e-10);
  CHECK(std::abs(thin.cdf_segment(3, thin.box().c()) - 1.0) < 1e-10);
}

TEST_CASE("unit square mean distance constant", "[rectangle]") {
  // (2 + sqrt 2 + 5 asinh 1) / 15 = 0.52140543316472068
  const double reference = (2 + std::sqrt(2.0) + 5 * std::asinh(1.0)) / 15;
  CHECK_THAT(reference, WithinAbs(0.52140543316472068, 1e-15));
  CHECK_THAT(RectDistance{RectangleBox(1, 1)}.mean(), WithinAbs(reference, 1e-6));
}

TEST_CASE("cross distribution identities", "[rectangle]") {
  for (const auto& tri : {RightTriangle(1, 5), RightTriangle(3, 4), RightTriangle(1, 1)}) {
    const CrossDistance cross(tri);
    const DistanceDistribution same(tri);
    const RectDistance rect{RectangleBox(tri.a(), tri.b())};

    // (g + g2)/2 = g_R pointwise; G2 = 1 above c; G2(eps) > 0
    for (int i = 0; i <= 1000; ++i) {
      const double t = tri.c() * i / 1000.0;
      REQUIRE(std::abs(2 * rect.pdf(t).value - same.pdf(t).value - cross.pdf(t)) < 1e-12);
    }
    CHECK(cross.cdf(tri.c()) == 1.0);
    CHECK(cross.cdf(tri.c() + 1.0) == 1.0);
    CHECK(cross.cdf(0.0) == 0.0);
    CHECK(cross.pdf(0.0) == 0.0);
    CHECK(cross.cdf(tri.c() * 1e-3) > 0.0);  // shared hypotenuse: infimum distance 0
  }
}

TEST_CASE("cross cdf is monotone within [0,1]", "[rectangle]") {
  const CrossDistance cross{RightTriangle(1, 5)};
  double prev = 0;
  for (int i = 0; i <= 2000; ++i) {
    const double v = cross.cdf(RightTriangle(1, 5).c() * i / 2000.0);
    REQUIRE(v >= prev - 1e-15);
    REQUIRE(v <= 1.0);
    prev = v;
  }
}

TEST_CASE("results are invariant under input order swap", "[rectangle]") {
  const RectDistance r1{RectangleBox(2, 3)};
  const RectDistance r2{RectangleBox(3, 2)};
  const CrossDistance c1{RightTriangle(2, 3)};
  const CrossDistance c2{RightTriangle(3, 2)};
  for (int i = 0; i <= 100; ++i) {
    const double t = r1.box().c() * i / 100.0;
    CHECK(r1.pdf(t).value == r2.pdf(t).value);
    CHECK(c1.cdf(t) == c2.cdf(t));
  }
}
