#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "rtdist/chord.hpp"
#include "rtdist/quadrature.hpp"

using namespace rtdist;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<RightTriangle>& test_triangles() {
  static const std::vector<RightTriangle> tris = {
      RightTriangle(1, 1), RightTriangle(3, 4), RightTriangle(1, 20),
      RightTriangle(1, 1.0001)};
  return tris;
}

}  // namespace

TEST_CASE("chord cdf frozen values", "[chord]") {
  // isoceles (1,1): theta_1 = 3 pi + 6, F(s) = theta_1 s / (4u) on [0,h)
  const RightTriangle iso(1, 1);
  CHECK_THAT(iso.theta(1), WithinAbs(3 * kPi + 6, 1e-14));
  const auto e0 = chord_cdf(iso, 0.1);
  CHECK(e0.branch == Branch::Seg1);
  CHECK_THAT(e0.value, WithinAbs(0.11294532166031363, 1e-6));  // (3pi+6)/10 / (4(2+sqrt 2))

  // (3,4) at s = h = 2.4: both adjacent formulas give H(2.4) = 9.5898141637...
  const RightTriangle tri(3, 4);
  CHECK_THAT(tri.u() * chord_cdf_segment(tri, 1, 2.4), WithinAbs(9.5898141637037771, 1e-9));
  CHECK_THAT(tri.u() * chord_cdf_segment(tri, 2, 2.4), WithinAbs(9.5898141637037771, 1e-9));
  const auto eh = chord_cdf(tri, 2.4);
  CHECK(eh.branch == Branch::Seg2);  // breakpoints belong to the right branch
  CHECK_THAT(eh.value, WithinAbs(0.79915118030864809, 1e-6));
}

TEST_CASE("chord cdf edge values", "[chord]") {
  for (const auto& tri : test_triangles()) {
    const auto above = chord_cdf(tri, tri.c());
    CHECK(above.value == 1.0);
    CHECK(above.branch == Branch::Above);
    const auto below = chord_cdf(tri, -1.0);
    CHECK(below.value == 0.0);
    CHECK(below.branch == Branch::Below);
    CHECK(chord_cdf(tri, 0.0).branch == Branch::Seg1);
  }
}

TEST_CASE("equal legs skip the empty Seg3", "[chord]") {
  const RightTriangle iso(2, 2);
  const auto at_a = chord_cdf(iso, iso.a());
  CHECK(at_a.branch == Branch::Seg4);
  // a strict (1, 1.0001) still reports Seg3 inside [a, b)
  const RightTriangle thin(1, 1.0001);
  CHECK(chord_cdf(thin, 1.00005).branch == Branch::Seg3);
}

TEST_CASE("chord cdf is monotone and within [0,1]", "[chord]") {
  for (const auto& tri : test_triangles()) {
    double prev = 0;
    for (int i = 0; i <= 10000; ++i) {
      const double s = tri.c() * i / 10000.0;
      const double v = chord_cdf(tri, s).value;
      REQUIRE(v >= prev);
      REQUIRE(v <= 1.0);
      prev = v;
    }
  }
}

TEST_CASE("chord cdf continuity at the breakpoints", "[chord]") {
  for (const auto& tri : test_triangles()) {
    const auto gap = [&](int left, int right, double x) {
      return std::abs(chord_cdf_segment(tri, left, x) - chord_cdf_segment(tri, right, x));
    };
    CHECK(gap(1, 2, tri.h()) < 1e-10);
    if (tri.legs_equal()) {
      CHECK(gap(2, 4, tri.a()) < 1e-10);
    } else {
      CHECK(gap(2, 3, tri.a()) < 1e-10);
      CHECK(gap(3, 4, tri.b()) < 1e-10);
    }
    CHECK(std::abs(chord_cdf_segment(tri, 4, tri.c()) - 1.0) < 1e-10);
  }
}

TEST_CASE("chord pdf constant branch on the isoceles triangle", "[chord]") {
  const RightTriangle iso(1, 1);
  const double reference = iso.theta(1) / (4 * iso.u());  // 1.1294532166031363
  for (double s : {0.01, 0.3, 0.7 * iso.h()}) {
    const auto e = chord_pdf(iso, s);
    CHECK(e.branch == Branch::Seg1);
    CHECK_THAT(e.value, WithinAbs(reference, 1e-12));
  }
  CHECK_THAT(reference, WithinAbs(1.1294532166031363, 1e-12));
}

TEST_CASE("chord pdf matches central differences of the cdf", "[chord]") {
  for (const auto& tri : test_triangles()) {
    const double step = 1e-6 * tri.c();
    const double edges[5] = {0, tri.h(), tri.a(), tri.b(), tri.c()};
    double worst = 0;
    for (int k = 1; k <= 4; ++k) {
      if (!(edges[k] > edges[k - 1])) continue;
      for (int i = 0; i < 1000; ++i) {
        const double s = edges[k - 1] + (edges[k] - edges[k - 1]) * (i + 0.5) / 1000;
        if (s < 2 * step || s > tri.c() - 2 * step) continue;
        const double fd =
            (chord_cdf(tri, s + step).value - chord_cdf(tri, s - step).value) / (2 * step);
        worst = std::max(worst, std::abs(chord_pdf(tri, s).value - fd));
      }
    }
    CHECK(worst < 1e-5);
  }
}

TEST_CASE("chord pdf right-hand limits at the breakpoints are finite", "[chord]") {
  const RightTriangle tri(3, 4);
  for (double x : {0.0, tri.h(), tri.a(), tri.b()}) {
    const auto e = chord_pdf(tri, x);
    CHECK(std::isfinite(e.value));
    CHECK(e.value >= 0.0);
    // just right of the breakpoint the same branch formula applies
    const auto right = chord_pdf(tri, x + 1e-9);
    CHECK(e.branch == right.branch);
    CHECK_THAT(e.value, WithinAbs(right.value, 1e-4));
  }
  CHECK(chord_pdf(tri, tri.c()).value == 0.0);
  CHECK(chord_pdf(tri, -0.5).value == 0.0);
}

TEST_CASE("chord pdf integrates to one", "[chord]") {
  for (const auto& tri : test_triangles()) {
    const double total = integrate_split([&](double s) { return chord_pdf(tri, s).value; }, 0.0,
                                         tri.c(), {tri.h(), tri.a(), tri.b()}, 1e-10);
    CHECK_THAT(total, WithinAbs(1.0, 1e-8));
  }
}

TEST_CASE("chord pdf is nonnegative", "[chord]") {
  for (const auto& tri : test_triangles()) {
    for (int i = 0; i <= 5000; ++i) {
      const double s = tri.c() * i / 5000.0;
      REQUIRE(chord_pdf(tri, s).value >= 0.0);
    }
  }
}

TEST_CASE("chord cdf scaling covariance", "[chord]") {
  const RightTriangle base(3, 4);
  for (double lambda : {0.1, 7.0}) {
    const RightTriangle scaled(3 * lambda, 4 * lambda);
    for (int i = 0; i <= 500; ++i) {
      const double s = base.c() * i / 500.0;
      CHECK_THAT(chord_cdf(scaled, lambda * s).value - chord_cdf(base, s).value,
                 WithinAbs(0.0, 1e-12));
    }
  }
}
