#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "rtdist/kernels.hpp"
#include "rtdist/quadrature.hpp"

using namespace rtdist;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("chord kernels at the closed-form anchors", "[kernels]") {
  CHECK_THAT(kernel_L1(2.0, 2.0), WithinAbs(2.0 * kPi / 2, 1e-15));
  CHECK_THAT(kernel_L1(4.0, 2.0), WithinAbs(4.0 * kPi / 6, 1e-15));
  CHECK_THAT(kernel_L1(2.4, 2.4), WithinAbs(2.4 * kPi / 2, 1e-12));  // = 3.7699112...
  CHECK_THAT(kernel_L2(2.0, 2.0), WithinAbs(0.0, 1e-15));
  CHECK_THAT(kernel_L2(4.0, 2.0), WithinAbs(std::sqrt(3.0) / 2, 1e-15));
  CHECK_THAT(kernel_L2(5.0, 3.0), WithinAbs(0.8, 1e-15));  // 3-4-5
}

TEST_CASE("kernel domain checks and clamping", "[kernels]") {
  CHECK_THROWS_AS(kernel_L1(1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(kernel_L2(2.0 * (1 - 1e-6), 2.0), std::domain_error);
  CHECK_THROWS_AS(kernel_L1(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(kernel_L1(-1.0, 1.0), std::domain_error);
  // within the 1e-9 relative slack the argument is clamped, not rejected
  CHECK_THAT(kernel_L1(2.0 * (1 - 1e-10), 2.0), WithinAbs(2.0 * kPi / 2, 1e-9));
  CHECK(std::isfinite(kernel_L2(2.0 * (1 - 1e-10), 2.0)));
}

TEST_CASE("star kernels at the anchors", "[kernels]") {
  CHECK_THAT(star_kernel_L1(1.0, 1.0), WithinAbs(kPi / 4, 1e-15));
  CHECK_THAT(star_kernel_L1(3.0, 3.0), WithinAbs(9.0 * kPi / 4, 1e-14));
  CHECK_THAT(star_kernel_L2(3.0, 3.0), WithinAbs(3.0 * kPi / 2, 1e-14));
}

TEST_CASE("n kernel closed form at t = 2m", "[kernels]") {
  // L2n(2m, m) = (3 sqrt(3)/2 + pi/3) m^3
  const double reference = 3 * std::sqrt(3.0) / 2 + kPi / 3;  // 3.6452737625499137
  CHECK_THAT(n_kernel_L2(2.0, 1.0), WithinAbs(reference, 1e-14));
  CHECK_THAT(n_kernel_L2(5.0, 2.5), WithinRel(reference * 2.5 * 2.5 * 2.5, 1e-14));

  // and against the quadrature of its defining integral t L2*(t, m)
  const double integral =
      integrate([&](double t) { return t * star_kernel_L2(t, 1.0); }, 1.0, 2.0, 1e-12);
  CHECK_THAT(n_kernel_L2(2.0, 1.0) - n_kernel_L2(1.0, 1.0), WithinAbs(integral, 1e-10));
}

TEST_CASE("derivative ladder by central differences", "[kernels]") {
  for (double m : {0.5, 2.4, 17.0}) {
    const double step = 1e-6 * m;
    double worst = 0;
    for (int i = 1; i <= 1000; ++i) {
      const double t = m + 2 * m * i / 1000.0;  // (m, 3m]
      const auto fd = [&](auto f) { return (f(t + step, m) - f(t - step, m)) / (2 * step); };
      worst = std::max(worst, std::abs(fd(star_kernel_L1<double>) - kernel_L1(t, m)));
      worst = std::max(worst, std::abs(fd(star_kernel_L2<double>) - kernel_L2(t, m)));
      worst = std::max(worst, std::abs(fd(n_kernel_L1<double>) - t * star_kernel_L1(t, m)));
      worst = std::max(worst, std::abs(fd(n_kernel_L2<double>) - t * star_kernel_L2(t, m)));
    }
    CHECK(worst < 1e-6 * std::max(1.0, m * m * m));
  }
}

TEST_CASE("star kernels are antiderivatives of the chord kernels", "[kernels]") {
  // quadrature route, independent of the finite-difference route above
  const double m = 2.4;
  for (double t : {2.5, 3.1, 6.0}) {
    const double i1 = integrate([&](double s) { return kernel_L1(s, m); }, m, t, 1e-12);
    const double i2 = integrate([&](double s) { return kernel_L2(s, m); }, m, t, 1e-12);
    CHECK_THAT(star_kernel_L1(t, m) - star_kernel_L1(m, m), WithinAbs(i1, 1e-10));
    CHECK_THAT(star_kernel_L2(t, m) - star_kernel_L2(m, m), WithinAbs(i2, 1e-10));
  }
}
