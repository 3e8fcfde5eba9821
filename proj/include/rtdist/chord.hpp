#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rtdist/geometry.hpp"
#include "rtdist/kernels.hpp"
#include "rtdist/piecewise.hpp"

namespace rtdist {
namespace detail {

// Half-open branch dispatch over [0,h), [h,a), [a,b), [b,c). With a == b the
// empty Seg3 is skipped.
template <class Real>
Branch classify_triangle(const RightTriangleT<Real>& tri, Real s) {
  if (s < 0) return Branch::Below;
  if (s >= tri.c()) return Branch::Above;
  if (s < tri.h()) return Branch::Seg1;
  if (s < tri.a()) return Branch::Seg2;
  if (!tri.legs_equal() && s < tri.b()) return Branch::Seg3;
  return Branch::Seg4;
}

constexpr int segment_of(Branch branch) {
  switch (branch) {
    case Branch::Seg1: return 1;
    case Branch::Seg2: return 2;
    case Branch::Seg3: return 3;
    case Branch::Seg4: return 4;
    default: return 0;
  }
}

}  // namespace detail

// F restricted to one segment's formula, i.e. H_segment(s)/u. Exposed so
// continuity across breakpoints can be checked from both adjacent branches.
template <class Real>
Real chord_cdf_segment(const RightTriangleT<Real>& tri, int segment, Real s) {
  const Real a = tri.a(), b = tri.b(), c = tri.c(), h = tri.h();
  switch (segment) {
    case 1:
      return tri.theta(1) * s / 4 / tri.u();
    case 2:
      return (tri.theta(2) * s / 4 + tri.theta(3) * kernel_L1(s, h) + c * kernel_L2(s, h)) /
             tri.u();
    case 3:
      return (a + tri.theta(4) * s + tri.theta(3) / 2 * kernel_L1(s, h) +
              c / 2 * kernel_L2(s, h) + b / (2 * a) * kernel_L1(s, a) + b / 2 * kernel_L2(s, a)) /
             tri.u();
    case 4:
      return (tri.theta(5) + tri.theta(6) * s / 4 + b / (2 * a) * kernel_L1(s, a) +
              b / 2 * kernel_L2(s, a) + a / (2 * b) * kernel_L1(s, b) + a / 2 * kernel_L2(s, b)) /
             tri.u();
    default:
      throw std::invalid_argument("chord_cdf_segment: segment must be 1..4");
  }
}

// Chord length distribution function F(s): the invariant measure of the
// lines cutting a chord of length <= s, divided by the perimeter.
template <class Real>
PiecewiseEvalT<Real> chord_cdf(const RightTriangleT<Real>& tri, Real s) {
  const Branch branch = detail::classify_triangle(tri, s);
  if (branch == Branch::Below) return {Real(0), branch};
  if (branch == Branch::Above) return {Real(1), branch};
  const Real v = chord_cdf_segment(tri, detail::segment_of(branch), s);
  return {std::clamp(v, Real(0), Real(1)), branch};
}

// dF/ds through one segment's formula. Each coefficient pair
// P L1(s,m) + Q L2(s,m) in H_segment satisfies P m = Q, which collapses the
// singular parts of the kernel derivatives:
//   d/ds [P L1 + Q L2] = P asin(m/s) - Q sqrt(s^2 - m^2) / s^2.
// The grouped form stays finite at the breakpoints, so the value at s = m is
// the right-hand limit.
template <class Real>
Real chord_pdf_segment(const RightTriangleT<Real>& tri, int segment, Real s) {
  const Real a = tri.a(), b = tri.b(), c = tri.c(), h = tri.h();
  const auto pair_deriv = [s](Real p, Real q, Real m) {
    return p * std::asin(detail::kernel_ratio(s, m)) - q * detail::root_gap(s, m) / (s * s);
  };
  switch (segment) {
    case 1:
      return tri.theta(1) / 4 / tri.u();
    case 2:
      return (tri.theta(2) / 4 + pair_deriv(tri.theta(3), c, h)) / tri.u();
    case 3:
      return (tri.theta(4) + pair_deriv(tri.theta(3) / 2, c / 2, h) +
              pair_deriv(b / (2 * a), b / 2, a)) /
             tri.u();
    case 4:
      return (tri.theta(6) / 4 + pair_deriv(b / (2 * a), b / 2, a) +
              pair_deriv(a / (2 * b), a / 2, b)) /
             tri.u();
    default:
      throw std::invalid_argument("chord_pdf_segment: segment must be 1..4");
  }
}

// Chord length density f = F'. At the breakpoints {0, h, a, b} the value is
// the right-hand derivative (the branch owning the half-open interval); at
// s >= c and s < 0 it is 0.
template <class Real>
PiecewiseEvalT<Real> chord_pdf(const RightTriangleT<Real>& tri, Real s) {
  const Branch branch = detail::classify_triangle(tri, s);
  if (branch == Branch::Below || branch == Branch::Above) return {Real(0), branch};
  return {chord_pdf_segment(tri, detail::segment_of(branch), s), branch};
}

}  // namespace rtdist
