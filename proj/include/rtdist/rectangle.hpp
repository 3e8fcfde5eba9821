#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rtdist/distance.hpp"
#include "rtdist/geometry.hpp"
#include "rtdist/kernels.hpp"
#include "rtdist/piecewise.hpp"
#include "rtdist/quadrature.hpp"

namespace rtdist {
namespace detail {

// Rectangle branch dispatch over [0,a), [a,b), [b,c].
template <class Real>
Branch classify_rect(const RectangleBoxT<Real>& box, Real t) {
  if (t < 0) return Branch::Below;
  if (t >= box.c()) return Branch::Above;
  if (t < box.a()) return Branch::Seg1;
  if (!box.sides_equal() && t < box.b()) return Branch::Seg2;
  return Branch::Seg3;
}

// H*_{R,k}(t) of Ghosh's rectangle density g_R(t) = (2t/area^2) J*_R(t).
template <class Real>
Real h_star_rect(const RectangleBoxT<Real>& box, int k, Real t) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  const Real a = box.a(), b = box.b(), c = box.c();
  switch (k) {
    case 1: return pi * box.area() - box.perimeter() * t + t * t;
    case 2: return -a * a - 2 * b * t + 2 * b * star_kernel_L2(t, a);
    case 3:
      return -(pi * box.area() + c * c) - t * t + 2 * b * star_kernel_L2(t, a) +
             2 * a * star_kernel_L2(t, b);
    default: throw std::invalid_argument("h_star_rect: segment must be 1..3");
  }
}

// H^n_{R,k}(t), the antiderivative of t H*_{R,k}(t).
template <class Real>
Real h_n_rect(const RectangleBoxT<Real>& box, int k, Real t) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  const Real a = box.a(), b = box.b(), c = box.c();
  const Real t2 = t * t;
  switch (k) {
    case 1: return pi * box.area() * t2 / 2 - box.perimeter() * t2 * t / 3 + t2 * t2 / 4;
    case 2: return -a * a * t2 / 2 - 2 * b * t2 * t / 3 + 2 * b * n_kernel_L2(t, a);
    case 3:
      return -(pi * box.area() + c * c) * t2 / 2 - t2 * t2 / 4 + 2 * b * n_kernel_L2(t, a) +
             2 * a * n_kernel_L2(t, b);
    default: throw std::invalid_argument("h_n_rect: segment must be 1..3");
  }
}

}  // namespace detail

// Prefix sums of the rectangle's J^n ladder.
template <class Real = double>
struct RectKernelTablesT {
  Real jn1_0a{};  // J^n_{R,1}(0,a)
  Real jn2_ab{};  // J^n_{R,2}(a,b)
  Real hn2_a{}, hn3_b{};

  static RectKernelTablesT compute(const RectangleBoxT<Real>& box) {
    RectKernelTablesT tab;
    tab.jn1_0a = detail::h_n_rect(box, 1, box.a()) - detail::h_n_rect(box, 1, Real(0));
    tab.hn2_a = detail::h_n_rect(box, 2, box.a());
    tab.jn2_ab = detail::h_n_rect(box, 2, box.b()) - tab.hn2_a;
    tab.hn3_b = detail::h_n_rect(box, 3, box.b());
    return tab;
  }
};

using RectKernelTables = RectKernelTablesT<double>;

// Distance distribution of two independent uniform points in a rectangle
// (Ghosh): density g_R and distribution function G_R, three branches over
// {a, b, c}.
template <class Real = double>
class RectDistanceT {
 public:
  explicit RectDistanceT(const RectangleBoxT<Real>& box)
      : box_(box), tab_(RectKernelTablesT<Real>::compute(box)) {}

  const RectangleBoxT<Real>& box() const { return box_; }
  const RectKernelTablesT<Real>& tables() const { return tab_; }

  Real pdf_segment(int segment, Real t) const {
    const Real area = box_.area();
    return 2 * t / (area * area) * detail::h_star_rect(box_, segment, t);
  }

  Real cdf_segment(int segment, Real t) const {
    const Real area = box_.area();
    Real jn;
    switch (segment) {
      case 1: jn = detail::h_n_rect(box_, 1, t) - detail::h_n_rect(box_, 1, Real(0)); break;
      case 2: jn = tab_.jn1_0a + detail::h_n_rect(box_, 2, t) - tab_.hn2_a; break;
      case 3: jn = tab_.jn1_0a + tab_.jn2_ab + detail::h_n_rect(box_, 3, t) - tab_.hn3_b; break;
      default: throw std::invalid_argument("cdf_segment: segment must be 1..3");
    }
    return 2 * jn / (area * area);
  }

  PiecewiseEvalT<Real> pdf(Real t) const {
    Branch branch = detail::classify_rect(box_, t);
    if (t == box_.c()) branch = Branch::Seg3;  // g_R is defined on the closed [0, c]
    if (branch == Branch::Below || branch == Branch::Above) return {Real(0), branch};
    Real v = pdf_segment(detail::segment_of(branch), t);
    if (v < 0) {
      // only the exact cancellation at t = c can land here
      if (v < Real(-1e-12)) throw std::logic_error("rect pdf negative beyond tolerance");
      v = 0;
    }
    return {v, branch};
  }

  PiecewiseEvalT<Real> cdf(Real t) const {
    const Branch branch = detail::classify_rect(box_, t);
    if (branch == Branch::Below) return {Real(0), branch};
    if (branch == Branch::Above) return {Real(1), branch};
    const Real v = cdf_segment(detail::segment_of(branch), t);
    return {std::clamp(v, Real(0), Real(1)), branch};
  }

  // E[t] via the tail integral of 1 - G_R.
  Real mean() const {
    return integrate_split([this](Real t) { return 1 - cdf(t).value; }, Real(0), box_.c(),
                           {box_.a(), box_.b()}, Real(1e-9));
  }

 private:
  RectangleBoxT<Real> box_;
  RectKernelTablesT<Real> tab_;
};

using RectDistance = RectDistanceT<double>;

// Distance distribution between two points, one uniform in each of the two
// congruent triangles forming the (a, b) rectangle (split along the
// diagonal/hypotenuse). Same-triangle and cross-triangle pairs are equally
// likely, so g_R = (g + g2)/2, i.e. g2 = 2 g_R - g and G2 = 2 G_R - G.
//
// g2 may come out negative only through cancellation; dips within
// 1e-9 * max(g_R) are clamped to zero and counted, lower values throw.
template <class Real = double>
class CrossDistanceT {
 public:
  explicit CrossDistanceT(const RightTriangleT<Real>& tri)
      : tri_dist_(tri), rect_dist_(RectangleBoxT<Real>(tri.a(), tri.b())) {
    const Real c = tri.c();
    for (int i = 0; i <= 1024; ++i) {
      const Real t = c * Real(i) / 1024;
      g_r_max_ = std::max(g_r_max_, rect_dist_.pdf(t).value);
    }
  }

  CrossDistanceT(const CrossDistanceT& other)
      : tri_dist_(other.tri_dist_),
        rect_dist_(other.rect_dist_),
        g_r_max_(other.g_r_max_),
        clamped_(other.clamped_.load()) {}

  const DistanceDistributionT<Real>& same_triangle() const { return tri_dist_; }
  const RectDistanceT<Real>& rectangle() const { return rect_dist_; }

  Real pdf(Real t) const {
    Real v = 2 * rect_dist_.pdf(t).value - tri_dist_.pdf(t).value;
    if (v < 0) {
      if (v < Real(-1e-9) * g_r_max_) throw std::logic_error("cross pdf negative beyond tolerance");
      v = 0;
      ++clamped_;
    }
    return v;
  }

  Real cdf(Real t) const {
    const Real v = 2 * rect_dist_.cdf(t).value - tri_dist_.cdf(t).value;
    return std::clamp(v, Real(0), Real(1));
  }

  long negative_clamp_count() const { return clamped_.load(); }

 private:
  DistanceDistributionT<Real> tri_dist_;
  RectDistanceT<Real> rect_dist_;
  Real g_r_max_ = 0;
  mutable std::atomic<long> clamped_{0};
};

using CrossDistance = CrossDistanceT<double>;

template <class Real>
PiecewiseEvalT<Real> rect_distance_pdf(const RectangleBoxT<Real>& box, Real t) {
  return RectDistanceT<Real>(box).pdf(t);
}

template <class Real>
PiecewiseEvalT<Real> rect_distance_cdf(const RectangleBoxT<Real>& box, Real t) {
  return RectDistanceT<Real>(box).cdf(t);
}

template <class Real>
Real cross_pdf(const RightTriangleT<Real>& tri, Real t) {
  return CrossDistanceT<Real>(tri).pdf(t);
}

template <class Real>
Real cross_cdf(const RightTriangleT<Real>& tri, Real t) {
  return CrossDistanceT<Real>(tri).cdf(t);
}

}  // namespace rtdist
