#pragma once

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rtdist/chord.hpp"
#include "rtdist/geometry.hpp"
#include "rtdist/kernels.hpp"
#include "rtdist/piecewise.hpp"
#include "rtdist/quadrature.hpp"

namespace rtdist {
namespace detail {

// H*_k(t): the antiderivative of H_k, built from the star kernels.
template <class Real>
Real h_star(const RightTriangleT<Real>& tri, int k, Real t) {
  const Real a = tri.a(), b = tri.b(), c = tri.c(), h = tri.h();
  switch (k) {
    case 1:
      return tri.theta(1) * t * t / 8;
    case 2:
      return tri.theta(2) * t * t / 8 + tri.theta(3) * star_kernel_L1(t, h) +
             c * star_kernel_L2(t, h);
    case 3:
      return a * t + tri.theta(4) * t * t / 2 + tri.theta(3) / 2 * star_kernel_L1(t, h) +
             c / 2 * star_kernel_L2(t, h) + b / (2 * a) * star_kernel_L1(t, a) +
             b / 2 * star_kernel_L2(t, a);
    case 4:
      return tri.theta(5) * t + tri.theta(6) * t * t / 8 + b / (2 * a) * star_kernel_L1(t, a) +
             b / 2 * star_kernel_L2(t, a) + a / (2 * b) * star_kernel_L1(t, b) +
             a / 2 * star_kernel_L2(t, b);
    default:
      throw std::invalid_argument("h_star: segment must be 1..4");
  }
}

// H^n_k(t): the antiderivative of t H*_k(t), built from the n kernels.
template <class Real>
Real h_n(const RightTriangleT<Real>& tri, int k, Real t) {
  const Real a = tri.a(), b = tri.b(), c = tri.c(), h = tri.h();
  const Real t2 = t * t;
  switch (k) {
    case 1:
      return tri.theta(1) * t2 * t2 / 32;
    case 2:
      return tri.theta(2) * t2 * t2 / 32 + tri.theta(3) * n_kernel_L1(t, h) +
             c * n_kernel_L2(t, h);
    case 3:
      return a * t2 * t / 3 + tri.theta(4) * t2 * t2 / 8 + tri.theta(3) / 2 * n_kernel_L1(t, h) +
             c / 2 * n_kernel_L2(t, h) + b / (2 * a) * n_kernel_L1(t, a) +
             b / 2 * n_kernel_L2(t, a);
    case 4:
      return tri.theta(5) * t2 * t / 3 + tri.theta(6) * t2 * t2 / 32 +
             b / (2 * a) * n_kernel_L1(t, a) + b / 2 * n_kernel_L2(t, a) +
             a / (2 * b) * n_kernel_L1(t, b) + a / 2 * n_kernel_L2(t, b);
    default:
      throw std::invalid_argument("h_n: segment must be 1..4");
  }
}

}  // namespace detail

// Per-triangle constants of the J*/J^n prefix ladders, fixed once so that
// pdf/cdf evaluation on a grid costs O(1) kernel calls per point.
template <class Real = double>
struct CumulantTablesT {
  // segment integrals and left-edge values
  Real j1_star_0h{};  // J1*(0,h)
  Real j2_star_ha{};  // J2*(h,a)
  Real j3_star_ab{};  // J3*(a,b), 0 when a == b
  Real h2_star_h{}, h3_star_a{}, h4_star_b{};
  Real hn2_h{}, hn3_a{}, hn4_b{};
  // K-ladder pieces
  Real k1_h{};  // K1(h)
  Real k2_a{};  // K2(a)
  Real k3_b{};  // K3(b)
  // running sums and bracket constants
  Real jstar_prefix[3]{};   // J* accumulated through segments 1..3
  Real jn_prefix[3]{};      // J^n accumulated through segments 1..3
  Real bracket_c2{}, bracket_c3{}, bracket_c4{};  // J*-prefix minus H*_k at the left edge

  static CumulantTablesT compute(const RightTriangleT<Real>& tri) {
    const Real a = tri.a(), b = tri.b(), h = tri.h();
    CumulantTablesT tab;
    tab.j1_star_0h = detail::h_star(tri, 1, h);
    tab.h2_star_h = detail::h_star(tri, 2, h);
    tab.j2_star_ha = detail::h_star(tri, 2, a) - tab.h2_star_h;
    tab.h3_star_a = detail::h_star(tri, 3, a);
    tab.j3_star_ab = detail::h_star(tri, 3, b) - tab.h3_star_a;
    tab.h4_star_b = detail::h_star(tri, 4, b);
    tab.jstar_prefix[0] = tab.j1_star_0h;
    tab.jstar_prefix[1] = tab.jstar_prefix[0] + tab.j2_star_ha;
    tab.jstar_prefix[2] = tab.jstar_prefix[1] + tab.j3_star_ab;
    tab.bracket_c2 = tab.jstar_prefix[0] - tab.h2_star_h;
    tab.bracket_c3 = tab.jstar_prefix[1] - tab.h3_star_a;
    tab.bracket_c4 = tab.jstar_prefix[2] - tab.h4_star_b;
    tab.hn2_h = detail::h_n(tri, 2, h);
    tab.hn3_a = detail::h_n(tri, 3, a);
    tab.hn4_b = detail::h_n(tri, 4, b);
    tab.k1_h = detail::h_n(tri, 1, h);
    tab.k2_a = (a * a - h * h) / 2 * tab.bracket_c2 + detail::h_n(tri, 2, a) - tab.hn2_h;
    tab.k3_b = (b * b - a * a) / 2 * tab.bracket_c3 + detail::h_n(tri, 3, b) - tab.hn3_a;
    tab.jn_prefix[0] = tab.k1_h;
    tab.jn_prefix[1] = tab.jn_prefix[0] + tab.k2_a;
    tab.jn_prefix[2] = tab.jn_prefix[1] + tab.k3_b;
    return tab;
  }
};

using CumulantTables = CumulantTablesT<double>;

// Distance distribution of two independent uniform points in one right
// triangle: density g and distribution function G, both piecewise over
// {h, a, b, c} through the cached ladders.
//
// g can dip below zero by floating cancellation only. Dips within 1e-12 are
// clamped to zero and counted; anything lower throws, since it would mean a
// transcription bug rather than rounding.
template <class Real = double>
class DistanceDistributionT {
 public:
  explicit DistanceDistributionT(const RightTriangleT<Real>& tri)
      : tri_(tri), tab_(CumulantTablesT<Real>::compute(tri)) {}

  DistanceDistributionT(const DistanceDistributionT& other)
      : tri_(other.tri_), tab_(other.tab_), clamped_(other.clamped_.load()) {}

  DistanceDistributionT& operator=(const DistanceDistributionT& other) {
    tri_ = other.tri_;
    tab_ = other.tab_;
    clamped_.store(other.clamped_.load());
    return *this;
  }

  const RightTriangleT<Real>& triangle() const { return tri_; }
  const CumulantTablesT<Real>& tables() const { return tab_; }

  // J*(t) evaluated through segment k's ladder entry.
  Real j_star(int segment, Real t) const {
    switch (segment) {
      case 1: return detail::h_star(tri_, 1, t);
      case 2: return tab_.jstar_prefix[0] + detail::h_star(tri_, 2, t) - tab_.h2_star_h;
      case 3: return tab_.jstar_prefix[1] + detail::h_star(tri_, 3, t) - tab_.h3_star_a;
      case 4: return tab_.jstar_prefix[2] + detail::h_star(tri_, 4, t) - tab_.h4_star_b;
      default: throw std::invalid_argument("j_star: segment must be 1..4");
    }
  }

  // J^n(t) evaluated through segment k's ladder entry (K-ladder).
  Real j_n(int segment, Real t) const {
    const Real a = tri_.a(), b = tri_.b(), h = tri_.h();
    switch (segment) {
      case 1:
        return detail::h_n(tri_, 1, t);
      case 2:
        return tab_.jn_prefix[0] + (t * t - h * h) / 2 * tab_.bracket_c2 +
               detail::h_n(tri_, 2, t) - tab_.hn2_h;
      case 3:
        return tab_.jn_prefix[1] + (t * t - a * a) / 2 * tab_.bracket_c3 +
               detail::h_n(tri_, 3, t) - tab_.hn3_a;
      case 4:
        return tab_.jn_prefix[2] + (t * t - b * b) / 2 * tab_.bracket_c4 +
               detail::h_n(tri_, 4, t) - tab_.hn4_b;
      default:
        throw std::invalid_argument("j_n: segment must be 1..4");
    }
  }

  // g through segment k's formula, unclamped.
  Real pdf_segment(int segment, Real t) const {
    constexpr Real pi = std::numbers::pi_v<Real>;
    const Real area = tri_.area();
    return 2 * t / area * (pi + (j_star(segment, t) - tri_.u() * t) / area);
  }

  // G through segment k's formula, unclamped.
  Real cdf_segment(int segment, Real t) const {
    constexpr Real pi = std::numbers::pi_v<Real>;
    const Real area = tri_.area();
    return (t * t * (pi - 2 * tri_.u() * t / (3 * area)) + 2 * j_n(segment, t) / area) / area;
  }

  PiecewiseEvalT<Real> pdf(Real t) const {
    Branch branch = detail::classify_triangle(tri_, t);
    if (t == tri_.c()) branch = Branch::Seg4;  // g is defined on the closed [0, c]
    if (branch == Branch::Below || branch == Branch::Above) return {Real(0), branch};
    Real v = pdf_segment(detail::segment_of(branch), t);
    if (v < 0) {
      if (v < Real(-1e-12)) throw std::logic_error("distance pdf negative beyond tolerance");
      v = 0;
      ++clamped_;
    }
    return {v, branch};
  }

  PiecewiseEvalT<Real> cdf(Real t) const {
    const Branch branch = detail::classify_triangle(tri_, t);
    if (branch == Branch::Below) return {Real(0), branch};
    if (branch == Branch::Above) return {Real(1), branch};
    const Real v = cdf_segment(detail::segment_of(branch), t);
    return {std::clamp(v, Real(0), Real(1)), branch};
  }

  // E[t] by adaptive quadrature of t g(t), split at the breakpoints.
  Real mean() const {
    return integrate_split([this](Real t) { return t * pdf(t).value; }, Real(0), tri_.c(),
                           {tri_.h(), tri_.a(), tri_.b()}, Real(1e-9));
  }

  long negative_clamp_count() const { return clamped_.load(); }

 private:
  RightTriangleT<Real> tri_;
  CumulantTablesT<Real> tab_;
  mutable std::atomic<long> clamped_{0};
};

using DistanceDistribution = DistanceDistributionT<double>;

// Single-shot conveniences; use DistanceDistributionT for grid evaluation.
template <class Real>
PiecewiseEvalT<Real> distance_pdf(const RightTriangleT<Real>& tri, Real t) {
  return DistanceDistributionT<Real>(tri).pdf(t);
}

template <class Real>
PiecewiseEvalT<Real> distance_cdf(const RightTriangleT<Real>& tri, Real t) {
  return DistanceDistributionT<Real>(tri).cdf(t);
}

template <class Real>
Real mean_distance(const RightTriangleT<Real>& tri) {
  return DistanceDistributionT<Real>(tri).mean();
}

}  // namespace rtdist
