#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "rtdist/random.hpp"

namespace rtdist {

template <class Real = double>
struct Point2T {
  Real x{};
  Real y{};
};

using Point2 = Point2T<double>;

template <class Real>
Real distance(const Point2T<Real>& p, const Point2T<Real>& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

namespace detail {

template <class Real>
Real wrap_angle(Real angle, Real period) {
  Real w = std::fmod(angle, period);
  if (w < 0) w += period;
  return w;
}

}  // namespace detail

// A line in Hesse normal form  x cos(psi) + y sin(psi) = p  with p >= 0 and
// psi in [0, 2pi). psi is the direction of the normal; phi is the direction
// of the line itself, related by psi = phi + pi/2 (mod 2pi). The factory
// used at construction is recorded so callers can tell which convention the
// line came from.
template <class Real = double>
class LineT {
 public:
  enum class Convention { Psi, Phi };

  static LineT from_psi(Real p, Real psi) { return LineT(p, psi, Convention::Psi); }

  static LineT from_phi(Real p, Real phi) {
    return LineT(p, phi + std::numbers::pi_v<Real> / 2, Convention::Phi);
  }

  Real p() const { return p_; }
  Real psi() const { return psi_; }

  // Direction of the line, folded into [0, pi).
  Real phi() const {
    constexpr Real pi = std::numbers::pi_v<Real>;
    return detail::wrap_angle(psi_ - pi / 2, pi);
  }

  Convention convention() const { return convention_; }

  // Signed distance of q from the line, along the normal.
  Real signed_offset(const Point2T<Real>& q) const { return q.x * nx_ + q.y * ny_ - p_; }

 private:
  LineT(Real p, Real psi, Convention convention) : convention_(convention) {
    constexpr Real two_pi = 2 * std::numbers::pi_v<Real>;
    if (!(std::isfinite(p) && std::isfinite(psi)))
      throw std::domain_error("Line: p and angle must be finite");
    if (p < 0) {  // same line, normal flipped
      p = -p;
      psi += std::numbers::pi_v<Real>;
    }
    p_ = p;
    psi_ = detail::wrap_angle(psi, two_pi);
    nx_ = std::cos(psi_);
    ny_ = std::sin(psi_);
  }

  Real p_{};
  Real psi_{};
  Real nx_{};
  Real ny_{};
  Convention convention_;
};

using Line = LineT<double>;

// Right triangle with legs on the coordinate axes and the right angle at the
// origin: A = (0,b), B = (a,0), C = (0,0), with 0 < a <= b (the constructor
// swaps the inputs if needed; reflections do not change any of the
// distributions). Everything downstream depends only on the derived
// constants fixed here:
//
//   c      hypotenuse length
//   alpha  angle at A, arctan(a/b), in (0, pi/4]
//   h      height over the hypotenuse, a*b/c
//   u      perimeter, area = a*b/2
//   theta(1..6)  coefficients of the chord-length distribution
//
// Values are immutable after construction and safe to share across threads.
template <class Real = double>
class RightTriangleT {
 public:
  RightTriangleT(Real leg_a, Real leg_b) {
    if (!std::isfinite(leg_a) || !std::isfinite(leg_b) || !(leg_a > 0) || !(leg_b > 0))
      throw std::domain_error("RightTriangle: legs must be finite and positive");
    a_ = std::min(leg_a, leg_b);
    b_ = std::max(leg_a, leg_b);
    c_ = std::hypot(a_, b_);
    alpha_ = std::atan2(a_, b_);
    h_ = a_ * b_ / c_;
    u_ = a_ + b_ + c_;
    area_ = a_ * b_ / 2;
    constexpr Real pi = std::numbers::pi_v<Real>;
    const Real ab = a_ / b_;
    const Real ba = b_ / a_;
    theta_[0] = ab * (2 * alpha_ + pi) + 2 * ba * (pi - alpha_) + 6;
    theta_[1] = ab * (2 * alpha_ - pi) - 2 * ba * alpha_ + 6;
    theta_[2] = ab + ba;
    theta_[3] = 1 - ba * alpha_;
    theta_[4] = a_ + b_;
    theta_[5] = ab * (2 * alpha_ - pi) - 2 * ba * alpha_ + 2;
  }

  Real a() const { return a_; }
  Real b() const { return b_; }
  Real c() const { return c_; }
  Real alpha() const { return alpha_; }
  Real h() const { return h_; }
  Real u() const { return u_; }
  Real area() const { return area_; }

  // theta(1) .. theta(6)
  Real theta(int i) const { return theta_.at(static_cast<std::size_t>(i - 1)); }

  bool legs_equal() const { return a_ == b_; }

  Point2T<Real> vertex_a() const { return {Real(0), b_}; }
  Point2T<Real> vertex_b() const { return {a_, Real(0)}; }
  Point2T<Real> vertex_c() const { return {Real(0), Real(0)}; }
  std::array<Point2T<Real>, 3> vertices() const { return {vertex_a(), vertex_b(), vertex_c()}; }

  // Incenter (r, r) with inradius r = area / (u/2) = a*b/u.
  Point2T<Real> incenter() const {
    const Real r = a_ * b_ / u_;
    return {r, r};
  }

 private:
  Real a_{}, b_{}, c_{}, alpha_{}, h_{}, u_{}, area_{};
  std::array<Real, 6> theta_{};
};

using RightTriangle = RightTriangleT<double>;

// Axis-aligned a x b rectangle (a <= b), the union of two congruent copies
// of RightTriangleT(a, b) glued along the hypotenuse/diagonal.
template <class Real = double>
class RectangleBoxT {
 public:
  RectangleBoxT(Real side_a, Real side_b) {
    if (!std::isfinite(side_a) || !std::isfinite(side_b) || !(side_a > 0) || !(side_b > 0))
      throw std::domain_error("RectangleBox: sides must be finite and positive");
    a_ = std::min(side_a, side_b);
    b_ = std::max(side_a, side_b);
    c_ = std::hypot(a_, b_);
  }

  Real a() const { return a_; }
  Real b() const { return b_; }
  Real c() const { return c_; }  // diagonal
  Real area() const { return a_ * b_; }
  Real perimeter() const { return 2 * (a_ + b_); }

  bool sides_equal() const { return a_ == b_; }

 private:
  Real a_{}, b_{}, c_{};
};

using RectangleBox = RectangleBoxT<double>;

// Breadth of the triangle perpendicular to the line direction phi:
//   w1 on [0, pi/2), w2 on [pi/2, pi/2 + alpha), w3 on [pi/2 + alpha, pi].
// Continuous on [0, pi], and integrates to the perimeter (Cauchy).
template <class Real>
Real width(const RightTriangleT<Real>& tri, Real phi) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  if (!(phi >= 0 && phi <= pi)) throw std::domain_error("width: phi outside [0, pi]");
  const Real a = tri.a();
  const Real alpha = tri.alpha();
  if (phi < pi / 2) return a * std::cos(phi - alpha) / std::sin(alpha);
  if (phi < pi / 2 + alpha) return a * std::sin(phi);
  return -a * std::cos(phi) / std::tan(alpha);
}

// Length of the chord the line cuts out of the triangle; 0 if the line
// misses it or only touches a vertex. Points within 1e-12 * c of the line
// count as on it, and chords below that length collapse to 0.
template <class Real>
Real chord_length(const RightTriangleT<Real>& tri, const LineT<Real>& line) {
  const Real tol = Real(1e-12) * tri.c();
  const auto vs = tri.vertices();
  Real d[3];
  for (int i = 0; i < 3; ++i) d[i] = line.signed_offset(vs[i]);

  Point2T<Real> pts[4];
  int n = 0;
  for (int i = 0; i < 3; ++i)
    if (std::abs(d[i]) <= tol) pts[n++] = vs[i];
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    if ((d[i] > tol && d[j] < -tol) || (d[i] < -tol && d[j] > tol)) {
      const Real w = d[i] / (d[i] - d[j]);
      pts[n++] = {vs[i].x + w * (vs[j].x - vs[i].x), vs[i].y + w * (vs[j].y - vs[i].y)};
    }
  }

  Real len = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) len = std::max(len, distance(pts[i], pts[j]));
  if (len <= tol) return 0;
  return std::min(len, tri.c());  // the hypotenuse is the longest chord
}

namespace detail {

// Square-root barycentric map of the unit square onto the triangle:
//   (1 - sqrt(u1)) A + sqrt(u1) (1 - u2) B + sqrt(u1) u2 C.
// Area-preserving for (u1, u2) uniform; u1 = 0 yields vertex A exactly.
template <class Real>
Point2T<Real> square_root_barycentric(const RightTriangleT<Real>& tri, Real u1, Real u2) {
  const Real r = std::sqrt(u1);
  const auto A = tri.vertex_a();
  const auto B = tri.vertex_b();
  const auto C = tri.vertex_c();
  const Real wa = 1 - r;
  const Real wb = r * (1 - u2);
  const Real wc = r * u2;
  return {wa * A.x + wb * B.x + wc * C.x, wa * A.y + wb * B.y + wc * C.y};
}

}  // namespace detail

// Uniform point on the closed triangle.
template <class Real>
Point2T<Real> sample_uniform_point(const RightTriangleT<Real>& tri, Rng& rng) {
  const Real u1 = static_cast<Real>(rng.uniform01());
  const Real u2 = static_cast<Real>(rng.uniform01());
  return detail::square_root_barycentric(tri, u1, u2);
}

namespace detail {

// Support distance of the triangle from its incenter in normal direction
// (cos psi, sin psi). Positive for every psi since the incenter is interior.
template <class Real>
Real support_from_incenter(const RightTriangleT<Real>& tri, Real cos_psi, Real sin_psi) {
  const auto inc = tri.incenter();
  Real best = -std::numeric_limits<Real>::infinity();
  for (const auto& v : tri.vertices())
    best = std::max(best, (v.x - inc.x) * cos_psi + (v.y - inc.y) * sin_psi);
  return best;
}

}  // namespace detail

// Random line uniform w.r.t. the invariant measure dp dpsi restricted to the
// lines that hit the triangle. With the reference origin at the incenter,
// psi is drawn uniformly on [0, 2pi) and p uniformly on [0, p_max] where
// p_max = max distance of a vertex from the incenter; a draw is accepted iff
// p lies within the support distance in direction psi, so the candidate is
// never geometry-tested and the acceptance ratio is u / (2 pi p_max) > 1/pi.
// The returned line is expressed in the global (vertex C) frame.
template <class Real>
LineT<Real> sample_uniform_line_hitting(const RightTriangleT<Real>& tri, Rng& rng) {
  constexpr Real two_pi = 2 * std::numbers::pi_v<Real>;
  const auto inc = tri.incenter();
  Real p_max = 0;
  for (const auto& v : tri.vertices())
    p_max = std::max(p_max, std::hypot(v.x - inc.x, v.y - inc.y));

  for (int iter = 0; iter < 10000; ++iter) {
    const Real psi = two_pi * static_cast<Real>(rng.uniform01());
    const Real p = p_max * static_cast<Real>(rng.uniform01());
    const Real cp = std::cos(psi);
    const Real sp = std::sin(psi);
    if (p <= detail::support_from_incenter(tri, cp, sp))
      return LineT<Real>::from_psi(p + inc.x * cp + inc.y * sp, psi);
  }
  throw std::runtime_error("sample_uniform_line_hitting: rejection loop exhausted");
}

}  // namespace rtdist
