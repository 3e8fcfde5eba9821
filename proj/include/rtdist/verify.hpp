#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "rtdist/chord.hpp"
#include "rtdist/distance.hpp"
#include "rtdist/ecdf.hpp"
#include "rtdist/geometry.hpp"
#include "rtdist/quadrature.hpp"
#include "rtdist/random.hpp"
#include "rtdist/rectangle.hpp"

namespace rtdist {

// Strip breadths and angular limits of the measure decomposition. At fixed
// line direction phi, the lines cutting a chord of length <= s fill either
// the whole breadth w(phi) or two strips of breadth b1/b2/b3 near the
// vertices; the phi_k are the directions where the regimes switch.
namespace proof {

template <class Real>
Real b1(const RightTriangleT<Real>& tri, Real s, Real phi) {
  const Real al = tri.alpha();
  return s / 2 * (std::sin(2 * phi - al) + std::sin(al)) / std::cos(al);
}

template <class Real>
Real b2(const RightTriangleT<Real>& tri, Real s, Real phi) {
  const Real al = tri.alpha();
  return s / 2 * (std::cos(2 * phi - al) + std::cos(al)) / std::sin(al);
}

template <class Real>
Real b3(const RightTriangleT<Real>&, Real s, Real phi) {
  return -s / 2 * std::sin(2 * phi);
}

template <class Real>
Real phi1(const RightTriangleT<Real>& tri, Real s) {
  return tri.alpha() - std::acos(detail::kernel_ratio(s, tri.h()));
}

template <class Real>
Real phi2(const RightTriangleT<Real>& tri, Real s) {
  return tri.alpha() + std::acos(detail::kernel_ratio(s, tri.h()));
}

template <class Real>
Real phi3(const RightTriangleT<Real>& tri, Real s) {
  return std::numbers::pi_v<Real> - std::acos(detail::kernel_ratio(s, tri.a()));
}

template <class Real>
Real phi4(const RightTriangleT<Real>& tri, Real s) {
  return std::numbers::pi_v<Real> - std::asin(detail::kernel_ratio(s, tri.b()));
}

}  // namespace proof

// Independent oracle for u F(s): integrates the five-integral decomposition
// of the measure H_segment(s) over the line direction phi (adaptive
// quadrature, tol 1e-10, one panel per smooth piece). Deliberately avoids
// the closed-form Theta/L1/L2 route; only the breadth functions and the
// switching angles from the derivation are used. s must lie in the
// segment's interval [lo, hi] (half-open bounds are accepted closed, where
// the decompositions coincide by continuity).
template <class Real>
Real measure_by_proof_integration(const RightTriangleT<Real>& tri, int segment, Real s) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  const Real al = tri.alpha();
  const Real a = tri.a();
  const Real tol = Real(1e-10);

  Real lo, hi;
  switch (segment) {
    case 1: lo = 0; hi = tri.h(); break;
    case 2: lo = tri.h(); hi = tri.a(); break;
    case 3: lo = tri.a(); hi = tri.b(); break;
    case 4: lo = tri.b(); hi = tri.c(); break;
    default: throw std::invalid_argument("measure_by_proof_integration: segment must be 1..4");
  }
  if (!(s >= lo && s <= hi))
    throw std::invalid_argument("measure_by_proof_integration: s outside the segment interval");

  const auto w1 = [&](Real phi) { return a * std::cos(phi - al) / std::sin(al); };
  const auto w2 = [&](Real phi) { return a * std::sin(phi); };
  const auto w3 = [&](Real phi) { return -a * std::cos(phi) / std::tan(al); };
  const auto b12 = [&](Real phi) { return proof::b1(tri, s, phi) + proof::b2(tri, s, phi); };
  const auto b13 = [&](Real phi) { return proof::b1(tri, s, phi) + proof::b3(tri, s, phi); };
  const auto b23 = [&](Real phi) { return proof::b2(tri, s, phi) + proof::b3(tri, s, phi); };

  switch (segment) {
    case 1:
      return integrate(b12, Real(0), pi / 2, tol) + integrate(b13, pi / 2, pi / 2 + al, tol) +
             integrate(b23, pi / 2 + al, pi, tol);
    case 2: {
      // phi1, phi2 live in [0, pi/2]; clamp away rounding drift at s = h, a
      const Real p1 = std::clamp(proof::phi1(tri, s), Real(0), pi / 2);
      const Real p2 = std::clamp(proof::phi2(tri, s), p1, pi / 2);
      return integrate(b12, Real(0), p1, tol) + integrate(w1, p1, p2, tol) +
             integrate(b12, p2, pi / 2, tol) + integrate(b13, pi / 2, pi / 2 + al, tol) +
             integrate(b23, pi / 2 + al, pi, tol);
    }
    case 3: {
      const Real p2 = std::clamp(proof::phi2(tri, s), Real(0), pi / 2);
      const Real p3 = std::clamp(proof::phi3(tri, s), pi / 2 + al, pi);
      return integrate(w1, Real(0), p2, tol) + integrate(b12, p2, pi / 2, tol) +
             integrate(b13, pi / 2, pi / 2 + al, tol) + integrate(b23, pi / 2 + al, p3, tol) +
             integrate(w3, p3, pi, tol);
    }
    default: {  // segment 4
      const Real p3 = std::clamp(proof::phi3(tri, s), pi / 2 + al, pi);
      const Real p4 = std::clamp(proof::phi4(tri, s), pi / 2, pi / 2 + al);
      return integrate(w1, Real(0), pi / 2, tol) + integrate(w2, pi / 2, p4, tol) +
             integrate(b13, p4, pi / 2 + al, tol) + integrate(b23, pi / 2 + al, p3, tol) +
             integrate(w3, p3, pi, tol);
    }
  }
}

// Distance density reconstructed from a chord length CDF through the
// integrated Piefke form
//   g(t) = (2t/area) [ pi - (u/area) (t - int_0^t F) ],
// which needs only F, not f. Pass the CDF's interior breakpoints so no
// quadrature panel straddles a kink.
template <class Real, class CdfFn>
Real piefke_pdf(CdfFn&& chord_cdf_fn, Real u, Real area, Real c, Real t,
                std::vector<Real> breakpoints = {}) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  if (!(t >= 0 && t <= c)) throw std::invalid_argument("piefke_pdf: t outside [0, c]");
  if (t == 0) return 0;
  std::erase_if(breakpoints, [&](Real x) { return !(x > 0 && x < t); });
  const Real integral = integrate_split(chord_cdf_fn, Real(0), t, std::move(breakpoints), Real(1e-9));
  return 2 * t / area * (pi - u / area * (t - integral));
}

// n chord lengths of invariant-measure random lines hitting the triangle.
// KS distance is taken against the closed-form chord CDF.
template <class Real>
EcdfSummary mc_chord_length(const RightTriangleT<Real>& tri, std::uint64_t n,
                            std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("mc_chord_length: n must be >= 1");
  Rng rng(seed);
  EcdfSummary out;
  out.n = n;
  out.seed = seed;
  out.sorted_samples.resize(n);
  for (auto& x : out.sorted_samples)
    x = static_cast<double>(chord_length(tri, sample_uniform_line_hitting(tri, rng)));
  std::sort(out.sorted_samples.begin(), out.sorted_samples.end());
  out.ks_distance = ks_distance(out.sorted_samples, [&](double s) {
    return static_cast<double>(chord_cdf(tri, static_cast<Real>(s)).value);
  });
  return out;
}

// n distances between independent uniform point pairs in the triangle,
// against the closed-form G.
template <class Real>
EcdfSummary mc_point_distance(const RightTriangleT<Real>& tri, std::uint64_t n,
                              std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("mc_point_distance: n must be >= 1");
  Rng rng(seed);
  DistanceDistributionT<Real> dist(tri);
  EcdfSummary out;
  out.n = n;
  out.seed = seed;
  out.sorted_samples.resize(n);
  for (auto& x : out.sorted_samples) {
    const auto p = sample_uniform_point(tri, rng);
    const auto q = sample_uniform_point(tri, rng);
    x = static_cast<double>(distance(p, q));
  }
  std::sort(out.sorted_samples.begin(), out.sorted_samples.end());
  out.ks_distance = ks_distance(out.sorted_samples, [&](double t) {
    return static_cast<double>(dist.cdf(static_cast<Real>(t)).value);
  });
  return out;
}

// Same for point pairs in a rectangle, against G_R.
template <class Real>
EcdfSummary mc_point_distance(const RectangleBoxT<Real>& box, std::uint64_t n,
                              std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("mc_point_distance: n must be >= 1");
  Rng rng(seed);
  RectDistanceT<Real> dist(box);
  EcdfSummary out;
  out.n = n;
  out.seed = seed;
  out.sorted_samples.resize(n);
  for (auto& x : out.sorted_samples) {
    const Real x1 = box.a() * static_cast<Real>(rng.uniform01());
    const Real y1 = box.b() * static_cast<Real>(rng.uniform01());
    const Real x2 = box.a() * static_cast<Real>(rng.uniform01());
    const Real y2 = box.b() * static_cast<Real>(rng.uniform01());
    x = static_cast<double>(std::hypot(x1 - x2, y1 - y2));
  }
  std::sort(out.sorted_samples.begin(), out.sorted_samples.end());
  out.ks_distance = ks_distance(out.sorted_samples, [&](double t) {
    return static_cast<double>(dist.cdf(static_cast<Real>(t)).value);
  });
  return out;
}

// Pairs with one point in each of the two triangles of the split rectangle,
// against G2. The second point is an independent triangle sample reflected
// through the box center, (x, y) -> (a - x, b - y), which maps the triangle
// onto its complement exactly and keeps the sampling rejection-free.
template <class Real>
EcdfSummary mc_cross_distance(const RightTriangleT<Real>& tri, std::uint64_t n,
                              std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("mc_cross_distance: n must be >= 1");
  Rng rng(seed);
  CrossDistanceT<Real> dist(tri);
  EcdfSummary out;
  out.n = n;
  out.seed = seed;
  out.sorted_samples.resize(n);
  for (auto& x : out.sorted_samples) {
    const auto p = sample_uniform_point(tri, rng);
    const auto q = sample_uniform_point(tri, rng);
    x = static_cast<double>(std::hypot(p.x - (tri.a() - q.x), p.y - (tri.b() - q.y)));
  }
  std::sort(out.sorted_samples.begin(), out.sorted_samples.end());
  out.ks_distance = ks_distance(out.sorted_samples, [&](double t) {
    return static_cast<double>(dist.cdf(static_cast<Real>(t)));
  });
  return out;
}

}  // namespace rtdist
