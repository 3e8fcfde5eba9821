#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace rtdist {

// Adaptive Gauss-Kronrod (G7/K15) integration over [lo, hi]. tol drives the
// adaptive refinement; integrands with interior kinks should go through
// integrate_split so that no panel straddles a breakpoint. Throws when the
// error estimate signals real non-convergence (oscillatory or divergent
// integrands). The estimate is deliberately not compared against tol itself:
// on panels with a root-type endpoint kink the Kronrod-Gauss estimate is
// orders of magnitude more pessimistic than the achieved accuracy.
template <class Real, class F>
Real integrate(F&& f, Real lo, Real hi, Real tol) {
  if (!(lo <= hi)) throw std::invalid_argument("integrate: lo > hi");
  if (lo == hi) return Real(0);
  Real error = 0;
  Real l1 = 0;
  const Real value = boost::math::quadrature::gauss_kronrod<Real, 15>::integrate(
      std::forward<F>(f), lo, hi, 15, tol, &error, &l1);
  if (!(error <= Real(1e-4) * std::max(Real(1), l1)))
    throw std::runtime_error("integrate: quadrature did not converge");
  return value;
}

// Same, with the interval pre-split at the given interior points.
template <class Real, class F>
Real integrate_split(F&& f, Real lo, Real hi, std::vector<Real> points, Real tol) {
  points.push_back(lo);
  points.push_back(hi);
  std::sort(points.begin(), points.end());
  Real total = 0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Real p0 = std::clamp(points[i], lo, hi);
    const Real p1 = std::clamp(points[i + 1], lo, hi);
    if (p1 > p0) total += integrate(f, p0, p1, tol);
  }
  return total;
}

}  // namespace rtdist
