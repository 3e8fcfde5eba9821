#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rtdist {
namespace detail {

// m/s for the arcsin/sqrt kernels. s may undershoot m by rounding (up to
// 1e-9 relative) without tripping the domain check; the ratio is clamped so
// s = m + eps never poisons asin.
template <class Real>
Real kernel_ratio(Real s, Real m) {
  if (!(m > 0) || !(s > 0)) throw std::domain_error("kernel: arguments must be positive");
  if (s < m * (1 - Real(1e-9))) throw std::domain_error("kernel: first argument below second");
  return std::min(m / s, Real(1));
}

// sqrt(s^2 - m^2), clamped at 0; the factored form keeps accuracy near s = m.
template <class Real>
Real root_gap(Real s, Real m) {
  return std::sqrt(std::max((s - m) * (s + m), Real(0)));
}

}  // namespace detail

// L1(s,m) = s asin(m/s)
template <class Real>
Real kernel_L1(Real s, Real m) {
  return s * std::asin(detail::kernel_ratio(s, m));
}

// L2(s,m) = sqrt(1 - (m/s)^2)
template <class Real>
Real kernel_L2(Real s, Real m) {
  const Real r = detail::kernel_ratio(s, m);
  return std::sqrt(std::max(1 - r * r, Real(0)));
}

// Antiderivatives of the kernels in the first argument: d/dt L1* = L1 and
// d/dt L2* = L2.
template <class Real>
Real star_kernel_L1(Real t, Real m) {
  const Real r = detail::kernel_ratio(t, m);
  return (m * detail::root_gap(t, m) + t * t * std::asin(r)) / 2;
}

template <class Real>
Real star_kernel_L2(Real t, Real m) {
  const Real r = detail::kernel_ratio(t, m);
  return detail::root_gap(t, m) + m * std::asin(r);
}

// One layer up: d/dt L1n = t L1* and d/dt L2n = t L2*.
template <class Real>
Real n_kernel_L1(Real t, Real m) {
  const Real r = detail::kernel_ratio(t, m);
  const Real g = detail::root_gap(t, m);
  const Real t2 = t * t;
  return ((5 * m / 3) * g * g * g + m * m * m * g + t2 * t2 * std::asin(r)) / 8;
}

template <class Real>
Real n_kernel_L2(Real t, Real m) {
  const Real r = detail::kernel_ratio(t, m);
  const Real g = detail::root_gap(t, m);
  return g * g * g / 3 + (m / 2) * (m * g + t * t * std::asin(r));
}

}  // namespace rtdist
