#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rtdist/chord.hpp"
#include "rtdist/distance.hpp"
#include "rtdist/geometry.hpp"
#include "rtdist/quadrature.hpp"
#include "rtdist/rectangle.hpp"
#include "rtdist/verify.hpp"

namespace rtdist {

// Outcome of one verification check. ks_distance holds the check's sup
// statistic: a Kolmogorov-Smirnov distance for the Monte-Carlo checks and a
// sup |difference| for the deterministic ones. pass <=> ks_distance < threshold.
struct RunReport {
  std::string name;
  std::uint64_t seed = 0;
  std::uint64_t n = 0;
  double ks_distance = 0;
  double threshold = 0;
  bool pass = false;
  double wall_time = 0;  // seconds
};

enum class Suite { All, Chord, Distance, Rectangle, Proof, Piefke, Mc };

inline std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::All;
  if (name == "chord") return Suite::Chord;
  if (name == "distance") return Suite::Distance;
  if (name == "rectangle") return Suite::Rectangle;
  if (name == "proof") return Suite::Proof;
  if (name == "piefke") return Suite::Piefke;
  if (name == "mc") return Suite::Mc;
  return std::nullopt;
}

struct SelfCheckOptions {
  std::uint64_t seed = 42;
  std::uint64_t n = 1000000;  // Monte-Carlo sample count
  double a = 1;
  double b = 1;  // geometry for the mc suite
};

namespace detail {

inline void run_check(std::vector<RunReport>& out, std::string name, std::uint64_t seed,
                      std::uint64_t n, double threshold,
                      const std::function<double()>& statistic) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport r;
  r.name = std::move(name);
  r.seed = seed;
  r.n = n;
  r.threshold = threshold;
  r.ks_distance = statistic();
  r.pass = r.ks_distance < threshold;
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.push_back(std::move(r));
}

inline const std::vector<RightTriangle>& selfcheck_triangles() {
  static const std::vector<RightTriangle> tris = {
      RightTriangle(1, 1), RightTriangle(3, 4), RightTriangle(1, 5), RightTriangle(1, 20),
      RightTriangle(1, 1.0001)};
  return tris;
}

// Breakpoints of a triangle with the adjacent segment pair at each; the
// empty Seg3 is skipped when a == b, and at c the right side is the constant 1.
inline std::vector<std::tuple<double, int, int>> breakpoint_pairs(const RightTriangle& tri) {
  std::vector<std::tuple<double, int, int>> out;
  out.push_back({tri.h(), 1, 2});
  if (tri.legs_equal()) {
    out.push_back({tri.a(), 2, 4});
  } else {
    out.push_back({tri.a(), 2, 3});
    out.push_back({tri.b(), 3, 4});
  }
  out.push_back({tri.c(), 4, 0});  // 0: compare against 1
  return out;
}

inline double chord_breakpoint_gap(const RightTriangle& tri) {
  double worst = 0;
  for (const auto& [x, left, right] : breakpoint_pairs(tri)) {
    const double lv = chord_cdf_segment(tri, left, x);
    const double rv = right == 0 ? 1.0 : chord_cdf_segment(tri, right, x);
    worst = std::max(worst, std::abs(lv - rv));
  }
  return worst;
}

inline double distance_breakpoint_gap(const DistanceDistribution& dist) {
  const auto& tri = dist.triangle();
  double worst = 0;
  for (const auto& [x, left, right] : breakpoint_pairs(tri)) {
    const double lv = dist.cdf_segment(left, x);
    const double rv = right == 0 ? 1.0 : dist.cdf_segment(right, x);
    worst = std::max(worst, std::abs(lv - rv));
  }
  return worst;
}

// 50 abscissas per non-empty segment, clear of the breakpoints.
inline std::vector<std::pair<int, double>> segment_grid(const RightTriangle& tri,
                                                        int per_segment = 50) {
  std::vector<std::pair<int, double>> pts;
  const double edges[5] = {0, tri.h(), tri.a(), tri.b(), tri.c()};
  for (int k = 1; k <= 4; ++k) {
    const double lo = edges[k - 1], hi = edges[k];
    if (!(hi > lo)) continue;
    for (int i = 0; i < per_segment; ++i) {
      const double t = lo + (hi - lo) * (i + 0.5) / per_segment;
      pts.push_back({k, t});
    }
  }
  return pts;
}

}  // namespace detail

// Runs the selected suite(s); one RunReport per check.
inline std::vector<RunReport> run_suite(Suite suite, const SelfCheckOptions& opt) {
  using detail::run_check;
  std::vector<RunReport> out;
  const auto& tris = detail::selfcheck_triangles();

  if (suite == Suite::All || suite == Suite::Chord) {
    run_check(out, "chord.breakpoint_continuity", 0, 0, 1e-10, [&] {
      double worst = 0;
      for (const auto& tri : tris) worst = std::max(worst, detail::chord_breakpoint_gap(tri));
      return worst;
    });
    run_check(out, "chord.monotone", 0, 0, 1e-15, [&] {
      double worst = 0;
      for (const auto& tri : tris) {
        double prev = 0;
        for (int i = 0; i <= 10000; ++i) {
          const double s = tri.c() * i / 10000.0;
          const double v = chord_cdf(tri, s).value;
          worst = std::max(worst, prev - v);
          prev = v;
        }
      }
      return worst;
    });
    run_check(out, "chord.pdf_matches_fd", 0, 0, 1e-5, [&] {
      double worst = 0;
      for (const auto& tri : tris) {
        const double step = 1e-6 * tri.c();
        for (const auto& [k, s] : detail::segment_grid(tri, 250)) {
          (void)k;
          if (s < 2 * step || s > tri.c() - 2 * step) continue;
          const double fd =
              (chord_cdf(tri, s + step).value - chord_cdf(tri, s - step).value) / (2 * step);
          worst = std::max(worst, std::abs(chord_pdf(tri, s).value - fd));
        }
      }
      return worst;
    });
    run_check(out, "chord.pdf_normalization", 0, 0, 1e-8, [&] {
      double worst = 0;
      for (const auto& tri : tris) {
        const double total =
            integrate_split([&](double s) { return chord_pdf(tri, s).value; }, 0.0, tri.c(),
                            {tri.h(), tri.a(), tri.b()}, 1e-10);
        worst = std::max(worst, std::abs(total - 1));
      }
      return worst;
    });
    run_check(out, "chord.scaling_covariance", 0, 0, 1e-12, [&] {
      double worst = 0;
      for (double lambda : {0.1, 7.0}) {
        const RightTriangle base(3, 4), scaled(3 * lambda, 4 * lambda);
        for (const auto& [k, s] : detail::segment_grid(base)) {
          (void)k;
          worst = std::max(worst,
                           std::abs(chord_cdf(scaled, lambda * s).value - chord_cdf(base, s).value));
        }
      }
      return worst;
    });
  }

  if (suite == Suite::All || suite == Suite::Distance) {
    run_check(out, "distance.kernel_derivative_ladder", 0, 0, 1e-6, [&] {
      double worst = 0;
      const double m = 2.4;
      const double step = 1e-6 * m;
      for (int i = 1; i <= 1000; ++i) {
        const double t = m + (3 * m - m) * i / 1000.0;
        const auto fd = [&](auto f) { return (f(t + step, m) - f(t - step, m)) / (2 * step); };
        worst = std::max(worst, std::abs(fd(star_kernel_L1<double>) - kernel_L1(t, m)));
        worst = std::max(worst, std::abs(fd(star_kernel_L2<double>) - kernel_L2(t, m)));
        worst = std::max(worst, std::abs(fd(n_kernel_L1<double>) - t * star_kernel_L1(t, m)));
        worst = std::max(worst, std::abs(fd(n_kernel_L2<double>) - t * star_kernel_L2(t, m)));
      }
      return worst;
    });
    run_check(out, "distance.cdf_breakpoint_continuity", 0, 0, 1e-10, [&] {
      double worst = 0;
      for (const auto& tri : tris) {
        const DistanceDistribution dist(tri);
        worst = std::max(worst, detail::distance_breakpoint_gap(dist));
        worst = std::max(worst, std::abs(dist.cdf_segment(4, tri.c()) - 1));  // K-ladder at c
      }
      return worst;
    });
    run_check(out, "distance.pdf_normalization", 0, 0, 1e-8, [&] {
      double worst = 0;
      for (const auto& tri : tris) {
        const DistanceDistribution dist(tri);
        const double total = integrate_split([&](double t) { return dist.pdf(t).value; }, 0.0,
                                             tri.c(), {tri.h(), tri.a(), tri.b()}, 1e-10);
        worst = std::max(worst, std::abs(total - 1));
      }
      return worst;
    });
    run_check(out, "distance.cdf_derivative_matches_pdf", 0, 0, 1e-6, [&] {
      double worst = 0;
      for (const auto& tri : tris) {
        const DistanceDistribution dist(tri);
        const double step = 1e-7 * tri.c();
        for (const auto& [k, t] : detail::segment_grid(tri)) {
          (void)k;
          if (t < 2 * step || t > tri.c() - 2 * step) continue;
          const double fd = (dist.cdf(t + step).value - dist.cdf(t - step).value) / (2 * step);
          worst = std::max(worst, std::abs(fd - dist.pdf(t).value));
        }
      }
      return worst;
    });
  }

  if (suite == Suite::All || suite == Suite::Rectangle) {
    run_check(out, "rectangle.unit_square_mean", 0, 0, 1e-6, [&] {
      // (2 + sqrt(2) + 5 asinh 1) / 15
      const double reference = 0.52140543316472068;
      return std::abs(RectDistance(RectangleBox(1, 1)).mean() - reference);
    });
    run_check(out, "rectangle.pdf_normalization", 0, 0, 1e-8, [&] {
      double worst = 0;
      for (const auto box : {RectangleBox(1, 1), RectangleBox(1, 5), RectangleBox(2, 3)}) {
        const RectDistance dist(box);
        const double total = integrate_split([&](double t) { return dist.pdf(t).value; }, 0.0,
                                             box.c(), {box.a(), box.b()}, 1e-10);
        worst = std::max(worst, std::abs(total - 1));
      }
      return worst;
    });
    run_check(out, "rectangle.cdf_breakpoint_continuity", 0, 0, 1e-10, [&] {
      double worst = 0;
      for (const auto box : {RectangleBox(1, 1), RectangleBox(1, 5), RectangleBox(2, 3)}) {
        const RectDistance dist(box);
        if (!box.sides_equal())
          worst = std::max(worst, std::abs(dist.cdf_segment(1, box.a()) - dist.cdf_segment(2, box.a())));
        const int mid = box.sides_equal() ? 1 : 2;
        worst = std::max(worst, std::abs(dist.cdf_segment(mid, box.b()) - dist.cdf_segment(3, box.b())));
        worst = std::max(worst, std::abs(dist.cdf_segment(3, box.c()) - 1));
      }
      return worst;
    });
    run_check(out, "rectangle.mixture_identity", 0, 0, 1e-12, [&] {
      // 2 g_R == g + g2 pointwise, by construction up to the clamp
      double worst = 0;
      for (const auto& tri : {RightTriangle(1, 5), RightTriangle(3, 4)}) {
        const CrossDistance cross(tri);
        const DistanceDistribution same(tri);
        const RectDistance rect{RectangleBox(tri.a(), tri.b())};
        for (int i = 0; i <= 1000; ++i) {
          const double t = tri.c() * i / 1000.0;
          worst = std::max(worst, std::abs(2 * rect.pdf(t).value - same.pdf(t).value -
                                           cross.pdf(t)));
        }
      }
      return worst;
    });
  }

  if (suite == Suite::All || suite == Suite::Proof) {
    run_check(out, "proof.measure_vs_closed_form", 0, 0, 1e-7, [&] {
      double worst = 0;
      for (const auto& tri :
           {RightTriangle(1, 1), RightTriangle(3, 4), RightTriangle(1, 5), RightTriangle(2, 3)}) {
        for (const auto& [k, s] : detail::segment_grid(tri)) {
          const double oracle = measure_by_proof_integration(tri, k, s);
          const double closed = tri.u() * chord_cdf(tri, s).value;
          worst = std::max(worst, std::abs(oracle - closed));
        }
      }
      return worst;
    });
  }

  if (suite == Suite::All || suite == Suite::Piefke) {
    run_check(out, "piefke.pdf_vs_closed_form", 0, 0, 1e-6, [&] {
      double worst = 0;
      for (const auto& tri : {RightTriangle(1, 1), RightTriangle(3, 4), RightTriangle(1, 5)}) {
        const DistanceDistribution dist(tri);
        const std::vector<double> breaks = {tri.h(), tri.a(), tri.b()};
        for (const auto& [k, t] : detail::segment_grid(tri)) {
          (void)k;
          const double reconstructed = piefke_pdf([&](double s) { return chord_cdf(tri, s).value; },
                                                  tri.u(), tri.area(), tri.c(), t, breaks);
          worst = std::max(worst, std::abs(reconstructed - dist.pdf(t).value));
        }
      }
      return worst;
    });
  }

  if (suite == Suite::All || suite == Suite::Mc) {
    const RightTriangle tri(opt.a, opt.b);
    // pinned at 2e-3 for n = 10^6 and 1e-3 for n = 10^7, sqrt-scaled elsewhere
    const double threshold = std::max(2e-3 * std::sqrt(1e6 / static_cast<double>(opt.n)), 1e-3);
    run_check(out, "mc.chord_ks", opt.seed, opt.n, threshold,
              [&] { return mc_chord_length(tri, opt.n, opt.seed).ks_distance; });
    run_check(out, "mc.point_distance_ks", opt.seed, opt.n, threshold,
              [&] { return mc_point_distance(tri, opt.n, opt.seed).ks_distance; });
    run_check(out, "mc.cross_distance_ks", opt.seed, opt.n, threshold,
              [&] { return mc_cross_distance(tri, opt.n, opt.seed).ks_distance; });
  }

  return out;
}

}  // namespace rtdist
