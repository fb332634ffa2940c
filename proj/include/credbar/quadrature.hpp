#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace credbar {

/// Tolerances and limits for adaptive Gauss-Kronrod integration.
struct QuadConfig {
  double abs_tol = 1e-8;
  double rel_tol = 1e-6;
  int max_subdivisions = 200;
  int rule = 15;  // Kronrod point count of the embedded pair: 15 or 21

  void validate() const;
};

/// Integral estimate with its error bound. `converged` is false when the
/// subdivision cap was hit before the tolerance was met; the value then
/// carries the best available estimate.
struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
  int subdivisions = 0;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Globally adaptive quadrature of f over (a, b), bisecting the panel with
/// the worst Kronrod-minus-Gauss error estimate until the combined estimate
/// meets the tolerance. b may be +infinity, handled by the substitution
/// v = a + s/(1-s), s in [0,1). Known kink locations of f can be passed as
/// breakpoints; they seed the initial panel set (values outside (a,b) are
/// ignored).
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, const QuadConfig& cfg,
                              std::span<const double> breakpoints = {});

/// One level of a nested integral. Bounds (and optional breakpoints) may
/// depend on the values of all outer variables, passed outermost-first.
struct NestedLevel {
  std::function<double(std::span<const double>)> lower;
  std::function<double(std::span<const double>)> upper;  // may return infinity
  std::function<std::vector<double>(std::span<const double>)> breakpoints;

  static NestedLevel fixed(double lo, double hi);
};

/// Iterated adaptive quadrature, outermost level first; f receives the full
/// variable vector in level order. Each level runs at tolerance cfg/d and
/// error estimates are propagated as the sum of per-level estimates.
/// Depth is capped at 5; deeper requests throw.
QuadResult integrate_nested(
    const std::function<double(std::span<const double>)>& f,
    std::span<const NestedLevel> levels, const QuadConfig& cfg);

inline constexpr int kMaxNestedDepth = 5;

}  // namespace credbar
