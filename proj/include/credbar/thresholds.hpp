#pragma once

#include <span>
#include <string>
#include <vector>

#include "credbar/rng.hpp"

namespace credbar {

/// Marginal law of a single barrier level.
struct Marginal {
  enum class Kind { Beta, Exponential, Uniform };

  Kind kind = Kind::Uniform;
  double a = 1.0;  // Beta alpha; Exponential rate
  double b = 1.0;  // Beta beta; unused otherwise

  double cdf(double x) const;
  double pdf(double x) const;
  double quantile(double p) const;
  /// Upper end of the support (+infinity for Exponential).
  double support_end() const;

  void validate() const;
  std::string describe() const;
};

/// Joint law of the barrier vector (L^1, ..., L^n): given marginals coupled
/// by a Gumbel copula with parameter theta >= 1 (theta = 1 is independence).
struct BarrierLaw {
  std::vector<Marginal> marginals;
  double theta = 1.0;

  int regimes() const { return static_cast<int>(marginals.size()); }
  /// Law of the first i coordinates; Gumbel copulas are closed under
  /// margins, so the prefix keeps the same theta.
  BarrierLaw prefix(int i) const;
  /// True when joint_pdf evaluates a closed form (n <= 2); n >= 3 falls
  /// back to a finite-difference mixed partial of the copula.
  bool analytic_density() const { return regimes() <= 2; }

  void validate() const;
};

/// Joint CDF of the first i barriers, F_{L^1..L^i}(x_1..x_i) =
/// C_theta(F_1(x_1), ..., F_i(x_i)). For i = 1 this is exactly the marginal
/// CDF. Arguments may exceed the unit interval (Exponential support is
/// unbounded).
double joint_cdf(const BarrierLaw& law, std::span<const double> x, int i);

/// How joint_pdf may evaluate the copula density.
enum class DensityMode { Auto, AnalyticOnly };

/// Joint density of all n barriers: copula density times the product of
/// marginal densities. Closed form for n in {1, 2}; for n >= 3 a central
/// finite-difference mixed partial of the copula in uniform coordinates
/// (step 1e-4). AnalyticOnly rejects n > 2.
double joint_pdf(const BarrierLaw& law, std::span<const double> l,
                 DensityMode mode = DensityMode::Auto);

/// Exact draw of (L^1, ..., L^n). Gumbel dependence is realized through
/// the positive-stable frailty construction (rejection-free); n = 1 and
/// theta = 1 reduce to marginal inverse-CDF sampling.
std::vector<double> sample_barriers(const BarrierLaw& law, Rng& rng);

/// Positive stable variate with Laplace transform exp(-s^alpha),
/// 0 < alpha < 1, returned on the log scale (the variate itself overflows
/// for small alpha). Exposed for the frailty construction and its tests.
double log_positive_stable_sample(double alpha, Rng& rng);

}  // namespace credbar
