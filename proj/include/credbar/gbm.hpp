#pragma once

#include <optional>
#include <span>
#include <vector>

#include "credbar/rng.hpp"

namespace credbar {

/// Firm-value process parameters: dX = X (mu dt + sigma dB), X_0 = x0.
struct FirmParams {
  double mu;
  double sigma;  // > 0
  double x0;     // > 0

  /// Log-drift m = mu - sigma^2/2; always derived, never stored.
  double log_drift() const { return mu - 0.5 * sigma * sigma; }

  void validate() const;
};

/// Deterministic barrier adjustment times t_0 = 0 < t_1 < ... < t_{n-1} < T.
/// Regime k (0-based) covers [t_k, t_{k+1}) with t_n := T.
struct BarrierSchedule {
  std::vector<double> adjustment_times;
  double horizon;

  int regimes() const { return static_cast<int>(adjustment_times.size()); }
  int regime_at(double t) const;
  double regime_start(int k) const { return adjustment_times[k]; }
  double regime_end(int k) const {
    return k + 1 < regimes() ? adjustment_times[k + 1] : horizon;
  }

  void validate() const;
};

/// A firm-value trajectory on a time grid with per-regime running minima.
/// Minima restart to the current firm value at each adjustment time.
/// default_time and realized_barriers are present for simulated scenarios
/// and absent for market-observed data.
struct PathRecord {
  std::vector<double> grid;
  std::vector<double> values;
  /// Running minimum of the active regime at each grid point (resets at
  /// adjustment times).
  std::vector<double> regime_running_min;
  std::optional<double> default_time;
  std::optional<std::vector<double>> realized_barriers;

  /// Index of the grid point at time t; throws if t is not on the grid
  /// (within 1e-12 absolute).
  std::size_t index_at(double t) const;
  double value_at(double t) const { return values[index_at(t)]; }
};

/// Simulates a trajectory on a grid of spacing <= step that contains every
/// adjustment time and both endpoints of [0, T], using exact lognormal
/// transitions between grid points.
PathRecord simulate_path(const FirmParams& params,
                         const BarrierSchedule& schedule, double step,
                         Rng& rng);

/// Minimum of the stored values over [s, t] (closed-interval convention;
/// grid points strictly inside plus the bracketing points are included).
/// Requires 0 <= s < t <= horizon.
double regime_minimum(const PathRecord& path, double s, double t);

/// Samples the minimum of a GBM bridge pinned at x_a and x_b a time dt
/// apart, by closed-form inversion of the bridge-minimum CDF at a uniform
/// draw. The sample never exceeds min(x_a, x_b).
double bridge_minimum_sample(double x_a, double x_b, double dt, double sigma,
                             Rng& rng);

/// First grid time at which the path value breaches the active barrier
/// (value <= barrier); nullopt if the path survives through the horizon.
/// Grid-only detection: inter-grid excursions are ignored (biased late).
std::optional<double> detect_default(const PathRecord& path,
                                     std::span<const double> barriers,
                                     const BarrierSchedule& schedule);

/// Bridge-corrected detection: additionally samples the inter-grid bridge
/// minimum on every interval and reports the interval's right endpoint when
/// it breaches the active barrier. This is the unbiased mode the Monte
/// Carlo oracle uses.
std::optional<double> detect_default(const PathRecord& path,
                                     std::span<const double> barriers,
                                     const BarrierSchedule& schedule,
                                     double sigma, Rng& rng);

}  // namespace credbar
