#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "credbar/survival.hpp"

namespace credbar {

/// Budget and conditioning limits for the Monte Carlo estimators.
struct OracleConfig {
  std::int64_t n_samples = 100000;
  std::uint64_t seed = 1;
  /// Abort when fewer than n_samples / max_rejection_ratio draws are
  /// accepted by rejection conditioning.
  double max_rejection_ratio = 1000.0;
  /// Forward-simulation step in years for the post-t leg; bias from the
  /// barrier test is removed by bridge-minimum sampling, the step only
  /// affects barrier-switch alignment.
  double sim_step = 1.0 / 250.0;

  void validate() const;
};

/// Monte Carlo estimate with its standard error and diagnostics.
struct OracleEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t n_used = 0;       // accepted draws (C) or total draws (D)
  double effective_samples = 0;  // ESS of the importance weights (D only)
  bool low_ess_warning = false;
};

/// The rejection-conditioned event was too rare to estimate (acceptance
/// ratio below 1/max_rejection_ratio).
struct ConditioningTooRare : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Brute-force estimate of P(tau > T | G^C_t) on a non-defaulted view:
/// barrier draws are accepted when every observed regime minimum exceeds
/// its barrier, and accepted draws are continued from (t, X_t) with
/// bridge-corrected minima.
OracleEstimate mc_c_survival(const CInvestorView& view, const BarrierLaw& law,
                             const FirmParams& params,
                             const BarrierSchedule& schedule, double T,
                             const OracleConfig& cfg);

/// Brute-force estimate of P(tau > T | G^D_t) on a non-defaulted view.
/// Conditioning on the discrete observations uses exact bridge survival
/// weights (path-level rejection has probability zero); the estimate is the
/// self-normalized ratio of survive-to-T over survive-to-t weighted
/// frequencies with a delta-method standard error.
OracleEstimate mc_d_survival(const DInvestorView& view, const BarrierLaw& law,
                             const FirmParams& params,
                             const BarrierSchedule& schedule, double T,
                             const OracleConfig& cfg);

/// Which closed-form law mc_law_check exercises.
enum class LawCheck { MinCcdf, MinDensity, BridgeMinSurvival };

/// Empirical-vs-closed-form comparison report.
struct LawCheckReport {
  std::vector<double> points;    // evaluation points (quantiles, levels, ...)
  std::vector<double> z_scores;  // per-point (empirical - exact) / SE
  double max_abs_z = 0.0;
  double max_abs_dev = 0.0;
  std::string label;
};

/// Simulation frequencies against the closed forms of the minimum laws.
/// trials >= 10^4 required.
LawCheckReport mc_law_check(LawCheck kind, const FirmParams& params,
                            std::int64_t trials, Rng& rng);

}  // namespace credbar
