#pragma once

#include <stdexcept>
#include <vector>

#include "credbar/gbm.hpp"
#include "credbar/quadrature.hpp"
#include "credbar/thresholds.hpp"

namespace credbar {

/// Information available to an investor who observes the firm value
/// continuously (plus the default indicator, but not the barrier).
struct CInvestorView {
  double t = 0.0;
  /// 0-based regime index k with t in [t_k, t_{k+1}).
  int regime = 0;
  /// Minima of the k completed regimes, M_{[t_0,t_1)}, ..., M_{[t_{k-1},t_k)}.
  std::vector<double> completed_minima;
  /// Running minimum of the current regime, M_{[t_k, t]}.
  double current_minimum = 0.0;
  /// Current firm value X_t.
  double value = 0.0;
  bool defaulted = false;

  void validate(const BarrierSchedule& schedule) const;

  static CInvestorView from_path(const PathRecord& path,
                                 const BarrierSchedule& schedule, double t);
};

/// Information available to an investor who observes the firm value only at
/// discrete dates (plus the default indicator). Holds the observations made
/// up to time t; every adjustment time <= t must be an observation date.
struct DInvestorView {
  double t = 0.0;
  std::vector<double> obs_times;   // ascending, obs_times[0] = 0, all <= t
  std::vector<double> obs_values;  // X at obs_times
  bool defaulted = false;

  void validate(const BarrierSchedule& schedule) const;

  double last_obs_time() const { return obs_times.back(); }
  double last_obs_value() const { return obs_values.back(); }
  /// Number of observation gaps inside regime k that lie before the last
  /// observation.
  int gaps_in_regime(const BarrierSchedule& schedule, int k) const;

  /// Truncates a full observation schedule to the dates <= t, reading the
  /// values off the path grid.
  static DInvestorView from_path(const PathRecord& path,
                                 const BarrierSchedule& schedule,
                                 std::span<const double> observation_times,
                                 double t);
};

/// Risk-free rate and maturity for zero-recovery bond pricing.
struct PricingInputs {
  double rate = 0.0;  // >= 0, continuously compounded
  double maturity = 1.0;

  void validate() const;
};

/// Probability computed by quadrature, carrying the quadrature error and
/// convergence flag of the evaluation.
struct SurvivalResult {
  double value = 0.0;
  double quad_error = 0.0;
  bool converged = true;
};

/// The conditioning event is numerically almost impossible (the survival
/// probability to t fell below the documented floor of 1e-12).
struct AlmostImpossibleState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Regime counts above 2 are expensive (deep nesting) and must be enabled
/// explicitly; counts whose formulas exceed the nesting depth cap throw.
struct EvalOptions {
  bool allow_expensive = false;
};

/// P(tau > T | F_t) for a C-investor view: the w-integral form when t is
/// past the last adjustment, the nested (u_j, v_j) form before it.
SurvivalResult c_f_survival_T(const CInvestorView& view, const BarrierLaw& law,
                              const FirmParams& params, double T,
                              const QuadConfig& cfg, EvalOptions opt = {});

/// P(tau > t | F_t): joint CDF of the first k+1 barriers at the observed
/// regime minima.
double c_f_survival_t(const CInvestorView& view, const BarrierLaw& law);

/// P(tau > T | G^C_t): zero on default, else the ratio of the two
/// F-conditional probabilities, clamped to [0, 1] after quadrature noise.
/// Throws AlmostImpossibleState when the denominator is below 1e-12.
SurvivalResult c_conditional_survival(const CInvestorView& view,
                                      const BarrierLaw& law,
                                      const FirmParams& params, double T,
                                      const QuadConfig& cfg,
                                      EvalOptions opt = {});

/// Product of bridge survival factors over the first i observation gaps of
/// regime k; i = 0 gives the empty product 1.
double k_product(const DInvestorView& view, const FirmParams& params,
                 const BarrierSchedule& schedule, int k, int i, double l);

/// P(tau > T | F^D_t) for a D-investor view.
SurvivalResult d_f_survival_T(const DInvestorView& view, const BarrierLaw& law,
                              const FirmParams& params,
                              const BarrierSchedule& schedule, double T,
                              const QuadConfig& cfg, EvalOptions opt = {});

/// P(tau > t | F^D_t) for a D-investor view.
SurvivalResult d_f_survival_t(const DInvestorView& view, const BarrierLaw& law,
                              const FirmParams& params,
                              const BarrierSchedule& schedule,
                              const QuadConfig& cfg, EvalOptions opt = {});

/// P(tau > T | G^D_t), analogous to c_conditional_survival.
SurvivalResult d_conditional_survival(const DInvestorView& view,
                                      const BarrierLaw& law,
                                      const FirmParams& params,
                                      const BarrierSchedule& schedule, double T,
                                      const QuadConfig& cfg,
                                      EvalOptions opt = {});

/// Credit yield spread -ln(p)/(T - t); +infinity for p = 0. p may exceed 1
/// by at most 1e-9 (quadrature noise); larger violations throw.
double credit_spread(double p, double t, double T);

/// Zero-recovery zero-coupon bond price e^{-r(T-t)} p.
double bond_price(double p, const PricingInputs& inputs, double t);

}  // namespace credbar
