#pragma once

namespace credbar {

/// Parameters of the unit-start process x e^{m t + sigma B_t} with x = 1.
/// All laws in this header are for the unit-start process; callers pass
/// ratios X/X_start. Note that m is the log-drift mu - sigma^2/2, not the
/// rate mu of the level process.
struct NormalizedLaw {
  double m;      // log-drift
  double sigma;  // volatility per sqrt-year, > 0

  void validate() const;
};

/// Density of the running minimum M_t of the unit-start process, supported
/// on (0, 1]. Zero outside the support. t must be positive.
double min_density(const NormalizedLaw& law, double t, double w);

/// Joint density of (M_t, X_t) for the unit-start process: first argument
/// the minimum u in (0,1], second the terminal value v >= u. Zero outside
/// that region. t must be positive.
double min_terminal_joint_density(const NormalizedLaw& law, double t, double u,
                                  double v);

/// Complementary distribution function of the running minimum,
/// P(M_t > u). Total on t >= 0: returns 1 for t = 0 with u <= 1, and 0
/// whenever u > 1.
double min_ccdf(const NormalizedLaw& law, double t, double u);

/// Probability that a geometric Brownian motion pinned at x_a and x_b a
/// time dt apart stays above l in between. 1 - exp{-2 ln(l/x_a) ln(l/x_b)
/// / (sigma^2 dt)} for l < min(x_a, x_b), zero otherwise; l <= 0 is treated
/// as unreachable and returns 1.
double bridge_min_survival(double sigma, double dt, double x_a, double x_b,
                           double l);

}  // namespace credbar
