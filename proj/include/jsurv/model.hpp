#pragma once

#include <optional>

#include "jsurv/types.hpp"

namespace jsurv {

inline constexpr double kLogTwoPi = 1.8378770664093454836;

// log N(x | mean, var)
inline double normal_logpdf(double x, double mean, double var) {
  const double r = x - mean;
  return -0.5 * (kLogTwoPi + std::log(var) + r * r / var);
}

// log IG(x | shape, scale), -inf outside the support
double inv_gamma_logpdf(double x, double shape, double scale);

// log Gamma(x | shape, rate), -inf outside the support
double gamma_logpdf(double x, double shape, double rate);

// beta0 + beta1 * t + b
double longitudinal_mean(const JointParams& params, double b, double t);

// Sum of Gaussian log-densities of the patient's measurements around the
// subject-specific line; 0 for a patient with no measurements.
// Throws invalid_input on non-finite b or measurement values.
double longitudinal_loglik(const JointParams& params, const PatientRecord& patient, double b);

// H0(t) = sum_k levels[k] * (time t spends in interval k); exact closed form.
double cumulative_baseline_hazard(const HazardSpec& hazard, double t);

// delta * [log h0(T) + gamma'Z + alpha b] - exp(gamma'Z + alpha b) * H0(T).
// T exactly on a cut uses the left interval's level for log h0(T).
double survival_loglik(const JointParams& params, const PatientRecord& patient, double b);

// gamma'z + alpha * b
double linear_predictor(const JointParams& params, const std::vector<double>& z, double b);

// Sum of all prior log-densities; -inf when a variance or hazard level is
// outside its support (a genuine log-zero, propagates through sums).
double log_prior(const JointParams& params, const PriorSpec& prior);

// P(T > u | T > t, b, z) = exp(-exp(gamma'z + alpha b) * (H0(u) - H0(t))).
// Requires 0 <= t <= u.
double conditional_survival_given_b(const JointParams& params, double b,
                                    const std::vector<double>& z, double t, double u);

// Default fitting knots: K intervals with interior cuts at the empirical
// quintiles of observed event times; equal-width over [0, max follow-up]
// when there are fewer than K events.
std::vector<double> default_hazard_cuts(const Cohort& cohort, std::size_t n_intervals = 5);

}  // namespace jsurv
