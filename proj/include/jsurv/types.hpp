#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace jsurv {

/// Piecewise-constant baseline hazard.
///
/// `cuts` are the interior interval boundaries (strictly increasing, positive);
/// the first boundary is implicitly 0 and the last interval is open-ended, so
/// there are cuts.size()+1 intervals.  Intervals are (c_k, c_{k+1}]: a time
/// falling exactly on a cut belongs to the interval to its left.
struct HazardSpec {
  std::vector<double> cuts;
  std::vector<double> levels;

  std::size_t n_intervals() const { return levels.size(); }

  // Index of the interval containing t (left-interval rule at cuts).
  std::size_t interval_index(double t) const {
    std::size_t k = 0;
    while (k < cuts.size() && t > cuts[k]) ++k;
    return k;
  }

  double level_at(double t) const { return levels[interval_index(t)]; }

  // Lower edge of interval k (0 for the first).
  double lower_edge(std::size_t k) const { return k == 0 ? 0.0 : cuts[k - 1]; }

  // Upper edge of interval k (+inf for the last).
  double upper_edge(std::size_t k) const {
    return k < cuts.size() ? cuts[k] : std::numeric_limits<double>::infinity();
  }

  void validate() const;
};

/// One subject: measurement history, follow-up outcome, baseline covariates.
struct PatientRecord {
  std::string id;
  std::vector<double> obs_times;   // strictly increasing, all <= event_time
  std::vector<double> obs_values;  // same length as obs_times
  double event_time = 0.0;         // > 0
  bool event_indicator = false;    // true = event observed, false = censored
  std::vector<double> covariates;  // Z_i

  std::size_t n_obs() const { return obs_times.size(); }
  void validate() const;
};

using Cohort = std::vector<PatientRecord>;

// Covariate dimension of a cohort; throws if patients disagree.
std::size_t covariate_dim(const Cohort& cohort);

/// Full parameter state of the joint model.
struct JointParams {
  double beta0 = 0.0;
  double beta1 = 0.0;
  std::vector<double> gamma;
  double alpha = 0.0;
  double sigma2 = 1.0;  // residual variance, > 0
  double tau2 = 1.0;    // random-intercept variance, > 0
  HazardSpec hazard;

  void validate() const;
};

/// Prior hyperparameters.
///
/// Coefficients (beta0, beta1, alpha, gamma_j) get N(coef_mean, coef_var).
/// sigma2 and tau2 get inverse-gamma in shape-scale form, density
/// proportional to x^{-shape-1} exp(-scale/x).  Each hazard level gets
/// Gamma(hazard_shape, hazard_rate) with rate parameterization.
struct PriorSpec {
  double coef_mean = 0.0;
  double coef_var = 100.0;
  double var_shape = 2.0;
  double var_scale = 1.0;
  double hazard_shape = 0.1;
  double hazard_rate = 0.1;

  void validate() const;
};

class invalid_input : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jsurv
