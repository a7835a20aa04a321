#include "jsurv/model.hpp"

#include <algorithm>
#include <cmath>

namespace jsurv {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

void HazardSpec::validate() const {
  if (levels.empty()) throw invalid_input("HazardSpec: no levels");
  if (levels.size() != cuts.size() + 1)
    throw invalid_input("HazardSpec: levels.size() must equal cuts.size() + 1");
  for (double l : levels)
    if (!(l > 0.0) || !std::isfinite(l)) throw invalid_input("HazardSpec: levels must be positive");
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    if (!(cuts[k] > 0.0) || !std::isfinite(cuts[k]))
      throw invalid_input("HazardSpec: cuts must be positive");
    if (k > 0 && !(cuts[k] > cuts[k - 1]))
      throw invalid_input("HazardSpec: cuts must be strictly increasing");
  }
}

void PatientRecord::validate() const {
  if (obs_times.size() != obs_values.size())
    throw invalid_input("patient " + id + ": obs_times/obs_values length mismatch");
  if (!(event_time > 0.0) || !std::isfinite(event_time))
    throw invalid_input("patient " + id + ": event_time must be positive");
  for (std::size_t j = 0; j < obs_times.size(); ++j) {
    if (!std::isfinite(obs_times[j]) || !std::isfinite(obs_values[j]))
      throw invalid_input("patient " + id + ": non-finite measurement");
    if (obs_times[j] < 0.0) throw invalid_input("patient " + id + ": negative obs time");
    if (j > 0 && !(obs_times[j] > obs_times[j - 1]))
      throw invalid_input("patient " + id + ": obs_times must be strictly increasing");
    if (obs_times[j] > event_time)
      throw invalid_input("patient " + id + ": obs time after event_time");
  }
  for (double z : covariates)
    if (!std::isfinite(z)) throw invalid_input("patient " + id + ": non-finite covariate");
}

std::size_t covariate_dim(const Cohort& cohort) {
  if (cohort.empty()) return 0;
  const std::size_t p = cohort.front().covariates.size();
  for (const auto& pat : cohort)
    if (pat.covariates.size() != p)
      throw invalid_input("cohort: inconsistent covariate dimension at patient " + pat.id);
  return p;
}

void JointParams::validate() const {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) throw invalid_input("JointParams: sigma2 must be positive");
  if (!(tau2 > 0.0) || !std::isfinite(tau2)) throw invalid_input("JointParams: tau2 must be positive");
  if (!std::isfinite(beta0) || !std::isfinite(beta1) || !std::isfinite(alpha))
    throw invalid_input("JointParams: non-finite coefficient");
  for (double g : gamma)
    if (!std::isfinite(g)) throw invalid_input("JointParams: non-finite gamma");
  hazard.validate();
}

void PriorSpec::validate() const {
  if (!(coef_var > 0.0)) throw invalid_input("PriorSpec: coef_var must be positive");
  if (!(var_shape > 0.0) || !(var_scale > 0.0))
    throw invalid_input("PriorSpec: inverse-gamma hyperparameters must be positive");
  if (!(hazard_shape > 0.0) || !(hazard_rate > 0.0))
    throw invalid_input("PriorSpec: gamma hyperparameters must be positive");
}

double inv_gamma_logpdf(double x, double shape, double scale) {
  if (!(x > 0.0)) return kNegInf;
  return shape * std::log(scale) - std::lgamma(shape) - (shape + 1.0) * std::log(x) - scale / x;
}

double gamma_logpdf(double x, double shape, double rate) {
  if (!(x > 0.0)) return kNegInf;
  return shape * std::log(rate) - std::lgamma(shape) + (shape - 1.0) * std::log(x) - rate * x;
}

double longitudinal_mean(const JointParams& params, double b, double t) {
  return params.beta0 + params.beta1 * t + b;
}

double longitudinal_loglik(const JointParams& params, const PatientRecord& patient, double b) {
  if (!std::isfinite(b)) throw invalid_input("longitudinal_loglik: non-finite b");
  double ll = 0.0;
  for (std::size_t j = 0; j < patient.n_obs(); ++j) {
    const double y = patient.obs_values[j];
    if (!std::isfinite(y)) throw invalid_input("longitudinal_loglik: non-finite measurement");
    ll += normal_logpdf(y, longitudinal_mean(params, b, patient.obs_times[j]), params.sigma2);
  }
  return ll;
}

double cumulative_baseline_hazard(const HazardSpec& hazard, double t) {
  double H = 0.0;
  for (std::size_t k = 0; k < hazard.n_intervals(); ++k) {
    const double lo = hazard.lower_edge(k);
    if (t <= lo) break;
    const double hi = std::min(t, hazard.upper_edge(k));
    H += hazard.levels[k] * (hi - lo);
  }
  return H;
}

double linear_predictor(const JointParams& params, const std::vector<double>& z, double b) {
  double eta = params.alpha * b;
  for (std::size_t j = 0; j < params.gamma.size(); ++j) eta += params.gamma[j] * z[j];
  return eta;
}

double survival_loglik(const JointParams& params, const PatientRecord& patient, double b) {
  if (!std::isfinite(b)) throw invalid_input("survival_loglik: non-finite b");
  const double eta = linear_predictor(params, patient.covariates, b);
  const double H = cumulative_baseline_hazard(params.hazard, patient.event_time);
  double ll = -std::exp(eta) * H;
  if (patient.event_indicator)
    ll += std::log(params.hazard.level_at(patient.event_time)) + eta;
  return ll;
}

double log_prior(const JointParams& params, const PriorSpec& prior) {
  double lp = normal_logpdf(params.beta0, prior.coef_mean, prior.coef_var) +
              normal_logpdf(params.beta1, prior.coef_mean, prior.coef_var) +
              normal_logpdf(params.alpha, prior.coef_mean, prior.coef_var);
  for (double g : params.gamma) lp += normal_logpdf(g, prior.coef_mean, prior.coef_var);
  lp += inv_gamma_logpdf(params.sigma2, prior.var_shape, prior.var_scale);
  lp += inv_gamma_logpdf(params.tau2, prior.var_shape, prior.var_scale);
  for (double l : params.hazard.levels) lp += gamma_logpdf(l, prior.hazard_shape, prior.hazard_rate);
  return lp;
}

double conditional_survival_given_b(const JointParams& params, double b,
                                    const std::vector<double>& z, double t, double u) {
  if (!(t >= 0.0) || !(u >= t))
    throw invalid_input("conditional_survival_given_b: requires 0 <= t <= u");
  if (u == t) return 1.0;
  const double dH = cumulative_baseline_hazard(params.hazard, u) -
                    cumulative_baseline_hazard(params.hazard, t);
  return std::exp(-std::exp(linear_predictor(params, z, b)) * dH);
}

std::vector<double> default_hazard_cuts(const Cohort& cohort, std::size_t n_intervals) {
  std::vector<double> events;
  double max_t = 0.0;
  for (const auto& pat : cohort) {
    max_t = std::max(max_t, pat.event_time);
    if (pat.event_indicator) events.push_back(pat.event_time);
  }
  std::vector<double> cuts;
  if (events.size() >= n_intervals) {
    std::sort(events.begin(), events.end());
    for (std::size_t k = 1; k < n_intervals; ++k) {
      // type-7 quantile at k/n_intervals
      const double h = static_cast<double>(k) / n_intervals * (events.size() - 1);
      const std::size_t i = static_cast<std::size_t>(h);
      const double frac = h - static_cast<double>(i);
      double q = events[i];
      if (i + 1 < events.size()) q += frac * (events[i + 1] - events[i]);
      if (q > 0.0 && (cuts.empty() || q > cuts.back())) cuts.push_back(q);
    }
  }
  if (cuts.size() + 1 < n_intervals) {
    cuts.clear();
    if (max_t <= 0.0) max_t = 1.0;
    for (std::size_t k = 1; k < n_intervals; ++k)
      cuts.push_back(max_t * static_cast<double>(k) / n_intervals);
  }
  return cuts;
}

}  // namespace jsurv
