#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "nnhm/engine.hpp"

// Brute-force reference: the joint (tau, mu) posterior integrated on a dense
// tensor Gauss-Legendre grid, with its own prior densities and no use of the
// engine's closed-form conditionals.
namespace oracle {

struct PriorDensity {
  std::string name;
  std::string spec;  // same law in the engine's grammar
  std::function<double(double)> pdf;
  double tail = INFINITY;  // density ~ tau^-tail far out
};

const std::vector<PriorDensity>& priors();

class Posterior2D {
 public:
  Posterior2D(const nnhm::Dataset& data, std::function<double(double)> prior_pdf);

  double tau_cdf(double t) const;
  double mu_cdf(double x) const;
  double pred_cdf(double x) const;

  double tau_mean() const { return tau_m_; }
  double tau_sd() const { return tau_s_; }
  double mu_mean() const { return mu_m_; }
  double mu_sd() const { return mu_s_; }
  double pred_mean() const { return mu_m_; }
  double pred_sd() const { return pred_s_; }

 private:
  double log_joint(double tau, double mu) const;
  double mu_integral(double tau, double upper) const;  // integral over mu below `upper`
  void mu_window(double tau, double& lo, double& hi) const;

  std::vector<double> y_, s2_;
  double smax_ = 0.0, ymin_ = 0.0, ymax_ = 0.0;
  std::function<double(double)> prior_;
  double shift_ = 0.0;  // log-scale offset keeping the integrand O(1)
  double z_ = 0.0;
  std::vector<double> tau_node_, tau_w_;
  double tau_m_ = 0, tau_s_ = 0, mu_m_ = 0, mu_s_ = 0, pred_s_ = 0;
};

// smallest x with cdf(x) >= p, by bisection from a bracket grown around `guess`
double quantile(const std::function<double(double)>& cdf, double p, double guess, double floor_value);

// true when the p-quantile of `cdf` lies within tol of q
bool quantile_within(const std::function<double(double)>& cdf, double p, double q, double tol);

}  // namespace oracle

namespace oracle {

// every mismatch beyond tol between engine summaries and the brute-force posterior
std::vector<std::string> compare_engine(const nnhm::Dataset& data, const PriorDensity& prior, double tol);

}  // namespace oracle
