#pragma once

#include <string>
#include <vector>

namespace invariants {

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;  // first violation, if any
};

Check cdf_quantile_round_trip();
Check density_normalization();
Check mc_vs_exact_predictive();
Check stochastic_ordering();
Check shrinkage_convexity();
Check prediction_width_dominance();
Check prior_scaling_covariance();
Check common_effect_consistency();

std::vector<Check> all();

}  // namespace invariants
