#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "nnhm/mixture.hpp"
#include "nnhm/prior.hpp"

namespace nnhm {

// interval for theta_i - mu and its exponentiated version
struct PredictiveSummary {
  double lo = 0.0, hi = 0.0;
  double exp_lo = 1.0, exp_hi = 1.0;
  double level = 0.95;
};

PredictiveSummary conditional_predictive(double tau, double level = 0.95);

struct PairMedian {
  double raw = 0.0;
  double exp = 1.0;
};
// median of |theta_i - theta_j| given tau
PairMedian random_pair_median(double tau);

// theta - mu with tau integrated over the prior, as a discrete normal scale mixture
NormalMixture prior_predictive_mixture(const Prior& prior);
PredictiveSummary marginal_predictive(const Prior& prior, double level = 0.95);

struct Category {
  std::string name;
  double lower = 0.0;
  double upper = 0.0;
};
using CategoryScheme = std::vector<Category>;

CategoryScheme default_categories();
void validate(const CategoryScheme& scheme);

struct CategoryProbabilities {
  double below = 0.0;  // mass under the first category
  std::vector<double> p;
};
CategoryProbabilities category_probabilities(const Prior& prior, const CategoryScheme& scheme);

Prior preset(std::string_view name);
std::vector<std::string> preset_names();

// tau ~ prior by inversion, then theta - mu ~ N(0, tau^2)
std::vector<double> sample_predictive(const Prior& prior, std::size_t count, std::mt19937_64& gen);
std::vector<double> sample_predictive(const Prior& prior, std::size_t count, std::uint64_t seed);
std::vector<double> sample_conditional(double tau, std::size_t count, std::uint64_t seed);

}  // namespace nnhm
