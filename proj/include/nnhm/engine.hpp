#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nnhm/effect.hpp"
#include "nnhm/mixture.hpp"
#include "nnhm/prior.hpp"

namespace nnhm {

struct Dataset {
  std::vector<EffectEstimate> studies;
  Measure measure = Measure::Precomputed;

  std::size_t size() const { return studies.size(); }
};

// checks sigma > 0 and unique labels; blank labels become "Study i"
Dataset make_dataset(std::vector<EffectEstimate> studies, Measure measure = Measure::Precomputed);

struct EffectPrior {
  enum class Kind { Uniform, Normal };
  Kind kind = Kind::Uniform;
  double mean = 0.0;
  double sd = 0.0;

  static EffectPrior uniform() { return {}; }
  static EffectPrior normal(double mean, double sd);
  std::string spec() const;
  bool operator==(const EffectPrior&) const = default;
};

// "uniform", "uniform()" or "normal(m, sd)"
EffectPrior parse_effect_prior(std::string_view text);

struct GridOptions {
  std::size_t nodes = 800;
  // NNHM_GRID_NODES when set
  static GridOptions from_env();
};

enum class CiKind { Shortest, Central };

struct Summary {
  double median = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double mean = 0.0;
  double sd = 0.0;
  double level = 0.95;
  CiKind kind = CiKind::Shortest;
  bool operator==(const Summary&) const = default;
};

// Marginal posterior of tau on a grid, with the conditional normal law of mu at each node.
class GridPosterior {
 public:
  const std::vector<double>& tau() const { return tau_; }
  const std::vector<double>& weight() const { return weight_; }    // trapezoid weights
  const std::vector<double>& density() const { return density_; }  // normalized
  const std::vector<double>& cdf() const { return cdf_; }
  const std::vector<double>& mass() const { return mass_; }  // weight * density, sums to 1
  const std::vector<double>& mu_mean() const { return mu_mean_; }
  const std::vector<double>& mu_sd() const { return mu_sd_; }
  const std::vector<double>& log_terms() const { return log_terms_; }  // log prior + log marginal likelihood

  const Dataset& data() const { return data_; }
  const Prior& prior() const { return prior_; }
  const EffectPrior& effect_prior() const { return eprior_; }

  double tau_cdf(double t) const;
  double tau_quantile(double p) const;
  double tau_density(double t) const;
  double map_tau() const;

  NormalMixture mu_mixture() const;
  // conditional mean of theta_i at each node: b y_i + (1 - b) mu_hat, b = tau^2 / (sigma_i^2 + tau^2)
  std::vector<double> shrinkage_means(std::size_t i) const;
  NormalMixture shrinkage_mixture(std::size_t i) const;
  NormalMixture prediction_mixture() const;

 private:
  friend GridPosterior tau_marginal_posterior(const Dataset&, const Prior&, const EffectPrior&, const GridOptions&);
  GridPosterior(Dataset d, Prior p, EffectPrior e) : data_(std::move(d)), prior_(std::move(p)), eprior_(e) {}

  Dataset data_;
  Prior prior_;
  EffectPrior eprior_;
  std::vector<double> tau_, weight_, density_, cdf_, mass_, mu_mean_, mu_sd_, log_terms_;
};

GridPosterior tau_marginal_posterior(const Dataset& data, const Prior& prior, const EffectPrior& eprior,
                                     const GridOptions& opts = {});

Summary summarize_tau(const GridPosterior& gp, double level = 0.95, CiKind kind = CiKind::Shortest);
Summary summarize_mixture(const NormalMixture& mix, double level = 0.95, CiKind kind = CiKind::Shortest);
Summary mu_marginal_posterior(const GridPosterior& gp, double level = 0.95, CiKind kind = CiKind::Shortest);
Summary shrinkage_posterior(const GridPosterior& gp, std::size_t i, double level = 0.95,
                            CiKind kind = CiKind::Shortest);
Summary prediction_posterior(const GridPosterior& gp, double level = 0.95, CiKind kind = CiKind::Shortest);

struct AnalysisReport {
  int schema = 1;
  std::string prior_spec;
  std::string prior_label;
  std::string effect_prior_spec;
  Measure measure = Measure::Precomputed;
  std::vector<EffectEstimate> studies;
  Summary tau;
  Summary mu;
  std::vector<Summary> shrinkage;
  Summary prediction;
  double map_tau = 0.0;
  std::optional<double> uisd;

  bool operator==(const AnalysisReport& o) const;
};

AnalysisReport analyze(const Dataset& data, const Prior& prior, const EffectPrior& eprior = EffectPrior::uniform(),
                       double level = 0.95, CiKind kind = CiKind::Shortest, const GridOptions& opts = {});

}  // namespace nnhm
