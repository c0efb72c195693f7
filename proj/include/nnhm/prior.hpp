#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nnhm {

enum class Family {
  HalfNormal,
  HalfStudentT,
  HalfCauchy,
  HalfLogistic,
  Exponential,
  Lomax,
  LogNormal,
  LogStudentT,
  Uniform,
  ImproperUniform,
  Jeffreys,
};

struct DistributionSummary {
  double median = 0.0;
  double q95 = 0.0;
  std::optional<double> mean;
  std::optional<double> sd;
  std::optional<double> cv;
};

// Heterogeneity prior on tau >= 0. Immutable value type.
class Prior {
 public:
  static Prior half_normal(double scale);
  static Prior half_student_t(double df, double scale);
  static Prior half_cauchy(double scale);
  static Prior half_logistic(double scale);
  static Prior exponential(double rate);
  static Prior exponential_scale(double scale) { return exponential(1.0 / scale); }
  static Prior lomax(double shape, double scale);
  static Prior log_normal(double mu, double sigma);
  static Prior log_student_t(double mu, double sigma, double df);
  static Prior uniform(double bound);
  static Prior improper_uniform();
  static Prior jeffreys();

  Family family() const { return family_; }
  bool proper() const { return family_ != Family::ImproperUniform && family_ != Family::Jeffreys; }

  // family-dependent; see factories for meaning
  double scale() const { return scale_; }
  double df() const { return df_; }
  double rate() const { return rate_; }
  double shape() const { return shape_; }
  double location() const { return loc_; }

  // Jeffreys needs the standard errors of the data it will be combined with.
  Prior bind_standard_errors(std::vector<double> sigma) const;
  bool needs_binding() const { return family_ == Family::Jeffreys && se2_.empty(); }

  double log_density(double x) const;
  double density(double x) const;
  double cdf(double x) const;
  double sf(double x) const;
  double quantile(double p) const;
  // quantile(1 - q) without cancellation
  double quantile_upper(double q) const;
  DistributionSummary summarize() const;

  // distribution of c * tau
  Prior scaled(double c) const;

  std::string spec() const;   // round-trips through parse_prior
  std::string label() const;  // short display form, 2 decimals

  bool operator==(const Prior&) const = default;

 private:
  Prior() = default;
  void require_proper(const char* what) const;
  double lower_quantile(double p) const;

  Family family_ = Family::HalfNormal;
  double scale_ = 1.0;
  double df_ = 0.0;
  double rate_ = 0.0;
  double shape_ = 0.0;
  double loc_ = 0.0;
  std::vector<double> se2_;
};

Prior scale_to_median(const Prior& unit, double target_median);

// halfnormal(0.5), halfstudentt(3,0.44), exponential(scale=0.49), uniform(), jeffreys(), presets ...
Prior parse_prior(std::string_view text);

std::string family_name(Family f);

}  // namespace nnhm
