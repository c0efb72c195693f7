#pragma once

#include <string>

#include "nnhm/prior.hpp"

namespace nnhm {

// expectation and coefficient of variation of a random scale parameter
struct MixingSpec {
  double mean = 1.0;
  double cv = 0.0;
};

// law of s / sqrt(X), X ~ chi^2_df
struct ScaledInverseChi {
  double df = 0.0;
  double scale = 0.0;

  ScaledInverseChi(double df, double scale);
  double density(double x) const;
  double mean() const;      // df > 1
  double variance() const;  // df > 2
  double cv() const;
  double quantile(double p) const;
};

struct InverseGamma {
  double shape = 0.0;
  double scale = 0.0;

  InverseGamma(double shape, double scale);
  double density(double x) const;
  double mean() const;
  double cv() const;
  double quantile(double p) const;
};

// depends on df only
double inverse_chi_cv(double df);
// inverse of inverse_chi_cv; +inf below the representable range (cv -> 0)
double cv_to_nu(double cv);

Prior lomax_from_mixture(const MixingSpec& spec);
Prior half_t_from_mixture(const MixingSpec& spec);

enum class MixtureBase { Exponential, HalfNormal };

// one row of the exponential/Lomax or half-normal/half-t mixture tables
struct MixtureRow {
  MixtureBase base = MixtureBase::Exponential;
  MixingSpec spec;
  double mixing_shape = 0.0;  // inverse-gamma alpha or inverse-chi df (0 when cv = 0)
  double mixing_scale = 0.0;  // inverse-gamma beta or inverse-chi s
  double mixing_median = 0.0;
  double mixing_q95 = 0.0;
  Prior prior = Prior::half_normal(1.0);
  DistributionSummary heterogeneity;
  double predictive_prob = 0.0;
  double predictive_quantile = 0.0;
};

MixtureRow mixture_row(MixtureBase base, const MixingSpec& spec, double predictive_prob);

std::string to_string(MixtureBase base);

}  // namespace nnhm
