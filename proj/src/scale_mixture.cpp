#include "nnhm/scale_mixture.hpp"

#include <cmath>
#include <numbers>

#include "nnhm/errors.hpp"
#include "nnhm/special.hpp"
#include "nnhm/toolkit.hpp"

namespace nnhm {

namespace sp = special;

namespace {

constexpr double kNuLo = 2.05;
constexpr double kNuHi = 1e7;
constexpr double kMaxCv = 2.5;

// E[sigma]/s for the scaled inverse-chi
double inv_chi_mean_ratio(double df) {
  return std::exp(sp::lgamma(0.5 * (df - 1.0)) - sp::lgamma(0.5 * df)) / std::numbers::sqrt2;
}

void check_spec(const MixingSpec& spec) {
  if (!(spec.mean > 0.0) || !std::isfinite(spec.mean)) throw DomainError("mixing mean must be positive");
  if (!(spec.cv >= 0.0) || !std::isfinite(spec.cv)) throw DomainError("mixing cv must be nonnegative");
}

}  // namespace

ScaledInverseChi::ScaledInverseChi(double df_, double scale_) : df(df_), scale(scale_) {
  if (!(df > 0.0) || !(scale > 0.0)) throw DomainError("inverse-chi df and scale must be positive");
}

double ScaledInverseChi::density(double x) const {
  if (!(x > 0.0)) {
    if (x == 0.0) return 0.0;
    throw DomainError("inverse-chi density at negative argument");
  }
  double r = scale / x;
  return std::exp((1.0 - 0.5 * df) * std::numbers::ln2 - std::log(scale) - sp::lgamma(0.5 * df) +
                  (df + 1.0) * std::log(r) - 0.5 * r * r);
}

double ScaledInverseChi::mean() const {
  if (!(df > 1.0)) throw DomainError("inverse-chi mean needs df > 1");
  return scale * inv_chi_mean_ratio(df);
}

double ScaledInverseChi::variance() const {
  if (!(df > 2.0)) throw DomainError("inverse-chi variance needs df > 2");
  double r = inv_chi_mean_ratio(df);
  return scale * scale * (1.0 / (df - 2.0) - r * r);
}

double ScaledInverseChi::cv() const { return inverse_chi_cv(df); }

double ScaledInverseChi::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("quantile probability must lie in (0, 1)");
  return scale / std::sqrt(sp::chi2_ppf(1.0 - p, df));
}

InverseGamma::InverseGamma(double shape_, double scale_) : shape(shape_), scale(scale_) {
  if (!(shape > 0.0) || !(scale > 0.0)) throw DomainError("inverse-gamma shape and scale must be positive");
}

double InverseGamma::density(double x) const {
  if (!(x > 0.0)) return 0.0;
  return std::exp(shape * std::log(scale) - sp::lgamma(shape) - (shape + 1.0) * std::log(x) - scale / x);
}

double InverseGamma::mean() const {
  if (!(shape > 1.0)) throw DomainError("inverse-gamma mean needs shape > 1");
  return scale / (shape - 1.0);
}

double InverseGamma::cv() const {
  if (!(shape > 2.0)) throw DomainError("inverse-gamma cv needs shape > 2");
  return 1.0 / std::sqrt(shape - 2.0);
}

double InverseGamma::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("quantile probability must lie in (0, 1)");
  return scale / sp::gamma_ppf(1.0 - p, shape);
}

double inverse_chi_cv(double df) {
  if (!(df > 2.0)) throw DomainError("inverse-chi cv needs df > 2");
  double r = inv_chi_mean_ratio(df);
  return std::sqrt(1.0 / (df - 2.0) - r * r) / r;
}

double cv_to_nu(double cv) {
  if (!(cv > 0.0) || cv > kMaxCv) throw DomainError("cv must lie in (0, 2.5] for half-normal mixing");
  if (cv < inverse_chi_cv(kNuHi)) return INFINITY;
  // cv decreases in df; bisect in log(df)
  double a = std::log(kNuLo), b = std::log(kNuHi);
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    double m = 0.5 * (a + b);
    if (inverse_chi_cv(std::exp(m)) > cv)
      a = m;
    else
      b = m;
  }
  return std::exp(0.5 * (a + b));
}

Prior lomax_from_mixture(const MixingSpec& spec) {
  check_spec(spec);
  if (!(spec.cv > 0.0)) throw DomainError("Lomax mixing needs cv > 0");
  double k = 1.0 / (spec.cv * spec.cv);
  return Prior::lomax(2.0 + k, spec.mean * (1.0 + k));
}

Prior half_t_from_mixture(const MixingSpec& spec) {
  check_spec(spec);
  if (spec.cv == 0.0) return Prior::half_normal(spec.mean);
  double nu = cv_to_nu(spec.cv);
  if (std::isinf(nu)) return Prior::half_normal(spec.mean);
  double implied = std::sqrt(nu) * inv_chi_mean_ratio(nu);
  return Prior::half_student_t(nu, spec.mean / implied);
}

MixtureRow mixture_row(MixtureBase base, const MixingSpec& spec, double predictive_prob) {
  check_spec(spec);
  MixtureRow row;
  row.base = base;
  row.spec = spec;
  bool fixed = spec.cv == 0.0;
  if (base == MixtureBase::Exponential) {
    if (fixed) {
      row.prior = Prior::exponential_scale(spec.mean);
      row.mixing_median = row.mixing_q95 = spec.mean;
    } else {
      row.prior = lomax_from_mixture(spec);
      InverseGamma ig(row.prior.shape(), row.prior.scale());
      row.mixing_shape = ig.shape;
      row.mixing_scale = ig.scale;
      row.mixing_median = ig.quantile(0.5);
      row.mixing_q95 = ig.quantile(0.95);
    }
  } else {
    row.prior = half_t_from_mixture(spec);
    if (row.prior.family() == Family::HalfNormal) {
      row.mixing_median = row.mixing_q95 = spec.mean;
    } else {
      ScaledInverseChi ic(row.prior.df(), std::sqrt(row.prior.df()) * row.prior.scale());
      row.mixing_shape = ic.df;
      row.mixing_scale = ic.scale;
      row.mixing_median = ic.quantile(0.5);
      row.mixing_q95 = ic.quantile(0.95);
    }
  }
  row.heterogeneity = row.prior.summarize();
  row.predictive_prob = predictive_prob;
  row.predictive_quantile = prior_predictive_mixture(row.prior).quantile(predictive_prob);
  return row;
}

std::string to_string(MixtureBase base) { return base == MixtureBase::Exponential ? "exponential" : "halfnormal"; }

}  // namespace nnhm
