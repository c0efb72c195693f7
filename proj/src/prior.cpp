#include "nnhm/prior.hpp"

#include <cmath>
#include <numbers>

#include "nnhm/errors.hpp"
#include "nnhm/format.hpp"
#include "nnhm/special.hpp"

namespace nnhm {

namespace sp = special;
using std::numbers::pi;

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(strformat("%s must be positive and finite", what));
}

double half_t_mean(double df, double scale) {
  return 2.0 * scale * std::sqrt(df / pi) *
         std::exp(sp::lgamma(0.5 * (df + 1.0)) - sp::lgamma(0.5 * df)) / (df - 1.0);
}

}  // namespace

Prior Prior::half_normal(double scale) {
  require_positive(scale, "half-normal scale");
  Prior p;
  p.family_ = Family::HalfNormal;
  p.scale_ = scale;
  return p;
}

Prior Prior::half_student_t(double df, double scale) {
  require_positive(df, "half-Student-t degrees of freedom");
  require_positive(scale, "half-Student-t scale");
  Prior p;
  p.family_ = Family::HalfStudentT;
  p.df_ = df;
  p.scale_ = scale;
  return p;
}

Prior Prior::half_cauchy(double scale) {
  require_positive(scale, "half-Cauchy scale");
  Prior p;
  p.family_ = Family::HalfCauchy;
  p.scale_ = scale;
  p.df_ = 1.0;
  return p;
}

Prior Prior::half_logistic(double scale) {
  require_positive(scale, "half-logistic scale");
  Prior p;
  p.family_ = Family::HalfLogistic;
  p.scale_ = scale;
  return p;
}

Prior Prior::exponential(double rate) {
  require_positive(rate, "exponential rate");
  Prior p;
  p.family_ = Family::Exponential;
  p.rate_ = rate;
  p.scale_ = 1.0 / rate;
  return p;
}

Prior Prior::lomax(double shape, double scale) {
  require_positive(shape, "Lomax shape");
  require_positive(scale, "Lomax scale");
  Prior p;
  p.family_ = Family::Lomax;
  p.shape_ = shape;
  p.scale_ = scale;
  return p;
}

Prior Prior::log_normal(double mu, double sigma) {
  if (!std::isfinite(mu)) throw DomainError("log-normal location must be finite");
  require_positive(sigma, "log-normal sigma");
  Prior p;
  p.family_ = Family::LogNormal;
  p.loc_ = mu;
  p.scale_ = sigma;
  return p;
}

Prior Prior::log_student_t(double mu, double sigma, double df) {
  if (!std::isfinite(mu)) throw DomainError("log-Student-t location must be finite");
  require_positive(sigma, "log-Student-t scale");
  require_positive(df, "log-Student-t degrees of freedom");
  Prior p;
  p.family_ = Family::LogStudentT;
  p.loc_ = mu;
  p.scale_ = sigma;
  p.df_ = df;
  return p;
}

Prior Prior::uniform(double bound) {
  require_positive(bound, "uniform bound");
  Prior p;
  p.family_ = Family::Uniform;
  p.scale_ = bound;
  return p;
}

Prior Prior::improper_uniform() {
  Prior p;
  p.family_ = Family::ImproperUniform;
  return p;
}

Prior Prior::jeffreys() {
  Prior p;
  p.family_ = Family::Jeffreys;
  return p;
}

Prior Prior::bind_standard_errors(std::vector<double> sigma) const {
  Prior p = *this;
  if (family_ != Family::Jeffreys) return p;
  if (sigma.empty()) throw InputError("Jeffreys prior needs at least one standard error");
  for (double& s : sigma) {
    require_positive(s, "standard error");
    s *= s;
  }
  p.se2_ = std::move(sigma);
  return p;
}

void Prior::require_proper(const char* what) const {
  if (!proper()) throw ImproperPriorError(strformat("%s is not defined for the improper prior %s", what, label().c_str()));
}

double Prior::log_density(double x) const {
  if (!(x >= 0.0)) throw DomainError("prior density evaluated at negative tau");
  switch (family_) {
    case Family::HalfNormal: {
      double z = x / scale_;
      return std::log(2.0 * sp::kInvSqrt2Pi / scale_) - 0.5 * z * z;
    }
    case Family::HalfStudentT:
    case Family::HalfCauchy:
      return std::log(2.0 / scale_) + sp::t_log_pdf(x / scale_, df_);
    case Family::HalfLogistic: {
      // (1/(2s)) sech^2(x/(2s))
      double u = x / scale_;
      return -std::log(2.0 * scale_) + std::log(4.0) - u - 2.0 * std::log1p(std::exp(-u));
    }
    case Family::Exponential:
      return std::log(rate_) - rate_ * x;
    case Family::Lomax:
      return std::log(shape_ / scale_) - (shape_ + 1.0) * std::log1p(x / scale_);
    case Family::LogNormal: {
      if (x == 0.0) return -INFINITY;
      double z = (std::log(x) - loc_) / scale_;
      return std::log(sp::kInvSqrt2Pi / scale_) - 0.5 * z * z - std::log(x);
    }
    case Family::LogStudentT: {
      if (x == 0.0) return -INFINITY;
      double z = (std::log(x) - loc_) / scale_;
      return sp::t_log_pdf(z, df_) - std::log(scale_ * x);
    }
    case Family::Uniform:
      return x <= scale_ ? -std::log(scale_) : -INFINITY;
    case Family::ImproperUniform:
      return 0.0;
    case Family::Jeffreys: {
      if (se2_.empty()) throw InputError("Jeffreys prior used before binding standard errors");
      double t2 = x * x, acc = 0.0;
      for (double s2 : se2_) {
        double v = s2 + t2;
        acc += t2 / (v * v);
      }
      return 0.5 * std::log(acc);
    }
  }
  return -INFINITY;
}

double Prior::density(double x) const { return std::exp(log_density(x)); }

double Prior::cdf(double x) const {
  require_proper("cdf");
  if (!(x >= 0.0)) throw DomainError("prior cdf evaluated at negative tau");
  switch (family_) {
    case Family::HalfNormal:
      return std::erf(x / (scale_ * std::numbers::sqrt2));
    case Family::HalfStudentT:
      return 1.0 - 2.0 * sp::t_sf(x / scale_, df_);
    case Family::HalfCauchy:
      return 2.0 / pi * std::atan(x / scale_);
    case Family::HalfLogistic:
      return std::tanh(0.5 * x / scale_);
    case Family::Exponential:
      return -std::expm1(-rate_ * x);
    case Family::Lomax:
      return -std::expm1(-shape_ * std::log1p(x / scale_));
    case Family::LogNormal:
      return x == 0.0 ? 0.0 : sp::norm_cdf((std::log(x) - loc_) / scale_);
    case Family::LogStudentT:
      return x == 0.0 ? 0.0 : sp::t_cdf((std::log(x) - loc_) / scale_, df_);
    case Family::Uniform:
      return std::min(x / scale_, 1.0);
    default:
      break;
  }
  return NAN;
}

double Prior::sf(double x) const {
  require_proper("survival function");
  if (!(x >= 0.0)) throw DomainError("prior survival function evaluated at negative tau");
  switch (family_) {
    case Family::HalfNormal:
      return std::erfc(x / (scale_ * std::numbers::sqrt2));
    case Family::HalfStudentT:
      return 2.0 * sp::t_sf(x / scale_, df_);
    case Family::HalfCauchy:
      return x == 0.0 ? 1.0 : 2.0 / pi * std::atan(scale_ / x);
    case Family::HalfLogistic:
      return 2.0 / (std::exp(x / scale_) + 1.0);
    case Family::Exponential:
      return std::exp(-rate_ * x);
    case Family::Lomax:
      return std::exp(-shape_ * std::log1p(x / scale_));
    case Family::LogNormal:
      return x == 0.0 ? 1.0 : sp::norm_sf((std::log(x) - loc_) / scale_);
    case Family::LogStudentT:
      return x == 0.0 ? 1.0 : sp::t_sf((std::log(x) - loc_) / scale_, df_);
    case Family::Uniform:
      return std::max(1.0 - x / scale_, 0.0);
    default:
      break;
  }
  return NAN;
}

double Prior::lower_quantile(double p) const {
  switch (family_) {
    case Family::HalfNormal:
      return scale_ * sp::norm_ppf(0.5 + 0.5 * p);
    case Family::HalfStudentT:
      return scale_ * sp::t_ppf(0.5 + 0.5 * p, df_);
    case Family::HalfCauchy:
      return scale_ * std::tan(0.5 * pi * p);
    case Family::HalfLogistic:
      return 2.0 * scale_ * std::atanh(p);
    case Family::Exponential:
      return -std::log1p(-p) / rate_;
    case Family::Lomax:
      return scale_ * std::expm1(-std::log1p(-p) / shape_);
    case Family::LogNormal:
      return p == 0.0 ? 0.0 : std::exp(loc_ + scale_ * sp::norm_ppf(p));
    case Family::LogStudentT:
      return p == 0.0 ? 0.0 : std::exp(loc_ + scale_ * sp::t_ppf(p, df_));
    case Family::Uniform:
      return p * scale_;
    default:
      break;
  }
  return NAN;
}

double Prior::quantile(double p) const {
  require_proper("quantile");
  if (!(p >= 0.0 && p < 1.0)) throw DomainError("quantile probability must lie in [0, 1)");
  if (p <= 0.5) return lower_quantile(p);
  return quantile_upper(1.0 - p);
}

double Prior::quantile_upper(double q) const {
  require_proper("quantile");
  if (!(q > 0.0 && q <= 1.0)) throw DomainError("upper tail probability must lie in (0, 1]");
  if (q >= 0.5) return lower_quantile(1.0 - q);
  switch (family_) {
    case Family::HalfNormal:
      return scale_ * sp::norm_isf(0.5 * q);
    case Family::HalfStudentT:
      return scale_ * sp::t_isf(0.5 * q, df_);
    case Family::HalfCauchy:
      return scale_ / std::tan(0.5 * pi * q);
    case Family::HalfLogistic:
      return scale_ * std::log((2.0 - q) / q);
    case Family::Exponential:
      return -std::log(q) / rate_;
    case Family::Lomax:
      return scale_ * std::expm1(-std::log(q) / shape_);
    case Family::LogNormal:
      return std::exp(loc_ + scale_ * sp::norm_isf(q));
    case Family::LogStudentT:
      return std::exp(loc_ + scale_ * sp::t_isf(q, df_));
    case Family::Uniform:
      return scale_ * (1.0 - q);
    default:
      break;
  }
  return NAN;
}

DistributionSummary Prior::summarize() const {
  require_proper("summary");
  DistributionSummary s;
  s.median = quantile(0.5);
  s.q95 = quantile(0.95);
  std::optional<double> second;  // E[X^2]
  switch (family_) {
    case Family::HalfNormal:
      s.mean = scale_ * std::sqrt(2.0 / pi);
      second = scale_ * scale_;
      break;
    case Family::HalfStudentT:
      if (df_ > 1.0) s.mean = half_t_mean(df_, scale_);
      if (df_ > 2.0) second = scale_ * scale_ * df_ / (df_ - 2.0);
      break;
    case Family::HalfCauchy:
      break;
    case Family::HalfLogistic:
      s.mean = 2.0 * scale_ * std::numbers::ln2;
      second = scale_ * scale_ * pi * pi / 3.0;
      break;
    case Family::Exponential:
      s.mean = 1.0 / rate_;
      second = 2.0 / (rate_ * rate_);
      break;
    case Family::Lomax:
      if (shape_ > 1.0) s.mean = scale_ / (shape_ - 1.0);
      if (shape_ > 2.0) second = 2.0 * scale_ * scale_ / ((shape_ - 1.0) * (shape_ - 2.0));
      break;
    case Family::LogNormal:
      s.mean = std::exp(loc_ + 0.5 * scale_ * scale_);
      second = std::exp(2.0 * loc_ + 2.0 * scale_ * scale_);
      break;
    case Family::LogStudentT:
      break;
    case Family::Uniform:
      s.mean = 0.5 * scale_;
      second = scale_ * scale_ / 3.0;
      break;
    default:
      break;
  }
  if (s.mean && second) {
    double m = *s.mean;
    double var = *second - m * m;
    if (family_ == Family::Lomax)
      var = scale_ * scale_ * shape_ / ((shape_ - 1.0) * (shape_ - 1.0) * (shape_ - 2.0));
    else if (family_ == Family::LogNormal)
      var = std::expm1(scale_ * scale_) * m * m;
    s.sd = std::sqrt(var);
    s.cv = *s.sd / m;
  }
  return s;
}

Prior Prior::scaled(double c) const {
  require_positive(c, "scale factor");
  Prior p = *this;
  switch (family_) {
    case Family::Exponential:
      p.rate_ = rate_ / c;
      p.scale_ = 1.0 / p.rate_;
      break;
    case Family::LogNormal:
    case Family::LogStudentT:
      p.loc_ = loc_ + std::log(c);
      break;
    case Family::ImproperUniform:
    case Family::Jeffreys:
      break;
    default:
      p.scale_ = scale_ * c;
      break;
  }
  return p;
}

Prior scale_to_median(const Prior& unit, double target_median) {
  if (!(target_median > 0.0)) throw DomainError("target median must be positive");
  return unit.scaled(target_median / unit.quantile(0.5));
}

std::string family_name(Family f) {
  switch (f) {
    case Family::HalfNormal: return "half-normal";
    case Family::HalfStudentT: return "half-Student-t";
    case Family::HalfCauchy: return "half-Cauchy";
    case Family::HalfLogistic: return "half-logistic";
    case Family::Exponential: return "exponential";
    case Family::Lomax: return "Lomax";
    case Family::LogNormal: return "log-normal";
    case Family::LogStudentT: return "log-Student-t";
    case Family::Uniform: return "uniform";
    case Family::ImproperUniform: return "uniform";
    case Family::Jeffreys: return "Jeffreys";
  }
  return "?";
}

std::string Prior::spec() const {
  switch (family_) {
    case Family::HalfNormal: return strformat("halfnormal(%.17g)", scale_);
    case Family::HalfStudentT: return strformat("halfstudentt(%.17g,%.17g)", df_, scale_);
    case Family::HalfCauchy: return strformat("halfcauchy(%.17g)", scale_);
    case Family::HalfLogistic: return strformat("halflogistic(%.17g)", scale_);
    case Family::Exponential: return strformat("exponential(rate=%.17g)", rate_);
    case Family::Lomax: return strformat("lomax(%.17g,%.17g)", shape_, scale_);
    case Family::LogNormal: return strformat("lognormal(%.17g,%.17g)", loc_, scale_);
    case Family::LogStudentT: return strformat("logstudentt(%.17g,%.17g,%.17g)", loc_, scale_, df_);
    case Family::Uniform: return strformat("uniform(%.17g)", scale_);
    case Family::ImproperUniform: return "uniform()";
    case Family::Jeffreys: return "jeffreys()";
  }
  return {};
}

std::string Prior::label() const {
  switch (family_) {
    case Family::HalfNormal: return "half-normal(" + fixed(scale_) + ")";
    case Family::HalfStudentT: return strformat("half-Student-t(%g, %s)", df_, fixed(scale_).c_str());
    case Family::HalfCauchy: return "half-Cauchy(" + fixed(scale_) + ")";
    case Family::HalfLogistic: return "half-logistic(" + fixed(scale_) + ")";
    case Family::Exponential: return "exponential(" + fixed(scale_) + ")";
    case Family::Lomax: return strformat("Lomax(%g, %s)", shape_, fixed(scale_).c_str());
    case Family::LogNormal: return "log-normal(" + fixed(loc_) + ", " + fixed(scale_) + ")";
    case Family::LogStudentT:
      return strformat("log-Student-t(%s, %s, %g)", fixed(loc_).c_str(), fixed(scale_, 3).c_str(), df_);
    case Family::Uniform: return "uniform(0, " + fixed(scale_) + ")";
    case Family::ImproperUniform: return "uniform";
    case Family::Jeffreys: return "Jeffreys";
  }
  return {};
}

}  // namespace nnhm
