#include "nnhm/toolkit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nnhm/errors.hpp"
#include "nnhm/numeric.hpp"
#include "nnhm/special.hpp"

namespace nnhm {

PredictiveSummary conditional_predictive(double tau, double level) {
  if (!(tau >= 0.0)) throw DomainError("tau must be nonnegative");
  if (!(level > 0.0 && level < 1.0)) throw DomainError("level must lie in (0, 1)");
  double z = special::norm_ppf(0.5 * (1.0 + level));
  return {-z * tau, z * tau, std::exp(-z * tau), std::exp(z * tau), level};
}

PairMedian random_pair_median(double tau) {
  if (!(tau >= 0.0)) throw DomainError("tau must be nonnegative");
  double m = std::numbers::sqrt2 * special::norm_ppf(0.75) * tau;
  return {m, std::exp(m)};
}

NormalMixture prior_predictive_mixture(const Prior& prior) {
  if (!prior.proper()) throw ImproperPriorError("prior predictive needs a proper prior");
  // Gauss-Legendre panels in probability space; upper panels in q = 1 - u so that
  // heavy tails keep full precision
  static const double lower_cuts[] = {0.0, 1e-6, 1e-4, 1e-3, 0.01, 0.03, 0.06, 0.1, 0.15, 0.2,
                                      0.25, 0.3, 0.35, 0.4, 0.45, 0.5};
  static const double upper_cuts[] = {0.5,  0.45, 0.4,  0.35, 0.3,  0.25, 0.2,   0.15,  0.1,   0.06,
                                      0.03, 0.01, 3e-3, 1e-3, 1e-4, 1e-5, 1e-6, 1e-8, 1e-10, 1e-12};
  auto [x, w] = gauss_legendre(20);
  std::vector<double> wt, mean, sd;
  auto add_panel = [&](double a, double b, bool upper) {
    double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < x.size(); ++i) {
      double u = mid + half * x[i];
      double tau = upper ? prior.quantile_upper(u) : prior.quantile(u);
      wt.push_back(std::abs(half) * w[i]);
      mean.push_back(0.0);
      sd.push_back(tau);
    }
  };
  for (std::size_t i = 0; i + 1 < std::size(lower_cuts); ++i) add_panel(lower_cuts[i], lower_cuts[i + 1], false);
  for (std::size_t i = 0; i + 1 < std::size(upper_cuts); ++i) add_panel(upper_cuts[i + 1], upper_cuts[i], true);
  // remaining 1e-12 of tail mass
  wt.push_back(1e-12);
  mean.push_back(0.0);
  sd.push_back(prior.quantile_upper(0.5e-12));
  return NormalMixture(wt, mean, sd);
}

PredictiveSummary marginal_predictive(const Prior& prior, double level) {
  if (!(level > 0.0 && level < 1.0)) throw DomainError("level must lie in (0, 1)");
  NormalMixture mix = prior_predictive_mixture(prior);
  double hi = mix.quantile(0.5 * (1.0 + level));
  return {-hi, hi, std::exp(-hi), std::exp(hi), level};
}

CategoryScheme default_categories() {
  return {{"reasonable", 0.1, 0.5}, {"fairly high", 0.5, 1.0}, {"fairly extreme", 1.0, INFINITY}};
}

void validate(const CategoryScheme& scheme) {
  if (scheme.empty()) throw InputError("category scheme is empty");
  double prev = 0.0;
  for (const auto& c : scheme) {
    if (!(c.lower >= prev) || !(c.upper > c.lower))
      throw InputError("categories must be ascending, nonoverlapping intervals");
    prev = c.upper;
  }
}

CategoryProbabilities category_probabilities(const Prior& prior, const CategoryScheme& scheme) {
  validate(scheme);
  auto cdf = [&](double t) { return std::isinf(t) ? 1.0 : prior.cdf(t); };
  CategoryProbabilities out;
  out.below = cdf(scheme.front().lower);
  for (const auto& c : scheme) out.p.push_back(cdf(c.upper) - cdf(c.lower));
  return out;
}

namespace {

struct PresetEntry {
  const char* name;
  Prior (*make)();
};

const PresetEntry kPresets[] = {
    {"turner-logor-general", [] { return Prior::log_normal(-1.28, 0.87); }},
    {"rhodes-smd-general", [] { return Prior::log_student_t(-1.72, 1.295, 5.0); }},
    {"hn01", [] { return Prior::half_normal(0.1); }},
    {"hn0125", [] { return Prior::half_normal(0.125); }},
    {"hn018", [] { return Prior::half_normal(0.18); }},
    {"hn02", [] { return Prior::half_normal(0.2); }},
    {"hn025", [] { return Prior::half_normal(0.25); }},
    {"hn032", [] { return Prior::half_normal(0.32); }},
    {"hn05", [] { return Prior::half_normal(0.5); }},
    {"hn10", [] { return Prior::half_normal(1.0); }},
    {"hn20", [] { return Prior::half_normal(2.0); }},
};

}  // namespace

Prior preset(std::string_view name) {
  for (const auto& p : kPresets)
    if (name == p.name) return p.make();
  throw InputError("unknown prior preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& p : kPresets) out.emplace_back(p.name);
  return out;
}

std::vector<double> sample_predictive(const Prior& prior, std::size_t count, std::mt19937_64& gen) {
  if (!prior.proper()) throw ImproperPriorError("sampling needs a proper prior");
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> norm(0.0, 1.0);
  std::vector<double> out(count);
  for (auto& v : out) {
    double u = unif(gen);
    double tau = u < 0.5 ? prior.quantile(u) : prior.quantile_upper(1.0 - u);
    v = tau * norm(gen);
  }
  return out;
}

std::vector<double> sample_predictive(const Prior& prior, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return sample_predictive(prior, count, gen);
}

std::vector<double> sample_conditional(double tau, std::size_t count, std::uint64_t seed) {
  if (!(tau >= 0.0)) throw DomainError("tau must be nonnegative");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> norm(0.0, 1.0);
  std::vector<double> out(count);
  for (auto& v : out) v = tau * norm(gen);
  return out;
}

}  // namespace nnhm
