#include "nnhm/engine.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <set>

#include "nnhm/errors.hpp"
#include "nnhm/format.hpp"
#include "nnhm/numeric.hpp"
#include "nnhm/uisd.hpp"

namespace nnhm {

Dataset make_dataset(std::vector<EffectEstimate> studies, Measure measure) {
  if (studies.empty()) throw InputError("dataset has no studies");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < studies.size(); ++i) {
    auto& s = studies[i];
    if (s.label.empty()) s.label = "Study " + std::to_string(i + 1);
    if (!std::isfinite(s.y)) throw InputError("study '" + s.label + "': estimate is not finite");
    if (!(s.sigma > 0.0) || !std::isfinite(s.sigma))
      throw InputError("study '" + s.label + "': standard error must be positive");
    if (!seen.insert(s.label).second) throw InputError("duplicate study label '" + s.label + "'");
  }
  return {std::move(studies), measure};
}

EffectPrior EffectPrior::normal(double mean, double sd) {
  if (!std::isfinite(mean)) throw DomainError("effect prior mean must be finite");
  if (!(sd > 0.0) || !std::isfinite(sd)) throw DomainError("effect prior sd must be positive");
  return {Kind::Normal, mean, sd};
}

std::string EffectPrior::spec() const {
  if (kind == Kind::Uniform) return "uniform()";
  return strformat("normal(%.17g,%.17g)", mean, sd);
}

EffectPrior parse_effect_prior(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "uniform" || s == "uniform()") return EffectPrior::uniform();
  if (s.rfind("normal(", 0) == 0 && s.back() == ')') {
    std::string body = s.substr(7, s.size() - 8);
    auto comma = body.find(',');
    if (comma != std::string::npos) {
      double m = 0.0, sd = 0.0;
      auto r1 = std::from_chars(body.data(), body.data() + comma, m);
      auto r2 = std::from_chars(body.data() + comma + 1, body.data() + body.size(), sd);
      if (r1.ec == std::errc() && r1.ptr == body.data() + comma && r2.ec == std::errc() &&
          r2.ptr == body.data() + body.size())
        return EffectPrior::normal(m, sd);
    }
  }
  throw InputError("bad effect prior '" + std::string(text) + "' (use uniform() or normal(mean, sd))");
}

GridOptions GridOptions::from_env() {
  GridOptions o;
  if (const char* env = std::getenv("NNHM_GRID_NODES")) {
    std::size_t n = 0;
    std::string_view v(env);
    auto r = std::from_chars(v.data(), v.data() + v.size(), n);
    if (r.ec != std::errc() || r.ptr != v.data() + v.size() || n < 50)
      throw InputError("NNHM_GRID_NODES must be an integer >= 50");
    o.nodes = n;
  }
  return o;
}

namespace {

struct NodeEval {
  double log_term;
  double mu_mean;
  double mu_sd;
};

class Likelihood {
 public:
  Likelihood(const Dataset& d, const Prior& prior, const EffectPrior& e) : prior_(prior) {
    for (const auto& s : d.studies) {
      y_.push_back(s.y);
      s2_.push_back(s.sigma * s.sigma);
    }
    if (e.kind == EffectPrior::Kind::Normal) {
      has_pseudo_ = true;
      y0_ = e.mean;
      w0_ = 1.0 / (e.sd * e.sd);
    }
  }

  NodeEval operator()(double tau) const {
    double t2 = tau * tau;
    double sw = has_pseudo_ ? w0_ : 0.0;
    double swy = has_pseudo_ ? w0_ * y0_ : 0.0;
    double slw = 0.0;
    for (std::size_t i = 0; i < y_.size(); ++i) {
      double w = 1.0 / (s2_[i] + t2);
      sw += w;
      swy += w * y_[i];
      slw += std::log(w);
    }
    double mu = swy / sw;
    double q = has_pseudo_ ? w0_ * (y0_ - mu) * (y0_ - mu) : 0.0;
    for (std::size_t i = 0; i < y_.size(); ++i) {
      double r = y_[i] - mu;
      q += r * r / (s2_[i] + t2);
    }
    double lp = prior_.log_density(tau);
    return {lp - 0.5 * std::log(sw) + 0.5 * slw - 0.5 * q, mu, 1.0 / std::sqrt(sw)};
  }

 private:
  const Prior& prior_;
  std::vector<double> y_, s2_;
  bool has_pseudo_ = false;
  double y0_ = 0.0, w0_ = 0.0;
};

void check_propriety(const Dataset& d, const Prior& prior, const EffectPrior& e) {
  std::size_t k = d.size();
  bool flat_mu = e.kind == EffectPrior::Kind::Uniform;
  if (prior.family() == Family::ImproperUniform) {
    std::size_t need = flat_mu ? 3 : 2;
    if (k < need)
      throw ImproperPosteriorError(strformat("improper uniform heterogeneity prior needs k >= %zu studies (k = %zu)", need, k));
  } else if (prior.family() == Family::Jeffreys) {
    if (flat_mu && k < 2) throw ImproperPosteriorError("Jeffreys heterogeneity prior needs k >= 2 studies");
  }
}

// upper end of the grid: where the remaining posterior mass drops below 1e-8
double find_tau_max(const Likelihood& lik, const Prior& prior, double max_sigma) {
  double cap;
  if (prior.family() == Family::Uniform)
    cap = prior.scale();
  else if (prior.proper())
    cap = prior.quantile_upper(1e-9);
  else
    cap = 1e3 * max_sigma;
  const int n = 600;
  double lo = std::min(cap, max_sigma) * 1e-5;
  std::vector<double> t(n + 1), f(n + 1);
  t[0] = 0.0;
  double r = std::pow(cap / lo, 1.0 / (n - 1));
  for (int i = 1; i <= n; ++i) t[i] = i == n ? cap : lo * std::pow(r, i - 1);
  double fmax = -INFINITY;
  for (int i = 0; i <= n; ++i) {
    f[i] = lik(t[i]).log_term;
    if (std::isnan(f[i])) f[i] = -INFINITY;
    fmax = std::max(fmax, f[i]);
  }
  if (!std::isfinite(fmax)) throw NumericError("posterior density vanishes everywhere on the probe grid");
  std::vector<double> area(n, 0.0);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    area[i] = 0.5 * (std::exp(f[i] - fmax) + std::exp(f[i + 1] - fmax)) * (t[i + 1] - t[i]);
    total += area[i];
  }
  double tail = 0.0;
  for (int i = n - 1; i >= 0; --i) {
    tail += area[i];
    if (tail > 1e-8 * total) return t[std::min(i + 1, n)];
  }
  return cap;
}

}  // namespace

GridPosterior tau_marginal_posterior(const Dataset& data, const Prior& prior_in, const EffectPrior& eprior,
                                     const GridOptions& opts) {
  if (data.studies.empty()) throw InputError("dataset has no studies");
  if (opts.nodes < 50) throw InputError("grid needs at least 50 nodes");
  check_propriety(data, prior_in, eprior);
  Prior prior = prior_in;
  if (prior.needs_binding()) {
    std::vector<double> se;
    for (const auto& s : data.studies) se.push_back(s.sigma);
    prior = prior.bind_standard_errors(se);
  }

  GridPosterior gp(data, prior, eprior);
  Likelihood lik(data, gp.prior_, eprior);
  double max_sigma = 0.0;
  for (const auto& s : data.studies) max_sigma = std::max(max_sigma, s.sigma);

  double tau_max = find_tau_max(lik, gp.prior_, max_sigma);
  double tau_ref = std::min(max_sigma, tau_max);
  std::size_t n = opts.nodes;
  auto& tau = gp.tau_;
  if (tau_max <= tau_ref * (1.0 + 1e-9)) {
    for (std::size_t i = 0; i < n; ++i) tau.push_back(tau_max * static_cast<double>(i) / static_cast<double>(n - 1));
  } else {
    std::size_t n_lin = n / 2, n_geo = n - n_lin;
    for (std::size_t i = 0; i < n_lin; ++i)
      tau.push_back(tau_ref * static_cast<double>(i) / static_cast<double>(n_lin - 1));
    double r = std::pow(tau_max / tau_ref, 1.0 / static_cast<double>(n_geo));
    for (std::size_t i = 1; i <= n_geo; ++i)
      tau.push_back(i == n_geo ? tau_max : tau_ref * std::pow(r, static_cast<double>(i)));
  }

  std::size_t m = tau.size();
  gp.log_terms_.resize(m);
  gp.mu_mean_.resize(m);
  gp.mu_sd_.resize(m);
  double fmax = -INFINITY;
  for (std::size_t j = 0; j < m; ++j) {
    NodeEval e = lik(tau[j]);
    gp.log_terms_[j] = std::isnan(e.log_term) ? -INFINITY : e.log_term;
    gp.mu_mean_[j] = e.mu_mean;
    gp.mu_sd_[j] = e.mu_sd;
    fmax = std::max(fmax, gp.log_terms_[j]);
  }
  if (!std::isfinite(fmax)) throw NumericError("posterior density vanishes on the grid");

  gp.weight_.assign(m, 0.0);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    double h = 0.5 * (tau[j + 1] - tau[j]);
    gp.weight_[j] += h;
    gp.weight_[j + 1] += h;
  }
  gp.density_.resize(m);
  double z = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    gp.density_[j] = std::exp(gp.log_terms_[j] - fmax);
    z += gp.weight_[j] * gp.density_[j];
  }
  if (!(z > 0.0) || !std::isfinite(z)) throw NumericError("posterior normalizing constant is not finite");
  gp.mass_.resize(m);
  gp.cdf_.assign(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    gp.density_[j] /= z;
    gp.mass_[j] = gp.weight_[j] * gp.density_[j];
  }
  for (std::size_t j = 1; j < m; ++j)
    gp.cdf_[j] = gp.cdf_[j - 1] + 0.5 * (gp.density_[j - 1] + gp.density_[j]) * (tau[j] - tau[j - 1]);
  return gp;
}

double GridPosterior::tau_density(double t) const {
  if (t <= 0.0) return t < 0.0 ? 0.0 : density_.front();
  if (t >= tau_.back()) return t > tau_.back() ? 0.0 : density_.back();
  std::size_t j = static_cast<std::size_t>(std::upper_bound(tau_.begin(), tau_.end(), t) - tau_.begin()) - 1;
  double u = (t - tau_[j]) / (tau_[j + 1] - tau_[j]);
  return density_[j] + u * (density_[j + 1] - density_[j]);
}

double GridPosterior::tau_cdf(double t) const {
  if (t <= 0.0) return 0.0;
  if (t >= tau_.back()) return 1.0;
  std::size_t j = static_cast<std::size_t>(std::upper_bound(tau_.begin(), tau_.end(), t) - tau_.begin()) - 1;
  double h = tau_[j + 1] - tau_[j], x = t - tau_[j];
  double slope = (density_[j + 1] - density_[j]) / h;
  return std::min(1.0, cdf_[j] + density_[j] * x + 0.5 * slope * x * x);
}

double GridPosterior::tau_quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("tau quantile needs p in [0, 1]");
  double total = cdf_.back();
  double target = p * total;
  if (p <= 0.0) return 0.0;
  if (target >= total) return tau_.back();
  std::size_t j = static_cast<std::size_t>(std::upper_bound(cdf_.begin(), cdf_.end(), target) - cdf_.begin()) - 1;
  j = std::min(j, tau_.size() - 2);
  double h = tau_[j + 1] - tau_[j];
  double f0 = density_[j], slope = (density_[j + 1] - density_[j]) / h;
  double need = target - cdf_[j];
  // solve f0 x + slope x^2 / 2 = need on [0, h]
  double x;
  if (std::abs(slope) * h < 1e-12 * std::max(f0, 1e-300)) {
    x = f0 > 0.0 ? need / f0 : 0.0;
  } else {
    double disc = std::max(f0 * f0 + 2.0 * slope * need, 0.0);
    x = 2.0 * need / (f0 + std::sqrt(disc));
  }
  return tau_[j] + std::clamp(x, 0.0, h);
}

double GridPosterior::map_tau() const {
  std::size_t j = static_cast<std::size_t>(std::max_element(density_.begin(), density_.end()) - density_.begin());
  if (j == 0 || j + 1 == tau_.size()) return tau_[j];
  double x0 = tau_[j - 1], x1 = tau_[j], x2 = tau_[j + 1];
  double f0 = density_[j - 1], f1 = density_[j], f2 = density_[j + 1];
  double num = (x1 - x0) * (x1 - x0) * (f1 - f2) - (x1 - x2) * (x1 - x2) * (f1 - f0);
  double den = (x1 - x0) * (f1 - f2) - (x1 - x2) * (f1 - f0);
  if (den == 0.0) return x1;
  return std::clamp(x1 - 0.5 * num / den, x0, x2);
}

NormalMixture GridPosterior::mu_mixture() const { return NormalMixture(mass_, mu_mean_, mu_sd_); }

std::vector<double> GridPosterior::shrinkage_means(std::size_t i) const {
  if (i >= data_.size()) throw InputError("study index out of range");
  double y = data_.studies[i].y, s2 = data_.studies[i].sigma * data_.studies[i].sigma;
  std::vector<double> mean(tau_.size());
  for (std::size_t j = 0; j < tau_.size(); ++j) {
    double t2 = tau_[j] * tau_[j];
    double b = t2 / (s2 + t2);
    mean[j] = b * y + (1.0 - b) * mu_mean_[j];
  }
  return mean;
}

NormalMixture GridPosterior::shrinkage_mixture(std::size_t i) const {
  std::vector<double> mean = shrinkage_means(i), sd(tau_.size());
  double s2 = data_.studies[i].sigma * data_.studies[i].sigma;
  for (std::size_t j = 0; j < tau_.size(); ++j) {
    double t2 = tau_[j] * tau_[j];
    double b = t2 / (s2 + t2);
    sd[j] = std::sqrt(b * s2 + (1.0 - b) * (1.0 - b) * mu_sd_[j] * mu_sd_[j]);
  }
  return NormalMixture(mass_, mean, sd);
}

NormalMixture GridPosterior::prediction_mixture() const {
  std::vector<double> sd(tau_.size());
  for (std::size_t j = 0; j < tau_.size(); ++j) sd[j] = std::sqrt(mu_sd_[j] * mu_sd_[j] + tau_[j] * tau_[j]);
  return NormalMixture(mass_, mu_mean_, sd);
}

Summary summarize_tau(const GridPosterior& gp, double level, CiKind kind) {
  if (!(level > 0.0 && level < 1.0)) throw DomainError("level must lie in (0, 1)");
  Summary s;
  s.level = level;
  s.kind = kind;
  s.median = gp.tau_quantile(0.5);
  auto q = [&](double p) { return gp.tau_quantile(p); };
  Interval iv = kind == CiKind::Shortest ? shortest_interval(q, level, true) : central_interval(q, level);
  s.lo = iv.lo;
  s.hi = iv.hi;
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t j = 0; j < gp.tau().size(); ++j) {
    double t = gp.tau()[j];
    m1 += gp.mass()[j] * t;
    m2 += gp.mass()[j] * t * t;
  }
  s.mean = m1;
  s.sd = std::sqrt(std::max(m2 - m1 * m1, 0.0));
  return s;
}

Summary summarize_mixture(const NormalMixture& mix, double level, CiKind kind) {
  if (!(level > 0.0 && level < 1.0)) throw DomainError("level must lie in (0, 1)");
  Summary s;
  s.level = level;
  s.kind = kind;
  auto q = [&](double p) { return mix.quantile(std::clamp(p, 1e-15, 1.0 - 1e-15)); };
  s.median = q(0.5);
  Interval iv = kind == CiKind::Shortest ? shortest_interval(q, level, false) : central_interval(q, level);
  s.lo = iv.lo;
  s.hi = iv.hi;
  s.mean = mix.mean();
  s.sd = mix.sd();
  return s;
}

Summary mu_marginal_posterior(const GridPosterior& gp, double level, CiKind kind) {
  return summarize_mixture(gp.mu_mixture(), level, kind);
}

Summary shrinkage_posterior(const GridPosterior& gp, std::size_t i, double level, CiKind kind) {
  return summarize_mixture(gp.shrinkage_mixture(i), level, kind);
}

Summary prediction_posterior(const GridPosterior& gp, double level, CiKind kind) {
  return summarize_mixture(gp.prediction_mixture(), level, kind);
}

bool AnalysisReport::operator==(const AnalysisReport& o) const {
  auto same_studies = [&] {
    if (studies.size() != o.studies.size()) return false;
    for (std::size_t i = 0; i < studies.size(); ++i) {
      const auto &a = studies[i], &b = o.studies[i];
      if (a.label != b.label || a.y != b.y || a.sigma != b.sigma || a.n != b.n) return false;
    }
    return true;
  };
  return schema == o.schema && prior_spec == o.prior_spec && prior_label == o.prior_label &&
         effect_prior_spec == o.effect_prior_spec && measure == o.measure && same_studies() && tau == o.tau &&
         mu == o.mu && shrinkage == o.shrinkage && prediction == o.prediction && map_tau == o.map_tau &&
         uisd == o.uisd;
}

AnalysisReport analyze(const Dataset& data, const Prior& prior, const EffectPrior& eprior, double level, CiKind kind,
                       const GridOptions& opts) {
  GridPosterior gp = tau_marginal_posterior(data, prior, eprior, opts);
  AnalysisReport r;
  r.prior_spec = prior.spec();
  r.prior_label = prior.label();
  r.effect_prior_spec = eprior.spec();
  r.measure = data.measure;
  r.studies = data.studies;
  r.tau = summarize_tau(gp, level, kind);
  r.mu = mu_marginal_posterior(gp, level, kind);
  for (std::size_t i = 0; i < data.size(); ++i) r.shrinkage.push_back(shrinkage_posterior(gp, i, level, kind));
  r.prediction = prediction_posterior(gp, level, kind);
  r.map_tau = gp.map_tau();
  bool have_n = std::all_of(data.studies.begin(), data.studies.end(), [](const auto& s) { return s.n.has_value(); });
  if (have_n) r.uisd = empirical_uisd(data.studies).value;
  return r;
}

}  // namespace nnhm
