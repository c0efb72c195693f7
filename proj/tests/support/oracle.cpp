#include "oracle.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Rule {
  std::vector<double> x, w;
};

// Legendre roots by Newton iteration on the three-term recurrence
const Rule& legendre20() {
  static const Rule r = [] {
    const int n = 20;
    Rule out;
    out.x.resize(n);
    out.w.resize(n);
    for (int i = 0; i < n; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      out.x[i] = x;
      out.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return out;
  }();
  return r;
}

template <class F>
void panels(double a, double b, int count, F&& visit) {
  const Rule& r = legendre20();
  double h = (b - a) / count;
  for (int p = 0; p < count; ++p) {
    double c = a + (p + 0.5) * h;
    for (std::size_t i = 0; i < r.x.size(); ++i) visit(c + 0.5 * h * r.x[i], 0.5 * h * r.w[i]);
  }
}

constexpr int kTauPanels = 40;
constexpr int kMuPanels = 10;

double phi(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

const std::vector<PriorDensity>& priors() {
  static const std::vector<PriorDensity> all = {
      {"half-normal(0.5)", "halfnormal(0.5)",
       [](double x) { return x < 0 ? 0.0 : 2.0 / (0.5 * std::sqrt(2.0 * kPi)) * std::exp(-2.0 * x * x); }},
      {"half-Cauchy(0.5)", "halfcauchy(0.5)",
       [](double x) { return x < 0 ? 0.0 : 2.0 / (kPi * 0.5 * (1.0 + 4.0 * x * x)); }, 2.0},
      {"exponential(rate 2)", "exponential(rate=2)", [](double x) { return x < 0 ? 0.0 : 2.0 * std::exp(-2.0 * x); }},
      {"log-normal(-1.28, 0.87)", "lognormal(-1.28,0.87)",
       [](double x) {
         if (x <= 0) return 0.0;
         double z = (std::log(x) + 1.28) / 0.87;
         return std::exp(-0.5 * z * z) / (x * 0.87 * std::sqrt(2.0 * kPi));
       }},
  };
  return all;
}

Posterior2D::Posterior2D(const nnhm::Dataset& data, std::function<double(double)> prior_pdf)
    : prior_(std::move(prior_pdf)) {
  for (const auto& s : data.studies) {
    y_.push_back(s.y);
    s2_.push_back(s.sigma * s.sigma);
    smax_ = std::max(smax_, s.sigma);
  }
  ymin_ = *std::min_element(y_.begin(), y_.end());
  ymax_ = *std::max_element(y_.begin(), y_.end());

  // tau = c t / (1 - t) maps the half line onto (0, 1)
  const double c = smax_;
  panels(0.0, 1.0, kTauPanels, [&](double t, double w) {
    tau_node_.push_back(c * t / (1.0 - t));
    tau_w_.push_back(w * c / ((1.0 - t) * (1.0 - t)));
  });

  shift_ = -INFINITY;
  for (double tau : tau_node_) {
    double lo, hi;
    mu_window(tau, lo, hi);
    for (int i = 0; i <= 50; ++i) shift_ = std::max(shift_, log_joint(tau, lo + (hi - lo) * i / 50.0));
  }

  double m1 = 0, m2 = 0, t1 = 0, t2 = 0;
  for (std::size_t j = 0; j < tau_node_.size(); ++j) {
    double tau = tau_node_[j], lo, hi;
    mu_window(tau, lo, hi);
    panels(lo, hi, kMuPanels, [&](double mu, double w) {
      double m = tau_w_[j] * w * std::exp(log_joint(tau, mu) - shift_);
      z_ += m;
      m1 += m * mu;
      m2 += m * mu * mu;
      t1 += m * tau;
      t2 += m * tau * tau;
    });
  }
  mu_m_ = m1 / z_;
  mu_s_ = std::sqrt(m2 / z_ - mu_m_ * mu_m_);
  tau_m_ = t1 / z_;
  tau_s_ = std::sqrt(t2 / z_ - tau_m_ * tau_m_);
  pred_s_ = std::sqrt(mu_s_ * mu_s_ + t2 / z_);
}

double Posterior2D::log_joint(double tau, double mu) const {
  double p = prior_(tau);
  if (!(p > 0.0)) return -INFINITY;
  double out = std::log(p);
  for (std::size_t i = 0; i < y_.size(); ++i) {
    double v = s2_[i] + tau * tau;
    double d = y_[i] - mu;
    out += -0.5 * std::log(2.0 * kPi * v) - 0.5 * d * d / v;
  }
  return out;
}

void Posterior2D::mu_window(double tau, double& lo, double& hi) const {
  lo = ymin_ - 10.0 * (smax_ + tau);
  hi = ymax_ + 10.0 * (smax_ + tau);
}

double Posterior2D::mu_integral(double tau, double upper) const {
  double lo, hi;
  mu_window(tau, lo, hi);
  hi = std::min(hi, upper);
  if (hi <= lo) return 0.0;
  double acc = 0.0;
  panels(lo, hi, kMuPanels, [&](double mu, double w) { acc += w * std::exp(log_joint(tau, mu) - shift_); });
  return acc;
}

double Posterior2D::tau_cdf(double t) const {
  if (t <= 0.0) return 0.0;
  double acc = 0.0;
  panels(0.0, t, 20, [&](double tau, double w) { acc += w * mu_integral(tau, INFINITY); });
  return std::min(1.0, acc / z_);
}

double Posterior2D::mu_cdf(double x) const {
  double acc = 0.0;
  for (std::size_t j = 0; j < tau_node_.size(); ++j) acc += tau_w_[j] * mu_integral(tau_node_[j], x);
  return std::min(1.0, acc / z_);
}

double Posterior2D::pred_cdf(double x) const {
  // Phi((x - mu) / tau) is nearly a step for small tau, so the mu range is split at x +- 10 tau
  double acc = 0.0;
  for (std::size_t j = 0; j < tau_node_.size(); ++j) {
    double tau = tau_node_[j], lo, hi;
    mu_window(tau, lo, hi);
    double cuts[] = {lo, std::clamp(x - 10.0 * tau, lo, hi), std::clamp(x + 10.0 * tau, lo, hi), hi};
    double inner = 0.0;
    for (int s = 0; s < 3; ++s) {
      if (cuts[s + 1] <= cuts[s]) continue;
      panels(cuts[s], cuts[s + 1], s == 1 ? 8 : kMuPanels, [&](double mu, double w) {
        inner += w * std::exp(log_joint(tau, mu) - shift_) * phi((x - mu) / tau);
      });
    }
    acc += tau_w_[j] * inner;
  }
  return std::min(1.0, acc / z_);
}

double quantile(const std::function<double(double)>& cdf, double p, double guess, double floor_value) {
  double step = 0.01 * std::max(1.0, std::abs(guess));
  double lo = std::max(floor_value, guess - step), hi = guess + step;
  while (lo > floor_value && cdf(lo) > p) lo = std::max(floor_value, lo - (step *= 2.0));
  step = 0.01 * std::max(1.0, std::abs(guess));
  while (cdf(hi) < p) hi += (step *= 2.0);
  for (int it = 0; it < 60 && hi - lo > 1e-9; ++it) {
    double mid = 0.5 * (lo + hi);
    (cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

bool quantile_within(const std::function<double(double)>& cdf, double p, double q, double tol) {
  return cdf(q - tol) <= p && cdf(q + tol) >= p;
}

}  // namespace oracle

#include "nnhm/format.hpp"
#include "nnhm/prior.hpp"

namespace oracle {

std::vector<std::string> compare_engine(const nnhm::Dataset& data, const PriorDensity& prior, double tol) {
  using nnhm::strformat;
  std::vector<std::string> bad;
  Posterior2D ref(data, prior.pdf);
  auto gp = nnhm::tau_marginal_posterior(data, nnhm::parse_prior(prior.spec), nnhm::EffectPrior::uniform());
  auto mu_mix = gp.mu_mixture();
  auto pred_mix = gp.prediction_mixture();

  struct Target {
    const char* name;
    nnhm::Summary s;
    std::function<double(double)> engine_cdf, ref_cdf;
    double ref_mean, ref_sd, floor_value;
  };
  std::vector<Target> targets = {
      {"tau", nnhm::summarize_tau(gp), [&](double t) { return gp.tau_cdf(t); },
       [&](double t) { return ref.tau_cdf(t); }, ref.tau_mean(), ref.tau_sd(), 0.0},
      {"mu", nnhm::mu_marginal_posterior(gp), [&](double x) { return mu_mix.cdf(x); },
       [&](double x) { return ref.mu_cdf(x); }, ref.mu_mean(), ref.mu_sd(), -INFINITY},
      {"prediction", nnhm::prediction_posterior(gp), [&](double x) { return pred_mix.cdf(x); },
       [&](double x) { return ref.pred_cdf(x); }, ref.pred_mean(), ref.pred_sd(), -INFINITY},
  };

  // with a flat mu prior the marginal likelihood decays like tau^-(k-1); moments of order r
  // exist only while the posterior tail exponent exceeds r + 1
  double tail = prior.tail + static_cast<double>(data.size()) - 1.0;
  bool has_mean = tail > 2.0, has_sd = tail > 3.0;

  for (const auto& t : targets) {
    auto check_q = [&](const char* what, double p, double q) {
      if (!quantile_within(t.ref_cdf, p, q, tol)) {
        double r = quantile(t.ref_cdf, p, q, t.floor_value);
        bad.push_back(strformat("%s %s: engine %.6f oracle %.6f", t.name, what, q, r));
      }
    };
    check_q("median", 0.5, t.s.median);
    double p_lo = t.s.lo > t.floor_value ? t.engine_cdf(t.s.lo) : 0.0;
    if (p_lo > 0.0) check_q("ci lower", p_lo, t.s.lo);
    check_q("ci upper", p_lo + t.s.level, t.s.hi);
    if (has_mean && std::abs(t.s.mean - t.ref_mean) > tol)
      bad.push_back(strformat("%s mean: engine %.6f oracle %.6f", t.name, t.s.mean, t.ref_mean));
    if (has_sd && std::abs(t.s.sd - t.ref_sd) > tol)
      bad.push_back(strformat("%s sd: engine %.6f oracle %.6f", t.name, t.s.sd, t.ref_sd));
  }
  return bad;
}

}  // namespace oracle
