#include "nnhm/mixture.hpp"

#include <algorithm>
#include <cmath>

#include "nnhm/errors.hpp"
#include "nnhm/special.hpp"

namespace nnhm {

NormalMixture::NormalMixture(std::span<const double> weights, std::span<const double> means,
                             std::span<const double> sds) {
  if (weights.size() != means.size() || weights.size() != sds.size())
    throw InputError("mixture component arrays differ in length");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw NumericError("mixture weight is negative or not finite");
    total += w;
  }
  if (!(total > 0.0)) throw NumericError("mixture has no mass");

  double m1 = 0.0, m2 = 0.0;
  lo_ = INFINITY;
  hi_ = -INFINITY;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    double w = weights[j] / total;
    if (w < 1e-18) continue;
    double s = std::max(sds[j], 1e-300);
    w_.push_back(w);
    m_.push_back(means[j]);
    inv_s_.push_back(1.0 / s);
    m1 += w * means[j];
    m2 += w * (means[j] * means[j] + s * s);
    lo_ = std::min(lo_, means[j] - 40.0 * s);
    hi_ = std::max(hi_, means[j] + 40.0 * s);
  }
  // renormalize after dropping negligible components
  double kept = 0.0;
  for (double w : w_) kept += w;
  for (double& w : w_) w /= kept;
  mean_ = m1 / kept;
  sd_ = std::sqrt(std::max(m2 / kept - mean_ * mean_, 0.0));
}

double NormalMixture::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("mixture quantile needs p in (0, 1)");
  if (w_.empty()) throw NumericError("quantile of an empty mixture");
  double a = lo_, b = hi_;
  double x = std::clamp(mean_ + sd_ * special::norm_ppf(p), a, b);
  if (!std::isfinite(x)) x = 0.5 * (a + b);
  for (int it = 0; it < 300; ++it) {
    auto [c, d] = eval(x);
    double f = c - p;
    if (f == 0.0) return x;
    if (f < 0.0)
      a = x;
    else
      b = x;
    double tol = 1e-14 * (1.0 + std::abs(x));
    if (b - a < tol || std::abs(f) < 1e-16) return x;
    double next = d > 0.0 ? x - f / d : NAN;
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    if (std::abs(next - x) < 0.25 * tol) return next;
    x = next;
  }
  return x;
}

}  // namespace nnhm
