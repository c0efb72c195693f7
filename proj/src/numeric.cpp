#include "nnhm/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "nnhm/errors.hpp"

namespace nnhm {

Interval central_interval(const std::function<double(double)>& quantile, double level) {
  double a = 0.5 * (1.0 - level);
  return {quantile(a), quantile(1.0 - a)};
}

Interval shortest_interval(const std::function<double(double)>& quantile, double level, bool lower_bounded) {
  if (!(level > 0.0 && level < 1.0)) throw DomainError("interval level must lie in (0, 1)");
  const double span = 1.0 - level;
  auto width = [&](double p) { return quantile(p + level) - quantile(p); };

  // coarse scan, then golden section around the best cell
  const int n = 40;
  const double eps = span * 1e-7;
  std::vector<double> ps(n + 1), ws(n + 1);
  for (int i = 0; i <= n; ++i) {
    ps[i] = std::clamp(span * i / n, eps, span - eps);
    ws[i] = width(ps[i]);
  }
  int best = 0;
  for (int i = 1; i <= n; ++i)
    if (ws[i] < ws[best]) best = i;
  double a = ps[std::max(best - 1, 0)], b = ps[std::min(best + 1, n)];
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = width(c), fd = width(d);
  while (b - a > 1e-11 * span) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = width(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = width(d);
    }
  }
  double p = fc <= fd ? c : d;
  double wp = std::min(fc, fd);
  if (ws[best] < wp) {
    p = ps[best];
    wp = ws[best];
  }
  if (lower_bounded) {
    double q0 = quantile(0.0), ql = quantile(level);
    if (ql - q0 <= wp) return {q0, ql};
  }
  return {quantile(p), quantile(p + level)};
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<double> x(n), w(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // recompute derivative at the converged root
    double p0 = 1.0, p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return cache[n] = {x, w};
}

}  // namespace nnhm
