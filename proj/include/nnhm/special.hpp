#pragma once

#include <cmath>
#include <numbers>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace nnhm::special {

inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;

inline double norm_pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }
inline double norm_cdf(double z) { return 0.5 * std::erfc(-z * std::numbers::sqrt2 / 2.0); }
inline double norm_sf(double z) { return 0.5 * std::erfc(z * std::numbers::sqrt2 / 2.0); }

inline double norm_ppf(double p) {
  if (p <= 0.0) return -INFINITY;
  if (p >= 1.0) return INFINITY;
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}
// upper-tail inverse, accurate for tiny q
inline double norm_isf(double q) {
  if (q <= 0.0) return INFINITY;
  if (q >= 1.0) return -INFINITY;
  return boost::math::quantile(boost::math::complement(boost::math::normal_distribution<double>(), q));
}

inline double lgamma(double x) { return boost::math::lgamma(x); }

inline double t_log_pdf(double t, double nu) {
  return lgamma(0.5 * (nu + 1.0)) - lgamma(0.5 * nu) - 0.5 * std::log(nu * std::numbers::pi) -
         0.5 * (nu + 1.0) * std::log1p(t * t / nu);
}
inline double t_cdf(double t, double nu) {
  return boost::math::cdf(boost::math::students_t_distribution<double>(nu), t);
}
inline double t_sf(double t, double nu) {
  return boost::math::cdf(boost::math::complement(boost::math::students_t_distribution<double>(nu), t));
}
inline double t_ppf(double p, double nu) {
  return boost::math::quantile(boost::math::students_t_distribution<double>(nu), p);
}
inline double t_isf(double q, double nu) {
  return boost::math::quantile(boost::math::complement(boost::math::students_t_distribution<double>(nu), q));
}

inline double chi2_ppf(double p, double nu) {
  return boost::math::quantile(boost::math::chi_squared_distribution<double>(nu), p);
}
// gamma(shape, scale 1)
inline double gamma_ppf(double p, double shape) {
  return boost::math::quantile(boost::math::gamma_distribution<double>(shape, 1.0), p);
}

}  // namespace nnhm::special
