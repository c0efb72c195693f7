#include <cmath>
#include <numbers>

#include "nnhm/kernels.hpp"

namespace nnhm::kernels {

CdfPdf eval_scalar(const MixtureSoA& mix, double x) {
  constexpr double kSqrtHalf = std::numbers::sqrt2 / 2.0;
  constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;
  double c = 0.0, d = 0.0;
  for (std::size_t j = 0; j < mix.n; ++j) {
    double z = (x - mix.m[j]) * mix.inv_s[j];
    c += mix.w[j] * 0.5 * std::erfc(-z * kSqrtHalf);
    d += mix.w[j] * std::exp(-0.5 * z * z) * mix.inv_s[j];
  }
  return {c, d * kInvSqrt2Pi};
}

}  // namespace nnhm::kernels
