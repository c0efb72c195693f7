#pragma once

#include <span>
#include <vector>

#include "nnhm/kernels.hpp"

namespace nnhm {

// Finite mixture of normals; weights are normalized on construction.
class NormalMixture {
 public:
  NormalMixture() = default;
  NormalMixture(std::span<const double> weights, std::span<const double> means, std::span<const double> sds);

  std::size_t size() const { return w_.size(); }
  kernels::CdfPdf eval(double x) const { return kernels::eval(view(), x); }
  double cdf(double x) const { return eval(x).cdf; }
  double pdf(double x) const { return eval(x).pdf; }
  double quantile(double p) const;
  double mean() const { return mean_; }
  double sd() const { return sd_; }

  kernels::MixtureSoA view() const { return {w_.data(), m_.data(), inv_s_.data(), w_.size()}; }
  std::span<const double> weights() const { return w_; }
  std::span<const double> means() const { return m_; }

 private:
  std::vector<double> w_, m_, inv_s_;
  double lo_ = 0.0, hi_ = 0.0;
  double mean_ = 0.0, sd_ = 0.0;
};

}  // namespace nnhm
