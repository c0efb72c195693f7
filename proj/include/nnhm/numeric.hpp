#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace nnhm {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Narrowest [Q(p), Q(p + level)]. With a lower-bounded support, [Q(0), Q(level)] wins ties.
Interval shortest_interval(const std::function<double(double)>& quantile, double level, bool lower_bounded);
Interval central_interval(const std::function<double(double)>& quantile, double level);

// Gauss-Legendre nodes and weights on [-1, 1]
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

}  // namespace nnhm
