#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace nnhm {

struct EffectEstimate {
  std::string label;
  double y = 0.0;
  double sigma = 0.0;
  std::optional<double> n;
};

// group 1 = treatment, group 2 = control
struct TwoGroupContinuous {
  double mean1, sd1, n1;
  double mean2, sd2, n2;
};

struct TwoByTwoTable {
  double events1, total1;
  double events2, total2;
};

struct ProportionCount {
  double events, total;
};

struct RatioWithCI {
  double point, lower, upper;
  double level = 0.95;
};

struct CorrelationCount {
  double r, n;
};

EffectEstimate mean_difference(const TwoGroupContinuous& g, std::string label = {});
EffectEstimate smd_hedges_g(const TwoGroupContinuous& g, std::string label = {});
// continuity adds 0.5 to every cell; without it a zero cell is an error
EffectEstimate log_or(const TwoByTwoTable& t, bool continuity = false, std::string label = {});
EffectEstimate log_odds(const ProportionCount& p, bool continuity = false, std::string label = {});
EffectEstimate log_ratio_from_ci(const RatioWithCI& r, std::string label = {});
EffectEstimate fisher_z(const CorrelationCount& c, std::string label = {});

// re-express a slope for a regressor increment `factor` times as large
EffectEstimate rescale(EffectEstimate e, double factor);

enum class Measure { MeanDifference, Smd, LogOr, LogOdds, LogRatioCi, FisherZ, Precomputed };

Measure parse_measure(std::string_view name);
std::string to_string(Measure m);
// estimates live on a log scale, so exp() is meaningful for display
bool is_log_scale(Measure m);

}  // namespace nnhm
