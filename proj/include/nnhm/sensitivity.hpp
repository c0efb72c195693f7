#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nnhm/engine.hpp"

namespace nnhm {

struct SensitivityPlan {
  Prior base_prior = Prior::half_normal(0.5);
  std::vector<double> scale_factors{1.0, 0.5, 2.0};
  // unit-scale templates, rescaled to the base prior's median
  std::vector<Prior> families;
  bool include_uniform = true;
  bool include_jeffreys = true;

  static SensitivityPlan defaults(const Prior& base);
};

struct SensitivityRow {
  std::string label;
  Prior prior = Prior::half_normal(1.0);
  std::optional<AnalysisReport> report;
  std::string error;  // set when the row could not be computed (e.g. improper posterior)
};

std::vector<SensitivityRow> run_sensitivity(const Dataset& data, const SensitivityPlan& plan,
                                            const EffectPrior& eprior = EffectPrior::uniform(), double level = 0.95,
                                            CiKind kind = CiKind::Shortest, const GridOptions& opts = {});

std::string sensitivity_text(const std::vector<SensitivityRow>& rows);
std::string sensitivity_csv(const std::vector<SensitivityRow>& rows);

}  // namespace nnhm
