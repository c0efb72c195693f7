#pragma once

#include <string>

#include "nnhm/engine.hpp"

namespace nnhm {

enum class AxisScale { Identity, Exp };

struct ForestOptions {
  AxisScale axis = AxisScale::Identity;
  std::string title;
  std::string x_label;
  int width = 760;
};

// Study estimates with their shrinkage intervals, then mu and prediction rows.
std::string forest_svg(const AnalysisReport& r, const ForestOptions& opts = {});

// posterior density of tau (solid) against its prior (dashed)
std::string tau_density_svg(const GridPosterior& gp, int width = 480, int height = 300);

std::vector<double> axis_ticks(double lo, double hi, AxisScale scale);

}  // namespace nnhm
