#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nnhm/engine.hpp"

namespace nnhm {

enum class InputFormat { Auto, Csv, Json };

struct LoadOptions {
  Measure measure = Measure::Precomputed;
  InputFormat format = InputFormat::Auto;
  bool continuity = false;  // 0.5 added to all cells for logor / logodds
  double rescale = 1.0;     // multiplies y and sigma after derivation
};

// Columns per measure (label always optional):
//   md, smd       mean1,sd1,n1,mean2,sd2,n2
//   logor         events1,total1,events2,total2
//   logodds       events,total
//   logratio-ci   ratio,lower,upper[,n][,level]
//   fisherz       r,n
//   precomputed   y,sigma[,n]
Dataset load_dataset(const std::string& path, const LoadOptions& opts);
Dataset parse_csv_dataset(std::string_view text, const LoadOptions& opts);
Dataset parse_json_dataset(std::string_view text, const LoadOptions& opts);

std::string estimates_csv(const std::vector<EffectEstimate>& rows);

std::string report_text(const AnalysisReport& r);
std::string report_json(const AnalysisReport& r);
AnalysisReport report_from_json(std::string_view text);
// one row per parameter: tau, mu, each shrinkage estimate, prediction
std::string report_csv(const AnalysisReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace nnhm
