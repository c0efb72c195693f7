#include "fixtures.hpp"

#include <stdexcept>

namespace fixtures {

using nnhm::Measure;

const std::vector<Example>& examples() {
  static const std::vector<Example> all = {
      {"exercise_ari", "exercise_ari_md.csv", Measure::MeanDifference, "halfnormal(0.5)"},
      {"music_depression", "music_depression_smd.csv", Measure::Smd, "halfnormal(0.5)"},
      {"il2ra_rejection", "il2ra_rejection_logor.csv", Measure::LogOr, "halfnormal(0.5)"},
      {"iron_hf", "iron_hf_logirr.csv", Measure::LogRatioCi, "halfnormal(0.5)"},
      {"colitis_placebo", "colitis_placebo_logodds.csv", Measure::LogOdds, "halfnormal(1.0)"},
      {"lvef_mortality", "lvef_mortality_loghr.csv", Measure::LogRatioCi, "halfnormal(0.125)"},
      {"conscientiousness", "conscientiousness_adherence_z.csv", Measure::FisherZ, "halfnormal(0.2)"},
  };
  return all;
}

const Example& example(const std::string& name) {
  for (const auto& e : examples())
    if (e.name == name) return e;
  throw std::out_of_range("no fixture " + name);
}

std::string data_path(const std::string& file) { return std::string(NNHM_DATA_DIR) + "/" + file; }
std::string golden_path(const std::string& file) { return std::string(NNHM_GOLDEN_DIR) + "/" + file; }

nnhm::Dataset load(const std::string& name) {
  const Example& e = example(name);
  nnhm::LoadOptions o;
  o.measure = e.measure;
  return nnhm::load_dataset(data_path(e.file), o);
}

}  // namespace fixtures
