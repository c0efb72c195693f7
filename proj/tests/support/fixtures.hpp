#pragma once

#include <string>
#include <vector>

#include "nnhm/engine.hpp"
#include "nnhm/io.hpp"

namespace fixtures {

struct Example {
  std::string name;
  std::string file;
  nnhm::Measure measure;
  std::string prior;  // the analysis prior used for this example
};

const std::vector<Example>& examples();
const Example& example(const std::string& name);
nnhm::Dataset load(const std::string& name);
std::string data_path(const std::string& file);
std::string golden_path(const std::string& file);

}  // namespace fixtures
