#include <doctest.h>

#include <algorithm>

#include "nnhm/errors.hpp"
#include "nnhm/sensitivity.hpp"
#include "support/fixtures.hpp"

using namespace nnhm;

TEST_SUITE("sensitivity") {

TEST_CASE("default plan") {
  auto rows = run_sensitivity(fixtures::load("exercise_ari"), SensitivityPlan::defaults(Prior::half_normal(0.5)));
  REQUIRE(rows.size() == 11);
  CHECK(rows[0].label == "half-normal(0.50)");
  CHECK(rows[1].label == "half-normal(0.25)");
  CHECK(rows[2].label == "half-normal(1.00)");
  CHECK(rows[3].label == "half-Student-t(3, 0.44)");
  CHECK(rows[5].label == "half-logistic(0.31)");
  CHECK(rows[9].label == "uniform");
  CHECK(rows[10].label == "Jeffreys");
  for (const auto& r : rows) CHECK(r.report.has_value());

  // seven proper median-matched families: HN plus six templates
  double lo = 1e9, hi = -1e9;
  for (std::size_t i : {0, 3, 4, 5, 6, 7, 8}) {
    lo = std::min(lo, rows[i].report->mu.median);
    hi = std::max(hi, rows[i].report->mu.median);
  }
  CHECK(hi - lo <= 0.03);

  auto text = sensitivity_text(rows);
  CHECK(text.find("0.29 [0.00, 0.87]") != std::string::npos);
  auto csv = sensitivity_csv(rows);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
}

TEST_CASE("single row equals analyze") {
  auto data = fixtures::load("iron_hf");
  SensitivityPlan plan;
  plan.base_prior = Prior::half_normal(0.5);
  plan.scale_factors = {1.0};
  plan.include_uniform = plan.include_jeffreys = false;
  auto rows = run_sensitivity(data, plan);
  REQUIRE(rows.size() == 1);
  CHECK(*rows[0].report == analyze(data, Prior::half_normal(0.5)));
}

TEST_CASE("tau medians grow with the prior scale") {
  SensitivityPlan plan;
  plan.base_prior = Prior::half_normal(0.5);
  plan.scale_factors = {0.5, 1.0, 2.0};
  plan.include_uniform = plan.include_jeffreys = false;
  for (const auto& ex : fixtures::examples()) {
    auto rows = run_sensitivity(fixtures::load(ex.name), plan);
    CHECK(rows[0].report->tau.median <= rows[1].report->tau.median);
    CHECK(rows[1].report->tau.median <= rows[2].report->tau.median);
  }
}

TEST_CASE("failed rows are reported, not thrown") {
  auto rows = run_sensitivity(fixtures::load("il2ra_rejection"), SensitivityPlan::defaults(Prior::half_normal(0.5)));
  auto& u = rows[9];
  CHECK_FALSE(u.report.has_value());
  CHECK(u.error.find("k >= 3") != std::string::npos);
  CHECK(sensitivity_text(rows).find("skipped") != std::string::npos);
  CHECK(rows[10].report.has_value());
}

TEST_CASE("plan validation") {
  SensitivityPlan plan;
  plan.base_prior = Prior::improper_uniform();
  CHECK_THROWS_AS(run_sensitivity(fixtures::load("iron_hf"), plan), InputError);
  plan = SensitivityPlan::defaults(Prior::half_normal(0.5));
  plan.scale_factors = {0.0};
  CHECK_THROWS_AS(run_sensitivity(fixtures::load("iron_hf"), plan), InputError);
}

}
