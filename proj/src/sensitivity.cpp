#include "nnhm/sensitivity.hpp"

#include <algorithm>
#include <future>

#include "nnhm/errors.hpp"
#include "nnhm/format.hpp"

namespace nnhm {

SensitivityPlan SensitivityPlan::defaults(const Prior& base) {
  SensitivityPlan p;
  p.base_prior = base;
  p.families = {Prior::half_student_t(3.0, 1.0), Prior::half_cauchy(1.0), Prior::half_logistic(1.0),
                Prior::exponential(1.0),         Prior::lomax(6.0, 1.0),  Prior::lomax(1.0, 1.0)};
  return p;
}

std::vector<SensitivityRow> run_sensitivity(const Dataset& data, const SensitivityPlan& plan, const EffectPrior& eprior,
                                            double level, CiKind kind, const GridOptions& opts) {
  if (!plan.base_prior.proper()) throw InputError("sensitivity base prior must be proper");
  for (double f : plan.scale_factors)
    if (!(f > 0.0)) throw InputError("scale factors must be positive");

  std::vector<SensitivityRow> rows;
  for (double f : plan.scale_factors) {
    Prior p = f == 1.0 ? plan.base_prior : plan.base_prior.scaled(f);
    rows.push_back({p.label(), p, std::nullopt, {}});
  }
  double median = plan.base_prior.quantile(0.5);
  for (const auto& fam : plan.families) {
    Prior p = scale_to_median(fam, median);
    rows.push_back({p.label(), p, std::nullopt, {}});
  }
  if (plan.include_uniform) rows.push_back({"uniform", Prior::improper_uniform(), std::nullopt, {}});
  if (plan.include_jeffreys) rows.push_back({"Jeffreys", Prior::jeffreys(), std::nullopt, {}});

  std::vector<std::future<void>> jobs;
  for (auto& row : rows) {
    jobs.push_back(std::async(std::launch::async, [&row, &data, &eprior, level, kind, &opts] {
      try {
        row.report = analyze(data, row.prior, eprior, level, kind, opts);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }));
  }
  for (auto& j : jobs) j.get();
  return rows;
}

namespace {

std::string cell(const Summary& s) { return fixed(s.median) + " [" + fixed(s.lo) + ", " + fixed(s.hi) + "]"; }

}  // namespace

std::string sensitivity_text(const std::vector<SensitivityRow>& rows) {
  std::size_t w = 5;
  for (const auto& r : rows) w = std::max(w, r.label.size());
  std::string out = strformat("%-*s  %-20s  %-22s  %-22s\n", static_cast<int>(w), "prior", "tau", "mu", "prediction");
  for (const auto& r : rows) {
    if (!r.report) {
      out += strformat("%-*s  skipped: %s\n", static_cast<int>(w), r.label.c_str(), r.error.c_str());
      continue;
    }
    out += strformat("%-*s  %-20s  %-22s  %-22s\n", static_cast<int>(w), r.label.c_str(), cell(r.report->tau).c_str(),
                     cell(r.report->mu).c_str(), cell(r.report->prediction).c_str());
  }
  return out;
}

std::string sensitivity_csv(const std::vector<SensitivityRow>& rows) {
  std::string out = "prior,tau_median,tau_lo,tau_hi,mu_median,mu_lo,mu_hi,pred_median,pred_lo,pred_hi,error\n";
  for (const auto& r : rows) {
    std::string label = "\"" + r.label + "\"";
    if (!r.report) {
      std::string err = r.error;
      std::replace(err.begin(), err.end(), '"', '\'');
      out += label + ",,,,,,,,,,\"" + err + "\"\n";
      continue;
    }
    const auto& a = *r.report;
    out += strformat("%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,\n", label.c_str(), a.tau.median,
                     a.tau.lo, a.tau.hi, a.mu.median, a.mu.lo, a.mu.hi, a.prediction.median, a.prediction.lo,
                     a.prediction.hi);
  }
  return out;
}

}  // namespace nnhm
