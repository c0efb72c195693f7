#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nnhm/engine.hpp"
#include "nnhm/errors.hpp"
#include "nnhm/forest.hpp"
#include "nnhm/format.hpp"
#include "nnhm/io.hpp"
#include "nnhm/prior.hpp"
#include "nnhm/scale_mixture.hpp"
#include "nnhm/sensitivity.hpp"
#include "nnhm/toolkit.hpp"
#include "nnhm/uisd.hpp"

using namespace nnhm;

namespace {

struct DataArgs {
  std::string in;
  std::string measure = "precomputed";
  std::string format = "auto";
  bool continuity = false;
  double rescale = 1.0;
};

void add_data_options(CLI::App* cmd, DataArgs& a) {
  cmd->add_option("--in", a.in, "input file (CSV or JSON)")->required();
  cmd->add_option("--measure", a.measure, "md|smd|logor|logodds|logratio-ci|fisherz|precomputed");
  cmd->add_option("--format", a.format, "auto|csv|json")->check(CLI::IsMember({"auto", "csv", "json"}));
  cmd->add_flag("--continuity", a.continuity, "add 0.5 to all cells of count data");
  cmd->add_option("--rescale", a.rescale, "multiply estimates and standard errors by this factor");
}

Dataset load(const DataArgs& a) {
  LoadOptions o;
  o.measure = parse_measure(a.measure);
  o.format = a.format == "csv" ? InputFormat::Csv : a.format == "json" ? InputFormat::Json : InputFormat::Auto;
  o.continuity = a.continuity;
  o.rescale = a.rescale;
  return load_dataset(a.in, o);
}

// "name:lo:hi,name:lo:hi"; hi may be "inf"
CategoryScheme parse_categories(const std::string& text) {
  CategoryScheme out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto a = item.find(':');
    auto b = item.find(':', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos)
      throw InputError("category '" + item + "' is not name:lower:upper");
    try {
      out.push_back({item.substr(0, a), std::stod(item.substr(a + 1, b - a - 1)), std::stod(item.substr(b + 1))});
    } catch (const std::logic_error&) {
      throw InputError("category '" + item + "' has a non-numeric bound");
    }
  }
  validate(out);
  return out;
}

std::string opt_cell(const std::optional<double>& v) { return v ? fixed(*v) : std::string("-"); }

int cmd_analyze(const DataArgs& da, const std::string& prior_s, const std::string& eprior_s, double level,
                bool central, const std::string& fmt, const std::string& forest, const std::string& axis,
                const std::string& json_out, const std::string& csv_out, const std::string& density_out,
                bool with_uisd) {
  if (!(level > 0.5 && level < 1.0)) throw InputError("--level must lie in (0.5, 1)");
  Dataset data = load(da);
  Prior prior = parse_prior(prior_s);
  EffectPrior ep = parse_effect_prior(eprior_s);
  CiKind kind = central ? CiKind::Central : CiKind::Shortest;
  GridOptions go = GridOptions::from_env();
  GridPosterior gp = tau_marginal_posterior(data, prior, ep, go);
  AnalysisReport r = analyze(data, prior, ep, level, kind, go);
  if (with_uisd) r.uisd = empirical_uisd(std::span<const EffectEstimate>(data.studies)).value;

  if (fmt == "json")
    std::cout << report_json(r);
  else if (fmt == "csv")
    std::cout << report_csv(r);
  else
    std::cout << report_text(r);

  if (!json_out.empty()) write_file(json_out, report_json(r));
  if (!csv_out.empty()) write_file(csv_out, report_csv(r));
  if (!forest.empty()) {
    ForestOptions fo;
    bool ex = axis == "exp" || (axis == "auto" && is_log_scale(data.measure));
    if (ex && !is_log_scale(data.measure) && data.measure != Measure::Precomputed)
      throw InputError("exp axis is only meaningful for log-scale measures");
    fo.axis = ex ? AxisScale::Exp : AxisScale::Identity;
    fo.title = r.prior_label;
    write_file(forest, forest_svg(r, fo));
  }
  if (!density_out.empty()) write_file(density_out, tau_density_svg(gp));
  return 0;
}

int cmd_inspect(const std::string& spec, const std::string& cats, double level) {
  Prior p = parse_prior(spec);
  if (!p.proper()) throw ImproperPriorError(p.label() + " is improper and has no prior predictive distribution");
  CategoryScheme scheme = cats.empty() ? default_categories() : parse_categories(cats);
  DistributionSummary s = p.summarize();
  PredictiveSummary pr = marginal_predictive(p, level);
  CategoryProbabilities cp = category_probabilities(p, scheme);

  std::printf("prior      %s\n", p.label().c_str());
  std::printf("tau        median %s  mean %s  q95 %s\n", fixed(s.median).c_str(), opt_cell(s.mean).c_str(),
              fixed(s.q95).c_str());
  std::printf("predictive %g%%  [%s, %s]  exp [%s, %s]\n", 100.0 * level, fixed(pr.lo).c_str(), fixed(pr.hi).c_str(),
              fixed(pr.exp_lo).c_str(), fixed(pr.exp_hi).c_str());
  if (cp.below > 0.0) std::printf("below %-14s %5.1f%%\n", fixed(scheme.front().lower).c_str(), 100.0 * cp.below);
  for (std::size_t i = 0; i < scheme.size(); ++i)
    std::printf("%-20s %5.1f%%\n", scheme[i].name.c_str(), 100.0 * cp.p[i]);
  return 0;
}

int cmd_mix(const std::string& base, double mean, double cv, double prob) {
  MixtureBase b = base == "exponential" ? MixtureBase::Exponential : MixtureBase::HalfNormal;
  MixtureRow row = mixture_row(b, {mean, cv}, prob);
  const char* mixing = b == MixtureBase::Exponential ? "inverse-gamma" : "scaled inverse-chi";
  std::printf("prior          %s\n", row.prior.label().c_str());
  std::printf("spec           %s\n", row.prior.spec().c_str());
  if (cv > 0.0)
    std::printf("mixing         %s(%.4g, %.4g)  median %s  q95 %s\n", mixing, row.mixing_shape, row.mixing_scale,
                fixed(row.mixing_median).c_str(), fixed(row.mixing_q95).c_str());
  else
    std::printf("mixing         point mass at %s\n", fixed(mean).c_str());
  const auto& h = row.heterogeneity;
  std::printf("heterogeneity  median %s  mean %s  cv %s  q95 %s\n", fixed(h.median).c_str(), opt_cell(h.mean).c_str(),
              opt_cell(h.cv).c_str(), fixed(h.q95).c_str());
  std::printf("predictive     q%g %s\n", 100.0 * row.predictive_prob, fixed(row.predictive_quantile).c_str());
  return 0;
}

int cmd_sensitivity(const DataArgs& da, const std::string& prior_s, const std::string& eprior_s, double level,
                    bool csv) {
  Dataset data = load(da);
  SensitivityPlan plan = SensitivityPlan::defaults(parse_prior(prior_s));
  auto rows = run_sensitivity(data, plan, parse_effect_prior(eprior_s), level, CiKind::Shortest,
                              GridOptions::from_env());
  std::cout << (csv ? sensitivity_csv(rows) : sensitivity_text(rows));
  return 0;
}

int cmd_uisd(const DataArgs& da, std::optional<double> tau) {
  Dataset data = load(da);
  UisdEstimate u = empirical_uisd(std::span<const EffectEstimate>(data.studies));
  std::printf("uisd  %s\n", fixed(u.value, 3).c_str());
  if (tau) {
    double n = prior_max_sample_size(*tau, u.value);
    if (std::isinf(n))
      std::printf("tau %s  n_inf  inf\n", fixed(*tau).c_str());
    else
      std::printf("tau %s  n_inf  %s\n", fixed(*tau).c_str(), fixed(n, 1).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian random-effects meta-analysis under the normal-normal hierarchical model"};
  app.require_subcommand(1);

  DataArgs da;
  std::string prior_s = "halfnormal(0.5)", eprior_s = "uniform", fmt = "text", forest, axis = "auto", json_out,
              csv_out, density_out, cats, base = "halfnormal", spec;
  double level = 0.95, mean = 1.0, cv = 0.0, prob = 0.95;
  bool central = false, with_uisd = false, csv = false;
  std::optional<double> tau;

  auto* an = app.add_subcommand("analyze", "posterior summaries for tau, mu, shrinkage and prediction");
  add_data_options(an, da);
  an->add_option("--prior", prior_s, "heterogeneity prior, e.g. halfnormal(0.5)");
  an->add_option("--effect-prior", eprior_s, "uniform or normal(m, sd)");
  an->add_option("--level", level, "credibility level");
  an->add_flag("--central", central, "central instead of shortest intervals");
  an->add_option("--output-format", fmt, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
  an->add_option("--forest", forest, "write forest plot SVG");
  an->add_option("--axis", axis, "forest axis: auto|identity|exp")->check(CLI::IsMember({"auto", "identity", "exp"}));
  an->add_option("--json", json_out, "write JSON report");
  an->add_option("--csv", csv_out, "write CSV report");
  an->add_option("--tau-density", density_out, "write tau posterior density SVG");
  an->add_flag("--uisd", with_uisd, "include the empirical UISD (needs n)");

  auto* pr = app.add_subcommand("prior", "inspect or construct heterogeneity priors");
  pr->require_subcommand(1);
  auto* insp = pr->add_subcommand("inspect", "quantiles, prior predictive and category probabilities");
  insp->add_option("spec", spec, "prior specification")->required();
  insp->add_option("--categories", cats, "name:lower:upper,... (upper may be inf)");
  insp->add_option("--level", level, "predictive level");
  auto* mix = pr->add_subcommand("mix", "scale mixture of an exponential or half-normal prior");
  mix->add_option("--base", base, "exponential|halfnormal")->check(CLI::IsMember({"exponential", "halfnormal"}));
  mix->add_option("--mean", mean, "expected scale");
  mix->add_option("--cv", cv, "coefficient of variation of the scale");
  mix->add_option("--prob", prob, "predictive quantile probability");

  auto* se = app.add_subcommand("sensitivity", "rerun the analysis under alternative priors");
  add_data_options(se, da);
  se->add_option("--prior", prior_s, "base heterogeneity prior");
  se->add_option("--effect-prior", eprior_s, "uniform or normal(m, sd)");
  se->add_option("--level", level, "credibility level");
  se->add_flag("--csv", csv, "CSV output");

  auto* ui = app.add_subcommand("uisd", "empirical unit-information standard deviation");
  add_data_options(ui, da);
  ui->add_option("--tau", tau, "report the implied prior maximum sample size");

  auto* es = app.add_subcommand("effectsize", "derive estimates and standard errors as CSV");
  add_data_options(es, da);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*an) return cmd_analyze(da, prior_s, eprior_s, level, central, fmt, forest, axis, json_out, csv_out,
                                density_out, with_uisd);
    if (*insp) return cmd_inspect(spec, cats, level);
    if (*mix) return cmd_mix(base, mean, cv, prob);
    if (*se) return cmd_sensitivity(da, prior_s, eprior_s, level, csv);
    if (*ui) return cmd_uisd(da, tau);
    if (*es) {
      std::cout << estimates_csv(load(da).studies);
      return 0;
    }
  } catch (const InputError& e) {
    std::fprintf(stderr, "nnhm: %s\n", e.what());
    return 2;
  } catch (const NumericError& e) {
    std::fprintf(stderr, "nnhm: %s\n", e.what());
    return 3;
  }
  return 0;
}
