// One PASS/FAIL line per acceptance criterion; failing cells are listed underneath.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "nnhm/effect.hpp"
#include "nnhm/engine.hpp"
#include "nnhm/format.hpp"
#include "nnhm/prior.hpp"
#include "nnhm/scale_mixture.hpp"
#include "nnhm/sensitivity.hpp"
#include "nnhm/toolkit.hpp"
#include "nnhm/uisd.hpp"
#include "support/fixtures.hpp"
#include "support/invariants.hpp"
#include "support/oracle.hpp"

using namespace nnhm;

namespace {

struct Gate {
  int id;
  std::string title;
  std::vector<std::string> misses;
  int cells = 0;

  void near(const std::string& what, double got, double want, double tol) {
    ++cells;
    if (!(std::abs(got - want) <= tol + 1e-12))
      misses.push_back(strformat("%s: got %.6g, expected %.6g (tol %g)", what.c_str(), got, want, tol));
  }
  void require(const std::string& what, bool ok) {
    ++cells;
    if (!ok) misses.push_back(what);
  }
  bool report() const {
    std::printf("%s  %2d  %s (%d cells)\n", misses.empty() ? "PASS" : "FAIL", id, title.c_str(), cells);
    for (const auto& m : misses) std::printf("        %s\n", m.c_str());
    std::fflush(stdout);
    return misses.empty();
  }
};

// unit in the last printed digit of a table cell, e.g. "0.039" -> 0.001
double ulp(const char* printed) {
  std::string s(printed);
  auto dot = s.find('.');
  if (dot == std::string::npos) return 1.0;
  return std::pow(10.0, -static_cast<double>(s.size() - dot - 1));
}

void near_printed(Gate& g, const std::string& what, double got, const char* printed) {
  g.near(what, got, std::stod(printed), ulp(printed));
}

Gate conditional_ranges() {
  Gate g{1, "conditional predictive ranges and random-pair medians", {}};
  struct Row {
    double tau, hi, exp_lo, exp_hi, med, exp_med;
  };
  const Row rows[] = {{0.1, 0.20, 0.82, 1.22, 0.10, 1.10},
                      {0.2, 0.39, 0.68, 1.48, 0.19, 1.21},
                      {0.5, 0.98, 0.38, 2.66, 0.48, 1.61},
                      {1.0, 1.96, 0.14, 7.10, 0.95, 2.60},
                      {2.0, 3.92, 0.020, 50.4, 1.91, 6.74}};
  for (const auto& r : rows) {
    auto p = conditional_predictive(r.tau);
    auto m = random_pair_median(r.tau);
    std::string t = strformat("tau=%g ", r.tau);
    g.near(t + "lower", p.lo, -r.hi, 0.01);
    g.near(t + "upper", p.hi, r.hi, 0.01);
    g.near(t + "exp lower", p.exp_lo, r.exp_lo, 0.01);
    g.near(t + "exp upper", p.exp_hi, r.exp_hi, r.exp_hi == 50.4 ? 0.2 : 0.01);
    g.near(t + "pair median", m.raw, r.med, 0.01);
    g.near(t + "exp pair median", m.exp, r.exp_med, 0.01);
  }
  return g;
}

Gate half_normal_implications() {
  Gate g{2, "half-normal prior implications", {}};
  struct Row {
    double scale, median, mean, q95, hi, exp_lo, exp_hi, c1, c2, c3;
  };
  const Row rows[] = {{0.1, 0.07, 0.08, 0.20, 0.22, 0.80, 1.24, 32, 0, 0},
                      {0.2, 0.13, 0.16, 0.39, 0.44, 0.65, 1.55, 60, 1, 0},
                      {0.5, 0.34, 0.40, 0.98, 1.09, 0.34, 2.98, 52, 27, 5},
                      {1.0, 0.67, 0.80, 1.96, 2.18, 0.11, 8.89, 30, 30, 32},
                      {2.0, 1.35, 1.60, 3.92, 4.37, 0.013, 79.0, 16, 19, 62}};
  for (const auto& r : rows) {
    Prior p = Prior::half_normal(r.scale);
    auto s = p.summarize();
    auto pr = marginal_predictive(p);
    auto cp = category_probabilities(p, default_categories());
    std::string t = strformat("HN(%g) ", r.scale);
    g.near(t + "median", s.median, r.median, 0.01);
    g.near(t + "mean", *s.mean, r.mean, 0.01);
    g.near(t + "q95", s.q95, r.q95, 0.01);
    g.near(t + "pred lower", pr.lo, -r.hi, 0.01);
    g.near(t + "pred upper", pr.hi, r.hi, 0.01);
    g.near(t + "exp pred lower", pr.exp_lo, r.exp_lo, 0.01);
    // 79.0 is printed to one decimal; same rounding allowance as the 50.4 conditional cell
    g.near(t + "exp pred upper", pr.exp_hi, r.exp_hi, r.exp_hi == 79.0 ? 0.05 : 0.01);
    g.near(t + "reasonable %", 100.0 * cp.p[0], r.c1, 1.0);
    g.near(t + "fairly high %", 100.0 * cp.p[1], r.c2, 1.0);
    g.near(t + "fairly extreme %", 100.0 * cp.p[2], r.c3, 1.0);
  }
  return g;
}

Gate family_implications() {
  Gate g{3, "median-matched family implications", {}};
  struct Row {
    Prior unit;
    const char *name, *scale, *mean, *q95, *hi, *exp_lo, *exp_hi;
  };
  const Row rows[] = {
      {Prior::half_normal(1), "half-normal", "1.48", "1.18", "2.91", "3.24", "0.039", "25.5"},
      {Prior::half_student_t(4, 1), "half-t4", "1.35", "1.28", "3.75", "3.85", "0.021", "46.8"},
      {Prior::half_cauchy(1), "half-Cauchy", "1.00", nullptr, "12.7", "10.10", "0.000041", "24371"},
      {Prior::half_logistic(1), "half-logistic", "0.91", "1.26", "3.33", "3.55", "0.029", "34.7"},
      {Prior::exponential(1), "exponential", "1.44", "1.44", "4.32", "4.33", "0.013", "75.9"},
      {Prior::lomax(6, 1), "Lomax(6)", "8.17", "1.63", "5.29", "5.04", "0.0065", "155"},
      {Prior::lomax(1, 1), "Lomax(1)", "1.00", nullptr, "19.0", "14.74", "0.00000040", "2520157"},
  };
  for (const auto& r : rows) {
    Prior p = scale_to_median(r.unit, 1.0);
    auto s = p.summarize();
    auto pr = marginal_predictive(p);
    std::string t = std::string(r.name) + " ";
    double scale = p.family() == Family::Exponential ? 1.0 / p.rate() : p.scale();
    near_printed(g, t + "scale", scale, r.scale);
    near_printed(g, t + "median", s.median, "1.00");
    if (r.mean)
      near_printed(g, t + "mean", *s.mean, r.mean);
    else
      g.require(t + "mean should be undefined", !s.mean.has_value());
    near_printed(g, t + "q95", s.q95, r.q95);
    near_printed(g, t + "pred upper", pr.hi, r.hi);
    near_printed(g, t + "pred lower", -pr.lo, r.hi);
    near_printed(g, t + "exp pred lower", pr.exp_lo, r.exp_lo);
    near_printed(g, t + "exp pred upper", pr.exp_hi, r.exp_hi);
  }
  return g;
}

Gate family_constants() {
  Gate g{4, "family constants", {}};
  auto hn = Prior::half_normal(1).summarize();
  g.near("half-normal median", hn.median, 0.674, 0.01);
  g.near("half-normal q95", hn.q95, 1.96, 0.01);
  g.near("half-normal mean", *hn.mean, 0.798, 0.01);
  g.near("half-normal sd", *hn.sd, 0.603, 0.01);
  g.near("half-normal cv", *hn.cv, 0.756, 0.01);
  auto t3 = Prior::half_student_t(3, 1).summarize();
  g.near("half-t3 median", t3.median, 0.765, 0.01);
  g.near("half-t3 q95", t3.q95, 3.18, 0.01);
  g.near("half-t3 mean", *t3.mean, 1.10, 0.01);
  g.near("half-t3 sd", *t3.sd, 1.34, 0.01);
  g.near("half-t3 cv", *t3.cv, 1.21, 0.01);
  auto hc = Prior::half_cauchy(1).summarize();
  g.near("half-Cauchy median", hc.median, 1.0, 0.01);
  g.near("half-Cauchy q95", hc.q95, 12.7, 0.01);
  auto hl = Prior::half_logistic(1).summarize();
  g.near("half-logistic median", hl.median, 1.10, 0.01);
  g.near("half-logistic q95", hl.q95, 3.66, 0.01);
  g.near("half-logistic mean", *hl.mean, 1.39, 0.01);
  g.near("half-logistic sd", *hl.sd, 1.17, 0.01);
  g.near("half-logistic cv", *hl.cv, 0.844, 0.01);
  auto ex = Prior::exponential(1).summarize();
  g.near("exponential median", ex.median, 0.693, 0.01);
  g.near("exponential q95", ex.q95, 3.00, 0.01);
  g.near("exponential mean", *ex.mean, 1.0, 0.01);
  g.near("exponential cv", *ex.cv, 1.0, 0.01);
  auto l6 = Prior::lomax(6, 1).summarize();
  g.near("Lomax(6) median", l6.median, 0.122, 0.01);
  g.near("Lomax(6) q95", l6.q95, 0.648, 0.01);
  g.near("Lomax(6) mean", *l6.mean, 0.2, 0.01);
  g.near("Lomax(6) sd", *l6.sd, 0.245, 0.01);
  g.near("Lomax(6) cv", *l6.cv, 1.22, 0.01);
  auto l1 = Prior::lomax(1, 1).summarize();
  g.near("Lomax(1) median", l1.median, 1.0, 0.01);
  g.near("Lomax(1) q95", l1.q95, 19.0, 0.01);
  auto un = Prior::uniform(1).summarize();
  g.near("uniform median", un.median, 0.5, 0.01);
  g.near("uniform q95", un.q95, 0.95, 0.01);
  g.near("uniform sd", *un.sd, 0.289, 0.01);
  g.near("uniform cv", *un.cv, 0.577, 0.01);
  return g;
}

Gate scale_mixtures() {
  Gate g{5, "scale mixture constructors and cv/nu inversion", {}};
  struct C2 {
    double nu;
    const char* cv;
  };
  for (const C2& r : {C2{2.5, "1.09"}, C2{3, "0.76"}, C2{4, "0.52"}, C2{5, "0.42"}, C2{10, "0.24"}, C2{20, "0.17"},
                      C2{50, "0.10"}})
    near_printed(g, strformat("cv(nu=%g)", r.nu), inverse_chi_cv(r.nu), r.cv);
  struct C3 {
    double cv, nu;
  };
  for (const C3& r : {C3{2, 2.2}, C3{1, 2.6}, C3{0.5, 4.2}, C3{1.0 / 3, 6.7}, C3{0.25, 10.2}, C3{0.2, 14.7},
                      C3{0.1, 52.2}})
    g.near(strformat("nu(cv=%.3g)", r.cv), cv_to_nu(r.cv), r.nu, 0.05);

  struct LomaxRow {
    double cv;
    const char *alpha, *beta, *s_med, *s_q95, *cv_tau, *med, *q95, *pred;
  };
  const LomaxRow c4[] = {
      {0.0, nullptr, nullptr, "1.00", "1.00", "0.00", "0.69", "3.00", "2.052"},
      {0.1, "102", "101", "0.99", "1.17", "1.01", "0.69", "3.01", "2.052"},
      {0.2, "27", "26", "0.97", "1.36", "1.04", "0.68", "3.05", "2.049"},
      {0.5, "6", "5", "0.88", "1.91", "1.22", "0.61", "3.24", "2.022"},
      {1.0, "3", "2", "0.75", "2.45", "1.73", "0.52", "3.43", "1.937"},
      {2.0, "2.25", "1.25", "0.65", "2.72", "3.00", "0.45", "3.48", "1.834"},
  };
  for (const auto& r : c4) {
    auto row = mixture_row(MixtureBase::Exponential, {1.0, r.cv}, 0.95);
    std::string t = strformat("exponential mixture cv=%g ", r.cv);
    if (r.alpha) {
      near_printed(g, t + "mixing shape", row.mixing_shape, r.alpha);
      near_printed(g, t + "mixing scale", row.mixing_scale, r.beta);
      near_printed(g, t + "Lomax shape", row.prior.shape(), r.alpha);
      near_printed(g, t + "Lomax scale", row.prior.scale(), r.beta);
    }
    near_printed(g, t + "mixing median", row.mixing_median, r.s_med);
    near_printed(g, t + "mixing q95", row.mixing_q95, r.s_q95);
    near_printed(g, t + "tau mean", *row.heterogeneity.mean, "1.0");
    near_printed(g, t + "tau cv", *row.heterogeneity.cv, r.cv_tau);
    near_printed(g, t + "tau median", row.heterogeneity.median, r.med);
    near_printed(g, t + "tau q95", row.heterogeneity.q95, r.q95);
    near_printed(g, t + "prediction", row.predictive_quantile, r.pred);
  }

  struct HalfTRow {
    double cv;
    const char *nu, *s, *s_med, *s_q95, *scale, *cv_tau, *med, *q95, *pred;
  };
  const HalfTRow c5[] = {
      {0.0, nullptr, nullptr, "1.00", "1.00", "1.00", "0.76", "0.68", "1.96", "2.18"},
      {0.1, "52.2", "7.12", "0.99", "1.18", "0.99", "1.02", "0.67", "1.98", "2.19"},
      {0.2, "14.7", "3.64", "0.97", "1.37", "0.95", "1.08", "0.66", "2.02", "2.21"},
      {0.5, "4.2", "1.65", "0.88", "1.86", "0.81", "1.39", "0.60", "2.20", "2.27"},
      {1.0, "2.6", "1.09", "0.78", "2.25", "0.67", "2.10", "0.53", "2.35", "2.30"},
      {2.0, "2.2", "0.88", "0.71", "2.42", "0.60", "3.73", "0.48", "2.41", "2.28"},
  };
  for (const auto& r : c5) {
    auto row = mixture_row(MixtureBase::HalfNormal, {1.0, r.cv}, 0.975);
    std::string t = strformat("half-normal mixture cv=%g ", r.cv);
    if (r.nu) {
      near_printed(g, t + "mixing df", row.mixing_shape, r.nu);
      near_printed(g, t + "mixing scale", row.mixing_scale, r.s);
      near_printed(g, t + "half-t df", row.prior.df(), r.nu);
    } else {
      g.require(t + "should be half-normal", row.prior.family() == Family::HalfNormal);
    }
    near_printed(g, t + "mixing median", row.mixing_median, r.s_med);
    near_printed(g, t + "mixing q95", row.mixing_q95, r.s_q95);
    near_printed(g, t + "half-t scale", row.prior.scale(), r.scale);
    near_printed(g, t + "tau mean", *row.heterogeneity.mean, "0.80");
    near_printed(g, t + "tau cv", *row.heterogeneity.cv, r.cv_tau);
    near_printed(g, t + "tau median", row.heterogeneity.median, r.med);
    near_printed(g, t + "tau q95", row.heterogeneity.q95, r.q95);
    near_printed(g, t + "prediction", row.predictive_quantile, r.pred);
  }
  return g;
}

Gate effect_sizes() {
  Gate g{6, "effect-size derivation", {}};
  struct Want {
    const char* fixture;
    std::vector<std::pair<double, double>> ys;
  };
  const Want wants[] = {
      {"exercise_ari", {{-3.40, 1.57}, {-0.95, 0.27}, {-2.10, 1.10}, {-1.00, 0.67}}},
      {"music_depression", {{-2.03, 0.30}, {-0.58, 0.26}, {-0.75, 0.42}, {-0.56, 0.25}}},
      {"il2ra_rejection", {{-2.31, 0.60}, {-1.26, 0.64}}},
      {"iron_hf", {{-0.82, 0.36}, {-0.39, 0.30}, {0.09, 0.83}, {-0.14, 1.28}}},
      {"colitis_placebo", {{-1.79, 0.36}, {-1.74, 0.26}, {-2.81, 0.39}, {-2.12, 0.43}}},
      {"conscientiousness", {{0.245, 0.080}, {0.050, 0.056}, {0.010, 0.036}}},
  };
  for (const auto& w : wants) {
    auto d = fixtures::load(w.fixture);
    g.require(std::string(w.fixture) + " row count", d.size() == w.ys.size());
    for (std::size_t i = 0; i < std::min(d.size(), w.ys.size()); ++i) {
      g.near(std::string(w.fixture) + " " + d.studies[i].label + " y", d.studies[i].y, w.ys[i].first, 0.005);
      g.near(std::string(w.fixture) + " " + d.studies[i].label + " sigma", d.studies[i].sigma, w.ys[i].second, 0.005);
    }
  }
  return g;
}

Gate uisd_checks() {
  Gate g{7, "unit information standard deviation", {}};
  struct Want {
    const char* fixture;
    double s;
  };
  for (const Want& w : {Want{"exercise_ari", 3.9}, Want{"music_depression", 2.2}, Want{"il2ra_rejection", 5.4},
                        Want{"iron_hf", 6.6}, Want{"colitis_placebo", 3.2}, Want{"conscientiousness", 1.004}}) {
    auto d = fixtures::load(w.fixture);
    g.near(std::string(w.fixture) + " s", empirical_uisd(std::span<const EffectEstimate>(d.studies)).value, w.s, 0.05);
  }
  struct Map {
    double ratio, n;
  };
  for (const Map& m : {Map{0, INFINITY}, Map{1.0 / 16, 256}, Map{1.0 / 8, 64}, Map{0.25, 16}, Map{0.5, 4}, Map{1, 1},
                       Map{INFINITY, 0}}) {
    double got = prior_max_sample_size(m.ratio * 2.0, 2.0);
    g.require(strformat("n_inf(tau/uisd=%g) = %g, expected %g", m.ratio, got, m.n), got == m.n);
  }
  auto d = fixtures::load("colitis_placebo");
  auto r = analyze(d, parse_prior(fixtures::example("colitis_placebo").prior));
  double s = empirical_uisd(std::span<const EffectEstimate>(d.studies)).value;
  g.near("colitis placebo ESS", effective_sample_size(r.prediction.sd, s), 21.0, 0.5);
  return g;
}

Gate sensitivity_tables() {
  Gate g{8, "sensitivity tables for the MD and IRR examples", {}};
  struct Triple {
    double med, lo, hi;
  };
  struct Row {
    const char* label;
    Triple tau, mu, pred;
  };
  const Row md[] = {
      {"half-normal(0.50)", {0.29, 0.00, 0.87}, {-1.16, -2.03, -0.44}, {-1.15, -2.50, -0.05}},
      {"half-normal(0.25)", {0.16, 0.00, 0.47}, {-1.11, -1.73, -0.53}, {-1.11, -1.92, -0.36}},
      {"half-normal(1.00)", {0.47, 0.00, 1.47}, {-1.22, -2.45, -0.31}, {-1.19, -3.34, 0.48}},
      {"half-Student-t(3, 0.44)", {0.28, 0.00, 0.98}, {-1.16, -2.06, -0.43}, {-1.14, -2.58, 0.00}},
      {"half-Cauchy(0.34)", {0.23, 0.00, 1.08}, {-1.15, -2.06, -0.41}, {-1.13, -2.61, 0.02}},
      {"half-logistic(0.31)", {0.29, 0.00, 0.92}, {-1.16, -2.04, -0.43}, {-1.15, -2.55, -0.02}},
      {"exponential(0.49)", {0.26, 0.00, 1.05}, {-1.16, -2.09, -0.42}, {-1.14, -2.65, 0.04}},
      {"Lomax(6, 2.75)", {0.25, 0.00, 1.09}, {-1.16, -2.10, -0.41}, {-1.14, -2.67, 0.05}},
      {"Lomax(1, 0.34)", {0.20, 0.00, 1.16}, {-1.14, -2.08, -0.41}, {-1.13, -2.66, 0.04}},
      {"uniform", {0.86, 0.00, 4.60}, {-1.30, -3.98, 0.58}, {-1.25, -6.57, 3.13}},
      {"Jeffreys", {0.62, 0.01, 2.61}, {-1.27, -3.03, -0.05}, {-1.24, -4.55, 1.38}},
  };
  const Row irr[] = {
      {"half-normal(0.50)", {0.24, 0.00, 0.75}, {-0.49, -1.10, 0.15}, {-0.49, -1.49, 0.56}},
      {"half-normal(0.25)", {0.15, 0.00, 0.44}, {-0.50, -1.01, 0.01}, {-0.50, -1.18, 0.20}},
      {"half-normal(1.00)", {0.34, 0.00, 1.17}, {-0.48, -1.24, 0.35}, {-0.49, -1.89, 1.02}},
      {"half-Student-t(3, 0.44)", {0.23, 0.00, 0.78}, {-0.49, -1.10, 0.15}, {-0.49, -1.49, 0.55}},
      {"half-Cauchy(0.34)", {0.19, 0.00, 0.77}, {-0.49, -1.09, 0.13}, {-0.50, -1.44, 0.50}},
      {"half-logistic(0.31)", {0.24, 0.00, 0.77}, {-0.49, -1.10, 0.15}, {-0.49, -1.49, 0.56}},
      {"exponential(0.49)", {0.21, 0.00, 0.82}, {-0.49, -1.11, 0.15}, {-0.49, -1.50, 0.57}},
      {"Lomax(6, 2.75)", {0.20, 0.00, 0.82}, {-0.49, -1.10, 0.15}, {-0.49, -1.49, 0.56}},
      {"Lomax(1, 0.34)", {0.16, 0.00, 0.79}, {-0.49, -1.08, 0.11}, {-0.50, -1.42, 0.48}},
      {"uniform", {0.46, 0.00, 2.52}, {-0.47, -1.68, 0.91}, {-0.48, -3.05, 2.30}},
      {"Jeffreys", {0.43, 0.01, 1.61}, {-0.47, -1.39, 0.55}, {-0.48, -2.29, 1.47}},
  };
  auto run = [&](const char* fixture, const Row* want, std::size_t n) {
    auto rows = run_sensitivity(fixtures::load(fixture), SensitivityPlan::defaults(Prior::half_normal(0.5)));
    g.require(strformat("%s: %zu rows, expected %zu", fixture, rows.size(), n), rows.size() == n);
    for (std::size_t i = 0; i < std::min(n, rows.size()); ++i) {
      const auto& r = rows[i];
      std::string t = std::string(fixture) + " " + r.label + " ";
      g.require(t + "label, expected " + want[i].label, r.label == want[i].label);
      if (!r.report) {
        g.require(t + "failed: " + r.error, false);
        continue;
      }
      auto cmp = [&](const char* p, const Summary& s, const Triple& w) {
        g.near(t + p + " median", s.median, w.med, 0.02);
        g.near(t + p + " lower", s.lo, w.lo, 0.02);
        g.near(t + p + " upper", s.hi, w.hi, 0.02);
      };
      cmp("tau", r.report->tau, want[i].tau);
      cmp("mu", r.report->mu, want[i].mu);
      cmp("prediction", r.report->prediction, want[i].pred);
    }
  };
  run("exercise_ari", md, std::size(md));
  run("iron_hf", irr, std::size(irr));
  return g;
}

Gate headline_numbers() {
  Gate g{9, "example headline numbers", {}};
  auto go = [](const char* name) { return analyze(fixtures::load(name), parse_prior(fixtures::example(name).prior)); };
  auto expit = [](double x) { return 1.0 / (1.0 + std::exp(-x)); };
  g.near("log-OR mu median", go("il2ra_rejection").mu.median, -1.81, 0.02);
  auto lo = go("colitis_placebo");
  g.near("log-odds prediction probability lower", expit(lo.prediction.lo), 0.03, 0.02);
  g.near("log-odds prediction probability upper", expit(lo.prediction.hi), 0.34, 0.02);
  g.near("log-odds prediction sd", lo.prediction.sd, 0.70, 0.02);
  auto z = go("conscientiousness");
  g.near("correlation tau median", z.tau.median, 0.12, 0.02);
  g.near("correlation tau upper", z.tau.hi, 0.30, 0.02);
  g.near("regression slope mu median", go("lvef_mortality").mu.median, 0.19, 0.02);
  return g;
}

Gate oracle_equivalence() {
  Gate g{10, "engine vs brute-force 2-D integration", {}};
  for (const auto& ex : fixtures::examples()) {
    auto d = fixtures::load(ex.name);
    for (const auto& p : oracle::priors()) {
      auto bad = oracle::compare_engine(d, p, 1e-3);
      g.cells += 15;
      for (const auto& b : bad) g.misses.push_back(ex.name + " " + p.name + " " + b);
    }
  }
  return g;
}

Gate invariant_suites() {
  Gate g{11, "invariant suites", {}};
  for (const auto& c : invariants::all()) g.require(c.name + ": " + c.detail, c.ok);
  return g;
}

}  // namespace

int main() {
  std::vector<Gate> gates;
  bool ok = true;
  for (auto make : {conditional_ranges, half_normal_implications, family_implications, family_constants, scale_mixtures,
                    effect_sizes, uisd_checks, sensitivity_tables, headline_numbers, oracle_equivalence,
                    invariant_suites})
    ok = make().report() && ok;
  return ok ? 0 : 1;
}
