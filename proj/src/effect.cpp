#include "nnhm/effect.hpp"

#include <cmath>

#include "nnhm/errors.hpp"
#include "nnhm/format.hpp"
#include "nnhm/special.hpp"

namespace nnhm {

namespace {

void check_group(double sd, double n, const char* which) {
  if (!(sd > 0.0)) throw DomainError(strformat("%s standard deviation must be positive", which));
  if (!(n >= 2.0) || n != std::floor(n)) throw DomainError(strformat("%s sample size must be an integer >= 2", which));
}

void check_group_pair(const TwoGroupContinuous& g) {
  check_group(g.sd1, g.n1, "group 1");
  check_group(g.sd2, g.n2, "group 2");
}

void check_count(double events, double total, bool continuity) {
  if (!(total > 0.0) || total != std::floor(total) || events != std::floor(events) || events < 0.0 || events > total)
    throw DomainError("counts must be integers with 0 <= events <= total");
  if (!continuity && (events == 0.0 || events == total))
    throw DomainError("zero cell: rerun with the continuity correction enabled (--continuity)");
}

}  // namespace

EffectEstimate mean_difference(const TwoGroupContinuous& g, std::string label) {
  check_group_pair(g);
  return {std::move(label), g.mean1 - g.mean2, std::sqrt(g.sd1 * g.sd1 / g.n1 + g.sd2 * g.sd2 / g.n2), g.n1 + g.n2};
}

EffectEstimate smd_hedges_g(const TwoGroupContinuous& g, std::string label) {
  check_group_pair(g);
  double n = g.n1 + g.n2;
  if (n <= 3.0) throw DomainError("Hedges' g needs more than 3 subjects in total");
  double sp = std::sqrt(((g.n1 - 1.0) * g.sd1 * g.sd1 + (g.n2 - 1.0) * g.sd2 * g.sd2) / (n - 2.0));
  double d = (g.mean1 - g.mean2) / sp;
  double gg = (1.0 - 3.0 / (4.0 * n - 9.0)) * d;
  return {std::move(label), gg, std::sqrt(n / (g.n1 * g.n2) + gg * gg / (2.0 * n)), n};
}

EffectEstimate log_or(const TwoByTwoTable& t, bool continuity, std::string label) {
  check_count(t.events1, t.total1, continuity);
  check_count(t.events2, t.total2, continuity);
  double cc = continuity ? 0.5 : 0.0;
  double a = t.events1 + cc, b = t.total1 - t.events1 + cc;
  double c = t.events2 + cc, d = t.total2 - t.events2 + cc;
  return {std::move(label), std::log(a * d / (b * c)), std::sqrt(1.0 / a + 1.0 / b + 1.0 / c + 1.0 / d),
          t.total1 + t.total2};
}

EffectEstimate log_odds(const ProportionCount& p, bool continuity, std::string label) {
  check_count(p.events, p.total, continuity);
  double cc = continuity ? 0.5 : 0.0;
  double a = p.events + cc, b = p.total - p.events + cc;
  return {std::move(label), std::log(a / b), std::sqrt(1.0 / a + 1.0 / b), p.total};
}

EffectEstimate log_ratio_from_ci(const RatioWithCI& r, std::string label) {
  if (!(r.lower > 0.0) || !(r.lower < r.point) || !(r.point < r.upper))
    throw DomainError("ratio and interval must satisfy 0 < lower < point < upper");
  if (!(r.level > 0.0 && r.level < 1.0)) throw DomainError("interval level must lie in (0, 1)");
  double z = special::norm_ppf(0.5 * (1.0 + r.level));
  return {std::move(label), std::log(r.point), (std::log(r.upper) - std::log(r.lower)) / (2.0 * z), std::nullopt};
}

EffectEstimate fisher_z(const CorrelationCount& c, std::string label) {
  if (!(std::abs(c.r) < 1.0)) throw DomainError("correlation must lie strictly inside (-1, 1)");
  if (!(c.n > 3.0)) throw DomainError("Fisher z needs n > 3");
  return {std::move(label), std::atanh(c.r), 1.0 / std::sqrt(c.n - 3.0), c.n};
}

EffectEstimate rescale(EffectEstimate e, double factor) {
  if (!(factor > 0.0)) throw DomainError("rescale factor must be positive");
  e.y *= factor;
  e.sigma *= factor;
  return e;
}

Measure parse_measure(std::string_view name) {
  if (name == "md") return Measure::MeanDifference;
  if (name == "smd") return Measure::Smd;
  if (name == "logor") return Measure::LogOr;
  if (name == "logodds") return Measure::LogOdds;
  if (name == "logratio-ci") return Measure::LogRatioCi;
  if (name == "fisherz") return Measure::FisherZ;
  if (name == "precomputed") return Measure::Precomputed;
  throw InputError("unknown effect measure '" + std::string(name) + "'");
}

std::string to_string(Measure m) {
  switch (m) {
    case Measure::MeanDifference: return "md";
    case Measure::Smd: return "smd";
    case Measure::LogOr: return "logor";
    case Measure::LogOdds: return "logodds";
    case Measure::LogRatioCi: return "logratio-ci";
    case Measure::FisherZ: return "fisherz";
    case Measure::Precomputed: return "precomputed";
  }
  return {};
}

bool is_log_scale(Measure m) { return m == Measure::LogOr || m == Measure::LogRatioCi; }

}  // namespace nnhm
