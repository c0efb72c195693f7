#include "nnhm/uisd.hpp"

#include <cmath>
#include <vector>

#include "nnhm/errors.hpp"

namespace nnhm {

UisdEstimate empirical_uisd(std::span<const double> n, std::span<const double> sigma) {
  if (n.empty() || n.size() != sigma.size()) throw InputError("UISD needs matching, nonempty n and sigma lists");
  double sn = 0.0, sp = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!(n[i] >= 1.0)) throw DomainError("UISD needs sample sizes >= 1");
    if (!(sigma[i] > 0.0)) throw DomainError("UISD needs positive standard errors");
    sn += n[i];
    sp += 1.0 / (sigma[i] * sigma[i]);
  }
  return {std::sqrt(sn / sp), UisdBasis::PerSubject, UisdSource::Empirical};
}

UisdEstimate empirical_uisd(std::span<const EffectEstimate> studies) {
  std::vector<double> n, s;
  for (const auto& e : studies) {
    if (!e.n) throw InputError("cannot estimate the UISD: study '" + e.label + "' has no sample size");
    n.push_back(*e.n);
    s.push_back(e.sigma);
  }
  return empirical_uisd(n, s);
}

UisdEstimate theoretical_uisd(UisdScale scale, std::optional<double> param) {
  switch (scale) {
    case UisdScale::Smd:
      return {2.0, UisdBasis::PerSubject, UisdSource::Theoretical};
    case UisdScale::LogOdds: {
      double p = param.value_or(0.5);
      if (!(p > 0.0 && p < 1.0)) throw DomainError("event probability must lie in (0, 1)");
      return {std::sqrt(1.0 / p + 1.0 / (1.0 - p)), UisdBasis::PerSubject, UisdSource::Theoretical};
    }
    case UisdScale::LogOr:
      return {4.0, UisdBasis::PerSubject, UisdSource::Theoretical};
    case UisdScale::LogIrr:
      if (!param) return {2.0, UisdBasis::PerEvent, UisdSource::Theoretical};
      if (!(*param > 0.0)) throw DomainError("event rate must be positive");
      return {2.0 / std::sqrt(*param), UisdBasis::PerSubject, UisdSource::Theoretical};
  }
  throw InputError("unknown UISD scale");
}

double prior_max_sample_size(double tau, double uisd) {
  if (!(uisd > 0.0)) throw DomainError("UISD must be positive");
  if (!(tau >= 0.0)) throw DomainError("tau must be nonnegative");
  if (tau == 0.0) return INFINITY;
  double r = uisd / tau;
  return r * r;
}

double effective_sample_size(double sd, double uisd) {
  if (!(sd > 0.0) || !(uisd > 0.0)) throw DomainError("sd and UISD must be positive");
  double r = uisd / sd;
  return r * r;
}

}  // namespace nnhm
