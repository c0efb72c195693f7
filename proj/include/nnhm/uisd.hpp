#pragma once

#include <optional>
#include <span>

#include "nnhm/effect.hpp"

namespace nnhm {

enum class UisdBasis { PerSubject, PerEvent };
enum class UisdSource { Empirical, Theoretical };

struct UisdEstimate {
  double value = 0.0;
  UisdBasis basis = UisdBasis::PerSubject;
  UisdSource source = UisdSource::Empirical;
};

// s = sqrt(sum n_i / sum sigma_i^-2)
UisdEstimate empirical_uisd(std::span<const double> n, std::span<const double> sigma);
UisdEstimate empirical_uisd(std::span<const EffectEstimate> studies);

enum class UisdScale { Smd, LogOdds, LogOr, LogIrr };
// LogOdds takes the event probability p; LogIrr optionally the event rate per subject
UisdEstimate theoretical_uisd(UisdScale scale, std::optional<double> param = std::nullopt);

// (uisd / tau)^2; +inf for tau = 0
double prior_max_sample_size(double tau, double uisd);
double effective_sample_size(double sd, double uisd);

}  // namespace nnhm
