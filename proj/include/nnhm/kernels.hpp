#pragma once

#include <cstddef>

namespace nnhm::kernels {

enum class Isa { Scalar, Avx2 };

// structure-of-arrays normal mixture; inv_s = 1/sd
struct MixtureSoA {
  const double* w;
  const double* m;
  const double* inv_s;
  std::size_t n;
};

struct CdfPdf {
  double cdf = 0.0;
  double pdf = 0.0;
};

// sum_j w_j Phi((x - m_j) inv_s_j) and sum_j w_j phi(.) inv_s_j
CdfPdf eval_scalar(const MixtureSoA& mix, double x);
#if defined(NNHM_HAVE_AVX2)
CdfPdf eval_avx2(const MixtureSoA& mix, double x);
#endif

bool isa_supported(Isa isa);
// cpu detection on first use; NNHM_SIMD=scalar|avx2 overrides
Isa active_isa();
void set_isa(Isa isa);
const char* isa_name(Isa isa);

CdfPdf eval(const MixtureSoA& mix, double x);

}  // namespace nnhm::kernels
