#include <atomic>
#include <cstdlib>
#include <cstring>

#include "nnhm/errors.hpp"
#include "nnhm/kernels.hpp"

namespace nnhm::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(NNHM_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__)) && defined(__GNUC__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detect() {
  Isa best = cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
  if (const char* env = std::getenv("NNHM_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::Scalar;
    if (std::strcmp(env, "avx2") == 0 && best == Isa::Avx2) return Isa::Avx2;
  }
  return best;
}

std::atomic<int>& current() {
  static std::atomic<int> isa{static_cast<int>(detect())};
  return isa;
}

}  // namespace

bool isa_supported(Isa isa) {
  if (isa == Isa::Scalar) return true;
  return cpu_has_avx2();
}

Isa active_isa() { return static_cast<Isa>(current().load(std::memory_order_relaxed)); }

void set_isa(Isa isa) {
  if (!isa_supported(isa)) throw InputError(std::string("instruction set not available: ") + isa_name(isa));
  current().store(static_cast<int>(isa), std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

CdfPdf eval(const MixtureSoA& mix, double x) {
#if defined(NNHM_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return eval_avx2(mix, x);
#endif
  return eval_scalar(mix, x);
}

}  // namespace nnhm::kernels
