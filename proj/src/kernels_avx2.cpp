// Built with -mavx2 -mfma; only reached after the cpuid check in kernels_dispatch.cpp.
#include <immintrin.h>

#include <cstdint>

#include "nnhm/kernels.hpp"

namespace nnhm::kernels {

namespace {

// Cephes ndtr/erf/erfc rational approximations
constexpr double kP[] = {2.46196981473530512524E-10, 5.64189564831068821977E-1, 7.46321056442269912687E0,
                         4.86371970985681366614E1,   1.96520832956077098242E2,  5.26445194995477358631E2,
                         9.34528527171957607540E2,   1.02755188689515710272E3,  5.57535335369399327526E2};
constexpr double kQ[] = {1.0,                      1.32281951154744992508E1, 8.67072140885989742329E1,
                         3.54937778887819891062E2, 9.75708501743205489753E2, 1.82390916687909736289E3,
                         2.24633760818710981792E3, 1.65666309194161350182E3, 5.57535340817727675546E2};
constexpr double kR[] = {5.64189583547755073984E-1, 1.27536670759978104416E0, 5.01905042251180477414E0,
                         6.16021097993053585195E0,  7.40974269950448939160E0, 2.97886665372100240670E0};
constexpr double kS[] = {1.0,                      2.26052863220117276590E0, 9.39603524938001434673E0,
                         1.20489539808096656605E1, 1.70814450747329768264E1, 9.60896809063285878198E0,
                         3.36907645100081516050E0};
constexpr double kT[] = {9.60497373987051638749E0, 9.00260197203842689217E1, 2.23200534594684319226E3,
                         7.00332514112805075473E3, 5.55923013010394962768E4};
constexpr double kU[] = {1.0,                      3.35617141647503099647E1, 5.21357949780152679795E2,
                         4.59432382970980127987E3, 2.26290000613890934246E4, 4.92673942608635921086E4};

constexpr double kExpP[] = {1.26177193074810590878E-4, 3.02994407707441961300E-2, 9.99999999999999999910E-1};
constexpr double kExpQ[] = {3.00198505138664455042E-6, 2.52448340349684104192E-3, 2.27265548208155028766E-1,
                            2.00000000000000000009E0};

template <std::size_t N>
inline __m256d horner(__m256d x, const double (&c)[N]) {
  __m256d acc = _mm256_set1_pd(c[0]);
  for (std::size_t i = 1; i < N; ++i) acc = _mm256_fmadd_pd(acc, x, _mm256_set1_pd(c[i]));
  return acc;
}

// exp(v) for v <= 0; 0 below -745
inline __m256d exp_nonpos(__m256d v) {
  const __m256d lo = _mm256_set1_pd(-745.0);
  __m256d under = _mm256_cmp_pd(v, lo, _CMP_LT_OQ);
  v = _mm256_max_pd(v, lo);
  __m256d n = _mm256_round_pd(_mm256_mul_pd(v, _mm256_set1_pd(1.4426950408889634073599)),
                              _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(6.93145751953125E-1), v);
  r = _mm256_fnmadd_pd(n, _mm256_set1_pd(1.42860682030941723212E-6), r);
  __m256d rr = _mm256_mul_pd(r, r);
  __m256d px = _mm256_mul_pd(r, horner(rr, kExpP));
  __m256d qx = horner(rr, kExpQ);
  __m256d e = _mm256_fmadd_pd(_mm256_set1_pd(2.0), _mm256_div_pd(px, _mm256_sub_pd(qx, px)), _mm256_set1_pd(1.0));

  // 2^n in two halves so subnormal results still scale correctly
  __m128i ni = _mm256_cvtpd_epi32(n);
  __m128i n1 = _mm_srai_epi32(ni, 1);
  __m128i n2 = _mm_sub_epi32(ni, n1);
  const __m256i bias = _mm256_set1_epi64x(1023);
  __m256d s1 = _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_add_epi64(_mm256_cvtepi32_epi64(n1), bias), 52));
  __m256d s2 = _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_add_epi64(_mm256_cvtepi32_epi64(n2), bias), 52));
  e = _mm256_mul_pd(_mm256_mul_pd(e, s1), s2);
  return _mm256_andnot_pd(under, e);
}

struct Lane {
  __m256d cdf;
  __m256d pdf;  // phi(z) * sqrt(2 pi)
};

inline Lane ndtr(__m256d z) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  // beyond |z| = 40 both tails are exactly 0 in double
  z = _mm256_max_pd(_mm256_min_pd(z, _mm256_set1_pd(40.0)), _mm256_set1_pd(-40.0));
  __m256d x = _mm256_mul_pd(z, _mm256_set1_pd(0.70710678118654752440));
  __m256d ax = _mm256_andnot_pd(sign_mask, x);

  // exp(-x^2) with the rounding error of x^2 folded back in
  __m256d xx = _mm256_mul_pd(x, x);
  __m256d err = _mm256_fmsub_pd(x, x, xx);
  __m256d ex = exp_nonpos(_mm256_sub_pd(_mm256_setzero_pd(), xx));
  ex = _mm256_fnmadd_pd(ex, err, ex);

  __m256d erf_small = _mm256_div_pd(_mm256_mul_pd(x, horner(xx, kT)), horner(xx, kU));
  __m256d c_small = _mm256_fmadd_pd(half, erf_small, half);

  __m256d mid = _mm256_div_pd(horner(ax, kP), horner(ax, kQ));
  __m256d far = _mm256_div_pd(horner(ax, kR), horner(ax, kS));
  __m256d use_far = _mm256_cmp_pd(ax, _mm256_set1_pd(8.0), _CMP_GE_OQ);
  __m256d erfc = _mm256_mul_pd(ex, _mm256_blendv_pd(mid, far, use_far));
  __m256d tail = _mm256_mul_pd(half, erfc);
  __m256d pos = _mm256_cmp_pd(x, _mm256_setzero_pd(), _CMP_GT_OQ);
  __m256d c_big = _mm256_blendv_pd(tail, _mm256_sub_pd(one, tail), pos);

  __m256d small = _mm256_cmp_pd(ax, _mm256_set1_pd(0.70710678118654752440), _CMP_LT_OQ);
  return {_mm256_blendv_pd(c_big, c_small, small), ex};
}

}  // namespace

CdfPdf eval_avx2(const MixtureSoA& mix, double x) {
  const __m256d vx = _mm256_set1_pd(x);
  __m256d acc_c = _mm256_setzero_pd();
  __m256d acc_d = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= mix.n; j += 4) {
    __m256d w = _mm256_loadu_pd(mix.w + j);
    __m256d is = _mm256_loadu_pd(mix.inv_s + j);
    __m256d z = _mm256_mul_pd(_mm256_sub_pd(vx, _mm256_loadu_pd(mix.m + j)), is);
    Lane l = ndtr(z);
    acc_c = _mm256_fmadd_pd(w, l.cdf, acc_c);
    acc_d = _mm256_fmadd_pd(_mm256_mul_pd(w, is), l.pdf, acc_d);
  }
  if (j < mix.n) {
    alignas(32) std::int64_t bits[4] = {0, 0, 0, 0};
    for (std::size_t k = 0; j + k < mix.n; ++k) bits[k] = -1;
    __m256i mask = _mm256_load_si256(reinterpret_cast<const __m256i*>(bits));
    __m256d w = _mm256_maskload_pd(mix.w + j, mask);
    __m256d is = _mm256_maskload_pd(mix.inv_s + j, mask);
    __m256d z = _mm256_mul_pd(_mm256_sub_pd(vx, _mm256_maskload_pd(mix.m + j, mask)), is);
    Lane l = ndtr(z);
    acc_c = _mm256_fmadd_pd(w, l.cdf, acc_c);
    acc_d = _mm256_fmadd_pd(_mm256_mul_pd(w, is), l.pdf, acc_d);
  }
  alignas(32) double c[4], d[4];
  _mm256_store_pd(c, acc_c);
  _mm256_store_pd(d, acc_d);
  return {(c[0] + c[1]) + (c[2] + c[3]), ((d[0] + d[1]) + (d[2] + d[3])) * 0.398942280401432677939946059934};
}

}  // namespace nnhm::kernels
