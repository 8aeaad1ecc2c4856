// AVX2 statevector kernels. Amplitudes are interleaved re/im doubles, so a
// 256-bit register holds two complex numbers. Compiled with -mavx2 -mfma;
// kernels_dispatch.cpp decides at runtime whether this backend is usable.
#include "annni/kernels.hpp"

#include <immintrin.h>

namespace annni::kernels {

namespace {

using cplx = std::complex<double>;

inline double* dbl(cplx* p) { return reinterpret_cast<double*>(p); }
inline const double* dbl(const cplx* p) {
  return reinterpret_cast<const double*>(p);
}

// complex multiply of the two packed complex values in x by those in p
inline __m256d cmul(__m256d x, __m256d p) {
  const __m256d pr = _mm256_movedup_pd(p);          // [pr0 pr0 pr1 pr1]
  const __m256d pi = _mm256_permute_pd(p, 0xF);     // [pi0 pi0 pi1 pi1]
  const __m256d xs = _mm256_permute_pd(x, 0x5);     // [xi0 xr0 xi1 xr1]
  return _mm256_fmaddsub_pd(x, pr, _mm256_mul_pd(xs, pi));
}

// multiply the two packed complex values by -i: (re, im) -> (im, -re)
inline __m256d mul_neg_i(__m256d x) {
  const __m256d sw = _mm256_permute_pd(x, 0x5);
  const __m256d sign = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  return _mm256_xor_pd(sw, sign);
}

void apply_phases_avx2(cplx* psi, const cplx* phases, std::size_t n) {
  std::size_t i = 0;
  double* p = dbl(psi);
  const double* ph = dbl(phases);
  for (; i + 2 <= n; i += 2) {
    const __m256d x = _mm256_loadu_pd(p + 2 * i);
    const __m256d f = _mm256_loadu_pd(ph + 2 * i);
    _mm256_storeu_pd(p + 2 * i, cmul(x, f));
  }
  for (; i < n; ++i) psi[i] *= phases[i];
}

void apply_rx_avx2(cplx* psi, std::size_t n, std::size_t stride, double c,
                   double s) {
  if (stride < 2) {  // adjacent pairs do not vectorize cleanly; scalar path
    const cplx mis{0.0, -s};
    for (std::size_t base = 0; base < n; base += 2) {
      const cplx a = psi[base], b = psi[base + 1];
      psi[base] = c * a + mis * b;
      psi[base + 1] = c * b + mis * a;
    }
    return;
  }
  const __m256d cc = _mm256_set1_pd(c);
  const __m256d ss = _mm256_set1_pd(s);
  double* p = dbl(psi);
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; i += 2) {
      const __m256d a = _mm256_loadu_pd(p + 2 * i);
      const __m256d b = _mm256_loadu_pd(p + 2 * (i + stride));
      const __m256d a2 = _mm256_fmadd_pd(cc, a, mul_neg_i(_mm256_mul_pd(ss, b)));
      const __m256d b2 = _mm256_fmadd_pd(cc, b, mul_neg_i(_mm256_mul_pd(ss, a)));
      _mm256_storeu_pd(p + 2 * i, a2);
      _mm256_storeu_pd(p + 2 * (i + stride), b2);
    }
  }
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double diag_expectation_avx2(const cplx* psi, const double* energy,
                             std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const double* p = dbl(psi);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d x = _mm256_loadu_pd(p + 2 * i);
    const __m256d sq = _mm256_mul_pd(x, x);
    const __m256d nrm = _mm256_hadd_pd(sq, sq);  // [n0 n0 n1 n1]
    const __m128d ep = _mm_loadu_pd(energy + i);
    const __m256d ee =
        _mm256_permute4x64_pd(_mm256_castpd128_pd256(ep), 0x50);  // [e0 e0 e1 e1]
    acc = _mm256_fmadd_pd(nrm, ee, acc);
  }
  // lanes 0 and 2 each hold half the running sum once
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double out = lanes[0] + lanes[2];
  for (; i < n; ++i) out += energy[i] * std::norm(psi[i]);
  return out;
}

cplx inner_avx2(const cplx* a, const cplx* b, std::size_t n) {
  __m256d racc = _mm256_setzero_pd();
  __m256d iacc = _mm256_setzero_pd();
  const double* pa = dbl(a);
  const double* pb = dbl(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    racc = _mm256_fmadd_pd(va, vb, racc);  // ar*br + ai*bi (after hadd)
    const __m256d vas = _mm256_permute_pd(va, 0x5);
    iacc = _mm256_fmadd_pd(vas, vb, iacc);  // ai*br, ar*bi pairs
  }
  const __m256d rsum = _mm256_hadd_pd(racc, racc);
  const __m256d isub = _mm256_hsub_pd(iacc, iacc);  // ai*br - ar*bi = -im
  alignas(32) double rl[4], il[4];
  _mm256_store_pd(rl, rsum);
  _mm256_store_pd(il, isub);
  cplx out{rl[0] + rl[2], -(il[0] + il[2])};
  for (; i < n; ++i) out += std::conj(a[i]) * b[i];
  return out;
}

double norm_sqr_avx2(const cplx* psi, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const double* p = dbl(psi);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d x = _mm256_loadu_pd(p + 2 * i);
    acc = _mm256_fmadd_pd(x, x, acc);
  }
  double out = hsum(acc);
  for (; i < n; ++i) out += std::norm(psi[i]);
  return out;
}

}  // namespace

const Ops* avx2_impl() {
  static const Ops ops{"avx2",          apply_phases_avx2, apply_rx_avx2,
                       diag_expectation_avx2, inner_avx2,  norm_sqr_avx2};
  return &ops;
}

}  // namespace annni::kernels
