#include "annni/kernels.hpp"

namespace annni::kernels {

namespace {

using cplx = std::complex<double>;

void apply_phases_scalar(cplx* psi, const cplx* phases, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) psi[i] *= phases[i];
}

void apply_rx_scalar(cplx* psi, std::size_t n, std::size_t stride, double c,
                     double s) {
  const cplx mis{0.0, -s};
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const cplx a = psi[i];
      const cplx b = psi[i + stride];
      psi[i] = c * a + mis * b;
      psi[i + stride] = c * b + mis * a;
    }
  }
}

double diag_expectation_scalar(const cplx* psi, const double* energy,
                               std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += energy[i] * std::norm(psi[i]);
  return acc;
}

cplx inner_scalar(const cplx* a, const cplx* b, std::size_t n) {
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm_sqr_scalar(const cplx* psi, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(psi[i]);
  return acc;
}

}  // namespace

const Ops& scalar() {
  static const Ops ops{"scalar",          apply_phases_scalar, apply_rx_scalar,
                       diag_expectation_scalar, inner_scalar,  norm_sqr_scalar};
  return ops;
}

}  // namespace annni::kernels
