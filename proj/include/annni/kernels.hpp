#pragma once

#include <complex>
#include <cstddef>

namespace annni::kernels {

/// Data-parallel statevector primitives. Scalar reference versions always
/// exist; an AVX2 variant is selected at runtime when the CPU supports it.
/// The environment variable ANNNI_KERNELS (values "scalar", "avx2") forces
/// a backend, mainly for equivalence testing.
struct Ops {
  const char* name;

  /// psi[i] *= phases[i]
  void (*apply_phases)(std::complex<double>* psi,
                       const std::complex<double>* phases, std::size_t n);

  /// Single-qubit X rotation exp(-i*theta*sigma_x) on the qubit whose basis
  /// stride is `stride`: for every pair (b, b+stride) with (b & stride) == 0,
  ///   psi[b]        <- c*psi[b]        - i*s*psi[b+stride]
  ///   psi[b+stride] <- c*psi[b+stride] - i*s*psi[b]
  /// with c = cos(theta), s = sin(theta).
  void (*apply_rx)(std::complex<double>* psi, std::size_t n, std::size_t stride,
                   double c, double s);

  /// sum_i energy[i] * |psi[i]|^2
  double (*diag_expectation)(const std::complex<double>* psi,
                             const double* energy, std::size_t n);

  /// <a|b> = sum_i conj(a[i]) * b[i]
  std::complex<double> (*inner)(const std::complex<double>* a,
                                const std::complex<double>* b, std::size_t n);

  /// sum_i |psi[i]|^2
  double (*norm_sqr)(const std::complex<double>* psi, std::size_t n);
};

const Ops& scalar();

/// AVX2 backend, or nullptr when not compiled in / not supported by the CPU.
const Ops* avx2();

/// Backend chosen at startup (CPU detection + ANNNI_KERNELS override).
const Ops& active();

}  // namespace annni::kernels
