#pragma once

#include "annni/pauli.hpp"

namespace annni {

/// Couplings of the transverse-field ANNNI chain with J = 1 and periodic
/// boundary conditions.
struct AnnniParams {
  int sites = 4;     // L >= 3
  double kappa = 0;  // next-nearest-neighbor coupling, >= 0
  double g = 0;      // transverse field, >= 0

  void validate() const;
  bool operator==(const AnnniParams&) const = default;
};

/// H_p = -sum_j (Z_j Z_{j+1} - kappa Z_j Z_{j+2} + g X_j), indices mod L.
PauliSum build_problem(const AnnniParams& params);

/// Z/I-only part of H_p (the ZZ bonds), used by the Strang split.
PauliSum build_problem_diagonal(const AnnniParams& params);

/// Transverse part of H_p: -g sum_j X_j.
PauliSum build_problem_transverse(const AnnniParams& params);

/// H_d = sum_j X_j.
PauliSum build_driver(int sites);

/// i[H_d, H_p]; Hermitian, independent of g.
PauliSum feedback_observable(const AnnniParams& params);

/// Conservative step-size bound 1 / (4 * ||H_p||_ub * ||H_d||^2) with
/// ||H_d|| = L and the triangle-inequality estimate ||H_p||_ub = L(1+kappa+g).
/// With exact_norm, the spectral norm of H_p from dense diagonalization is
/// used instead of the upper bound.
double dt_bound(const AnnniParams& params, bool exact_norm = false);

}  // namespace annni
