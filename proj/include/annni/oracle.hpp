#pragma once

#include <optional>
#include <vector>

#include "annni/model.hpp"
#include "annni/state.hpp"
#include "annni/symmetry.hpp"

namespace annni {

/// Eigenvalues (ascending) of H_p, full-space or sector-restricted.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<StateVector> eigenvectors;  // may be empty when not requested
  std::optional<SectorLabel> label;
};

/// All 2^L eigenvalues of H_p by dense Hermitian solve. L <= 12.
Spectrum full_spectrum(const AnnniParams& params, bool with_vectors = false);

/// Eigenvalues of H_p restricted to the labeled sector basis.
Spectrum sector_spectrum(const AnnniParams& params, const SectorLabel& label,
                         bool with_vectors = false);

/// Two lowest eigenvalues of the full spectrum.
std::pair<double, double> ground_gap(const AnnniParams& params);

/// Ground eigenvector of the full H_p (lowest eigenvalue; solver order on
/// degeneracy).
StateVector ground_state(const AnnniParams& params);

}  // namespace annni
