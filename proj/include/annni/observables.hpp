#pragma once

#include <vector>

#include "annni/state.hpp"

namespace annni {

enum class SpinComponent { X, Y, Z };

/// Site-averaged two-point correlation (1/L) sum_i <S^mu_i S^mu_{i+r}>,
/// r = 0..L-1 with periodic separation. values[0] = 1/4.
struct CorrelationProfile {
  SpinComponent mu;
  std::vector<double> values;
};

/// Structure factor over wave numbers K = 2*pi*n/L, n = 0..L-1.
struct StructureFactorProfile {
  std::vector<double> values;
};

CorrelationProfile correlation(const StateVector& psi, SpinComponent mu);

/// Full two-point matrix C[i][j] = <S^mu_i S^mu_j> (spin-1/2 prefactors
/// included), used by the structure-factor double sum.
std::vector<std::vector<double>> correlation_matrix(const StateVector& psi,
                                                    SpinComponent mu);

/// DFT route: aggregate the periodic correlation profile, then Fourier sum.
StructureFactorProfile structure_factor(const StateVector& psi, SpinComponent mu);

/// Independent O(L^2) double-sum route over the full correlation matrix.
StructureFactorProfile structure_factor_direct(const StateVector& psi,
                                               SpinComponent mu);

/// sum over mu = x,y,z of the per-component structure factors.
StructureFactorProfile structure_factor_sum(const StateVector& psi);

}  // namespace annni
