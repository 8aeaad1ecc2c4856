#pragma once

#include <Eigen/Dense>

#include "annni/pauli.hpp"
#include "annni/state.hpp"

namespace annni {

/// Dense 2^L x 2^L matrix of a PauliSum in the computational basis.
Eigen::MatrixXcd to_matrix(const PauliSum& sum);

Eigen::VectorXcd to_vector(const StateVector& psi);
StateVector to_state(int sites, const Eigen::VectorXcd& v);

}  // namespace annni
