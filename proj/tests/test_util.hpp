#pragma once

#include <Eigen/Dense>
#include <random>

#include "annni/dense.hpp"
#include "annni/pauli.hpp"
#include "annni/state.hpp"

namespace annni::testutil {

inline std::mt19937_64 rng(uint64_t seed = 0x5eed) { return std::mt19937_64(seed); }

inline StateVector random_state(int sites, std::mt19937_64& gen) {
  std::normal_distribution<double> dist;
  std::vector<cplx> amps(std::size_t{1} << sites);
  for (auto& a : amps) a = cplx{dist(gen), dist(gen)};
  double nrm2 = 0;
  for (const auto& a : amps) nrm2 += std::norm(a);
  const double s = 1.0 / std::sqrt(nrm2);
  for (auto& a : amps) a *= s;
  return StateVector(sites, std::move(amps));
}

inline PauliString random_string(int sites, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> op(0, 3);
  PauliString s(sites);
  for (int j = 0; j < sites; ++j) s.set_op(j, static_cast<PauliOp>(op(gen)));
  return s;
}

inline PauliSum random_hermitian_sum(int sites, int terms, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  PauliSum sum(sites);
  for (int t = 0; t < terms; ++t) sum.add(coeff(gen), random_string(sites, gen));
  return sum.normalized();
}

/// exp(-i*t*H) for Hermitian H, via dense eigendecomposition.
inline Eigen::MatrixXcd expm_herm(const Eigen::MatrixXcd& h, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i)
    phases(i) = std::polar(1.0, -t * es.eigenvalues()(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace annni::testutil
