#include "annni/oracle.hpp"

#include <Eigen/Dense>
#include <stdexcept>

#include "annni/dense.hpp"

namespace annni {

namespace {

void check_scale(const AnnniParams& params) {
  if (params.sites > 12)
    throw std::invalid_argument("dense diagonalization limited to L <= 12");
}

}  // namespace

Spectrum full_spectrum(const AnnniParams& params, bool with_vectors) {
  params.validate();
  check_scale(params);
  // H_p is real symmetric in the computational basis (ZZ and X terms only)
  const Eigen::MatrixXcd hc = to_matrix(build_problem(params));
  const Eigen::MatrixXd h = hc.real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      h, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  Spectrum out;
  out.eigenvalues.assign(es.eigenvalues().data(),
                         es.eigenvalues().data() + es.eigenvalues().size());
  if (with_vectors) {
    for (Eigen::Index k = 0; k < es.eigenvectors().cols(); ++k) {
      Eigen::VectorXcd v = es.eigenvectors().col(k).cast<cplx>();
      out.eigenvectors.push_back(to_state(params.sites, v));
    }
  }
  return out;
}

Spectrum sector_spectrum(const AnnniParams& params, const SectorLabel& label,
                         bool with_vectors) {
  params.validate();
  check_scale(params);
  const SectorBasis basis = build_sector_basis(params.sites, label);
  Spectrum out;
  out.label = label;
  if (basis.dim() == 0) return out;

  const Eigen::Index d = basis.dim();
  Eigen::MatrixXcd b(static_cast<Eigen::Index>(basis.vectors[0].dim()), d);
  for (Eigen::Index c = 0; c < d; ++c)
    b.col(c) = to_vector(basis.vectors[static_cast<std::size_t>(c)]);
  const Eigen::MatrixXcd restricted =
      b.adjoint() * to_matrix(build_problem(params)) * b;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      restricted,
      with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  out.eigenvalues.assign(es.eigenvalues().data(),
                         es.eigenvalues().data() + es.eigenvalues().size());
  if (with_vectors) {
    for (Eigen::Index k = 0; k < d; ++k) {
      Eigen::VectorXcd full = b * es.eigenvectors().col(k);
      full.normalize();
      out.eigenvectors.push_back(to_state(params.sites, full));
    }
  }
  return out;
}

std::pair<double, double> ground_gap(const AnnniParams& params) {
  const Spectrum s = full_spectrum(params);
  return {s.eigenvalues[0], s.eigenvalues[1]};
}

StateVector ground_state(const AnnniParams& params) {
  params.validate();
  check_scale(params);
  const Eigen::MatrixXd h = to_matrix(build_problem(params)).real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  Eigen::VectorXcd v = es.eigenvectors().col(0).cast<cplx>();
  return to_state(params.sites, v);
}

}  // namespace annni
