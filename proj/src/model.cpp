#include "annni/model.hpp"

#include <stdexcept>

#include "annni/dense.hpp"

namespace annni {

void AnnniParams::validate() const {
  if (sites < 3)
    throw std::invalid_argument("ANNNI chain needs L >= 3 (next-nearest bonds)");
  if (kappa < 0 || g < 0)
    throw std::invalid_argument("ANNNI couplings kappa, g must be >= 0");
}

PauliSum build_problem(const AnnniParams& params) {
  params.validate();
  const int L = params.sites;
  PauliSum h(L);
  for (int j = 0; j < L; ++j) {
    PauliString nn(L);
    nn.set_op(j, PauliOp::Z);
    nn.set_op((j + 1) % L, PauliOp::Z);
    h.add(-1.0, nn);

    PauliString nnn(L);
    nnn.set_op(j, PauliOp::Z);
    nnn.set_op((j + 2) % L, PauliOp::Z);
    h.add(params.kappa, nnn);

    PauliString x(L);
    x.set_op(j, PauliOp::X);
    h.add(-params.g, x);
  }
  return h.normalized();
}

PauliSum build_problem_diagonal(const AnnniParams& params) {
  const PauliSum h = build_problem(params);
  PauliSum out(h.length());
  for (const auto& t : h.terms())
    if (t.string.is_diagonal()) out.add(t.coeff, t.string);
  return out.normalized();
}

PauliSum build_problem_transverse(const AnnniParams& params) {
  const PauliSum h = build_problem(params);
  PauliSum out(h.length());
  for (const auto& t : h.terms())
    if (!t.string.is_diagonal()) out.add(t.coeff, t.string);
  return out.normalized();
}

PauliSum build_driver(int sites) {
  if (sites < 1) throw std::invalid_argument("driver needs L >= 1");
  PauliSum h(sites);
  for (int j = 0; j < sites; ++j) {
    PauliString x(sites);
    x.set_op(j, PauliOp::X);
    h.add(1.0, x);
  }
  return h.normalized();
}

PauliSum feedback_observable(const AnnniParams& params) {
  return commutator_i(build_driver(params.sites), build_problem(params));
}

double dt_bound(const AnnniParams& params, bool exact_norm) {
  params.validate();
  const double L = params.sites;
  double hp_norm = L * (1.0 + params.kappa + params.g);
  if (exact_norm) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        to_matrix(build_problem(params)), Eigen::EigenvaluesOnly);
    hp_norm = es.eigenvalues().cwiseAbs().maxCoeff();
  }
  return 1.0 / (4.0 * hp_norm * L * L);
}

}  // namespace annni
