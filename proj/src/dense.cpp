#include "annni/dense.hpp"

namespace annni {

Eigen::MatrixXcd to_matrix(const PauliSum& sum) {
  const Eigen::Index n = Eigen::Index{1} << sum.length();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& t : sum.terms()) {
    const uint64_t x = t.string.x_mask();
    for (Eigen::Index col = 0; col < n; ++col) {
      const auto b = static_cast<uint64_t>(col);
      m(static_cast<Eigen::Index>(b ^ x), col) +=
          t.coeff * pauli_action_phase(t.string, b);
    }
  }
  return m;
}

Eigen::VectorXcd to_vector(const StateVector& psi) {
  return Eigen::Map<const Eigen::VectorXcd>(psi.amplitudes().data(),
                                            static_cast<Eigen::Index>(psi.dim()));
}

StateVector to_state(int sites, const Eigen::VectorXcd& v) {
  std::vector<cplx> amps(v.data(), v.data() + v.size());
  return StateVector(sites, std::move(amps));
}

}  // namespace annni
