#include "annni/fqa.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "annni/dense.hpp"

namespace annni {

namespace {

/// Problem-unitary applicator, built once per run.
class ProblemEvolver {
public:
  ProblemEvolver(const AnnniParams& params, const FqaConfig& config)
      : params_(params), config_(config) {
    if (config.up_mode == UpMode::ExactDense) {
      const Eigen::MatrixXd h = to_matrix(build_problem(params)).real();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
      const Eigen::VectorXcd phases =
          (cplx{0.0, -config.dt} * es.eigenvalues().cast<cplx>().array()).exp();
      up_ = es.eigenvectors().cast<cplx>() * phases.asDiagonal() *
            es.eigenvectors().transpose().cast<cplx>();
    } else {
      const auto energies = diagonal_energies(build_problem_diagonal(params));
      half_phases_.resize(energies.size());
      for (std::size_t b = 0; b < energies.size(); ++b)
        half_phases_[b] = std::polar(1.0, -0.5 * config.dt * energies[b]);
    }
  }

  void apply(StateVector& psi) const {
    if (config_.up_mode == UpMode::ExactDense) {
      Eigen::VectorXcd v = up_ * to_vector(psi);
      psi = to_state(psi.sites(), v);
    } else {
      // Strang split: half diagonal step, full transverse step, half diagonal
      apply_phases_inplace(psi, half_phases_);
      const double theta = -params_.g * config_.dt;
      for (int j = 0; j < psi.sites(); ++j) apply_rx_site_inplace(psi, j, theta);
      apply_phases_inplace(psi, half_phases_);
    }
  }

private:
  AnnniParams params_;
  FqaConfig config_;
  Eigen::MatrixXcd up_;
  std::vector<cplx> half_phases_;
};

void apply_driver(StateVector& psi, double beta, double dt) {
  const double theta = beta * dt;
  if (theta == 0.0) return;
  for (int j = 0; j < psi.sites(); ++j) apply_rx_site_inplace(psi, j, theta);
}

}  // namespace

void FqaConfig::validate(int sites) const {
  if (dt <= 0) throw std::invalid_argument("FQA dt must be positive");
  if (layers < 1) throw std::invalid_argument("FQA needs at least one layer");
  if (up_mode == UpMode::ExactDense && sites > 12)
    throw std::invalid_argument("ExactDense U_p limited to L <= 12");
}

StateVector step(const StateVector& psi, double beta, const AnnniParams& params,
                 const FqaConfig& config) {
  config.validate(psi.sites());
  const ProblemEvolver up(params, config);
  StateVector out = psi;
  up.apply(out);
  apply_driver(out, beta, config.dt);
  return out;
}

RunRecord run(const AnnniParams& params, const FqaConfig& config,
              const StateVector& initial,
              const std::function<void(int, const StateVector&)>& observer) {
  params.validate();
  config.validate(initial.sites());
  if (initial.sites() != params.sites)
    throw std::invalid_argument("initial state length mismatch");
  if (std::abs(initial.norm() - 1.0) > StateVector::kNormTol)
    throw std::invalid_argument("initial state is not normalized");

  const PauliSum hp = build_problem(params);
  const PauliSum fb = feedback_observable(params);
  const ProblemEvolver up(params, config);

  RunRecord record{{}, {}, {}, {}, initial, 0.0, true};
  record.beta.reserve(static_cast<std::size_t>(config.layers));
  record.A.reserve(static_cast<std::size_t>(config.layers));
  record.J.reserve(static_cast<std::size_t>(config.layers));

  StateVector psi = initial;
  double beta = config.beta_1;
  for (int k = 0; k < config.layers; ++k) {
    up.apply(psi);
    apply_driver(psi, beta, config.dt);
    // divide out accumulated rounding drift so the per-construction norm
    // check stays meaningful over tens of thousands of unitary layers
    psi.renormalize();
    const double a = expectation(fb, psi);
    const double j = expectation(hp, psi);
    record.beta.push_back(beta);
    record.A.push_back(a);
    record.J.push_back(j);
    if (config.record_states) record.states.push_back(psi);
    if (observer) observer(k, psi);
    beta = -a;

    if (config.early_stop) {
      const auto [window, eps] = *config.early_stop;
      const std::size_t count = record.J.size();
      if (count > static_cast<std::size_t>(window) &&
          std::abs(record.J[count - 1] -
                   record.J[count - 1 - static_cast<std::size_t>(window)]) < eps)
        break;
    }
  }
  record.final_state = psi;
  record.converged_energy = record.J.back();
  record.monotonic = check_monotonic(record).empty();
  return record;
}

std::vector<int> check_monotonic(const RunRecord& record) {
  std::vector<int> violations;
  for (std::size_t i = 0; i + 1 < record.J.size(); ++i)
    if (record.J[i + 1] > record.J[i] + 1e-9)
      violations.push_back(static_cast<int>(i));
  return violations;
}

double divergence_score(const RunRecord& record, int window) {
  if (window < 2) throw std::invalid_argument("divergence window must be >= 2");
  const std::size_t n = record.beta.size();
  if (n < static_cast<std::size_t>(window))
    throw std::invalid_argument("record shorter than divergence window");
  double worst = 0.0;
  for (std::size_t start = 0; start + window <= n; ++start) {
    double diff_sum = 0.0;
    double abs_sum = 0.0;
    for (std::size_t i = start; i < start + static_cast<std::size_t>(window); ++i) {
      abs_sum += std::abs(record.beta[i]);
      if (i > start) diff_sum += std::abs(record.beta[i] - record.beta[i - 1]);
    }
    const double mean_diff = diff_sum / (window - 1);
    const double mean_abs = abs_sum / window;
    if (mean_abs > 0.0) worst = std::max(worst, mean_diff / mean_abs);
  }
  return worst;
}

}  // namespace annni
