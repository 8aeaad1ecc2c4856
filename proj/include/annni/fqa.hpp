#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "annni/model.hpp"
#include "annni/state.hpp"

namespace annni {

enum class UpMode { ExactDense, StrangSplit };

struct FqaConfig {
  double dt = 0.02;
  int layers = 1000;
  double beta_1 = 0.0;
  UpMode up_mode = UpMode::ExactDense;
  bool record_states = false;
  /// Optional early stop: halt when |J_k - J_{k-window}| < epsilon.
  std::optional<std::pair<int, double>> early_stop;

  void validate(int sites) const;
};

/// Per-layer trace of a feedback run. beta[k] = -A[k-1] for k >= 1 by
/// construction (indices 0-based, layer k+1 of the algorithm).
struct RunRecord {
  std::vector<double> beta;
  std::vector<double> A;
  std::vector<double> J;
  std::vector<StateVector> states;  // populated when record_states is set
  StateVector final_state;
  double converged_energy = 0.0;
  bool monotonic = true;
};

/// One evolution layer U_d(beta) * U_p applied to psi.
StateVector step(const StateVector& psi, double beta, const AnnniParams& params,
                 const FqaConfig& config);

/// Full feedback loop: per layer apply U_p then U_d(beta_k), measure
/// A_k = <i[H_d,H_p]> and J_k = <H_p>, set beta_{k+1} = -A_k.
/// The optional observer is invoked after every layer.
RunRecord run(const AnnniParams& params, const FqaConfig& config,
              const StateVector& initial,
              const std::function<void(int, const StateVector&)>& observer = {});

/// Indices i with J[i+1] > J[i] + 1e-9. Empty means monotone (ties allowed).
std::vector<int> check_monotonic(const RunRecord& record);

/// Maximum over sliding windows of mean|successive beta difference| divided
/// by mean|beta| in the window. Constant sequences give 0, alternating +-c
/// gives 2. Throws when the record is shorter than the window.
double divergence_score(const RunRecord& record, int window);

constexpr double kDivergenceThreshold = 1.5;

}  // namespace annni
