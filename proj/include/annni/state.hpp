#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "annni/pauli.hpp"

namespace annni {

/// Dense statevector on L sites, 2^L amplitudes in the computational basis.
/// Site 0 is the most significant bit of the basis index; |0> = |up>
/// (sigma_z eigenvalue +1), |1> = |down>.
class StateVector {
public:
  static constexpr double kNormTol = 1e-10;

  StateVector(int sites, std::vector<cplx> amplitudes);

  static StateVector basis_state(int sites, uint64_t index);
  /// Parse a bitstring like "0101" (site 0 first).
  static StateVector basis_state(const std::string& bits);

  int sites() const { return sites_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  cplx amplitude(uint64_t index) const { return amps_[index]; }

  double norm() const;
  void renormalize();

  /// Little-endian binary snapshot: u32 L then interleaved re/im float64.
  std::vector<std::byte> to_bytes() const;
  static StateVector from_bytes(const std::vector<std::byte>& bytes);

  std::vector<cplx>& mutable_amplitudes() { return amps_; }

private:
  int sites_;
  std::vector<cplx> amps_;
};

/// <psi|obs|psi> for a Hermitian observable. Throws on non-Hermitian input
/// or length mismatch; asserts the imaginary residue is below 1e-10.
double expectation(const PauliSum& obs, const StateVector& psi);

/// <a|b>
cplx inner(const StateVector& a, const StateVector& b);

/// exp(-i*theta*P)|psi> in closed form (P^2 = 1). The all-identity string is
/// a global phase and is applied as such.
StateVector apply_string_exponential(const StateVector& psi,
                                     const PauliString& p, double theta);

/// Diagonal eigenvalue of a Z/I-only sum on each computational basis state.
std::vector<double> diagonal_energies(const PauliSum& zz_terms);

/// exp(-i*dt*H_zz)|psi> for a Z/I-only sum; exact per-amplitude phases.
StateVector apply_diagonal_evolution(const StateVector& psi,
                                     const PauliSum& zz_terms, double dt);

/// In-place variants used by the FQA inner loop.
void apply_phases_inplace(StateVector& psi, const std::vector<cplx>& phases);
void apply_rx_site_inplace(StateVector& psi, int site, double theta);

/// Action phase of a Pauli string on basis state b: P|b> = phase * |b ^ x_mask>.
cplx pauli_action_phase(const PauliString& p, uint64_t b);

}  // namespace annni
