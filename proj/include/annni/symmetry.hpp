#pragma once

#include <optional>
#include <string>
#include <vector>

#include "annni/model.hpp"
#include "annni/state.hpp"

namespace annni {

/// Quantum numbers of a symmetry sector. Absent entries render as "-".
/// p = 0 maps to eigenvalue +1 and p = 1 to -1 for the order-two operators;
/// translation eigenvalues are exp(i*2*pi*p_T/L).
struct SectorLabel {
  std::optional<int> p_I;
  std::optional<int> p_R;
  std::optional<int> p_T2;  // quantum number of T^(L/2), even L only
  std::optional<int> p_T;

  static SectorLabel make(std::optional<int> pi, std::optional<int> pr,
                          std::optional<int> pt2, std::optional<int> pt) {
    return SectorLabel{pi, pr, pt2, pt};
  }
  /// Parse "1,0,1,-" (order p_I, p_R, p_T2, p_T).
  static SectorLabel parse(const std::string& text);
  std::string to_string() const;

  void validate(int sites) const;
  bool operator==(const SectorLabel&) const = default;
};

enum class SymKind { Inversion, Reflection, Translation, TranslationPower };

/// One of the chain symmetries, acting as a permutation of basis kets.
struct SymOp {
  SymKind kind;
  int sites;
  int power = 1;  // for TranslationPower

  int order() const;
  uint64_t map_basis(uint64_t b) const;
};

StateVector apply_symmetry(const SymOp& op, const StateVector& psi);

/// Normalized projection of psi onto the eigenvalue-index-p subspace of op,
/// or nullopt when psi has no component there (projection norm < 1e-10).
std::optional<StateVector> project_eigenvector(const SymOp& op, int p,
                                               const StateVector& psi);

struct SectorBasis {
  SectorLabel label;
  std::vector<StateVector> vectors;
  int dim() const { return static_cast<int>(vectors.size()); }
};

/// Orthonormal basis of the labeled sector, built by successive projection
/// (order I, R, T^(L/2), T) of computational kets in increasing encoding,
/// then Gram-Schmidt. Throws when the label is inconsistent or when the
/// requested quantum numbers are not simultaneously realizable (e.g. p_R
/// and p_T both present in a sector where R and T do not commute).
SectorBasis build_sector_basis(int sites, const SectorLabel& label);

/// i-th lowest eigenstate of H_d restricted to the sector, mapped back to
/// the full space. Degenerate eigenvalues are tie-broken by the index of the
/// largest-magnitude computational amplitude, then basis order.
StateVector chi_state(int sites, int i, const SectorLabel& label);

/// Ground state of H_d on the full space: |-> tensored over all sites.
StateVector driver_ground(int sites);

/// (|0...0> + |1...1>)/sqrt(2) and (|0...0> - |1...1>)/sqrt(2).
std::pair<StateVector, StateVector> ghz_pair(int sites);

/// Largest off-block matrix element of H_p in the concatenated sector basis.
/// Throws unless the bases are jointly complete.
double verify_block_diagonal(const AnnniParams& params,
                             const std::vector<SectorBasis>& bases);

/// sum_v |<v|psi>|^2 over the sector basis.
double sector_overlap(const SectorBasis& basis, const StateVector& psi);

/// Complete family of base labels: (p_I, p_R, p_T2) for even L,
/// (p_I, p_R) for odd L. Dims over the family sum to 2^L.
std::vector<SectorLabel> base_label_family(int sites);

/// Family refined by p_T wherever the translation label is admissible.
/// Empty sectors are kept out of the result.
std::vector<SectorLabel> refined_label_family(int sites);

/// Label of the sector psi lives in, detected by applying each operator and
/// testing whether psi is an eigenvector.
SectorLabel detect_label(const StateVector& psi);

}  // namespace annni
