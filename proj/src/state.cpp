#include "annni/state.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "annni/kernels.hpp"

namespace annni {

namespace {

void check_lengths(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string("length mismatch in ") + what);
}

}  // namespace

StateVector::StateVector(int sites, std::vector<cplx> amplitudes)
    : sites_(sites), amps_(std::move(amplitudes)) {
  if (sites_ < 2) throw std::invalid_argument("StateVector needs L >= 2");
  if (amps_.size() != (std::size_t{1} << sites_))
    throw std::invalid_argument("amplitude count is not 2^L");
  if (std::abs(norm() - 1.0) > kNormTol)
    throw std::invalid_argument("StateVector is not normalized");
}

StateVector StateVector::basis_state(int sites, uint64_t index) {
  std::vector<cplx> amps(std::size_t{1} << sites, cplx{0.0, 0.0});
  amps.at(index) = cplx{1.0, 0.0};
  return StateVector(sites, std::move(amps));
}

StateVector StateVector::basis_state(const std::string& bits) {
  uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bad bitstring: " + bits);
    index = (index << 1) | static_cast<uint64_t>(c - '0');
  }
  return basis_state(static_cast<int>(bits.size()), index);
}

double StateVector::norm() const {
  return std::sqrt(kernels::active().norm_sqr(amps_.data(), amps_.size()));
}

void StateVector::renormalize() {
  const double n = norm();
  if (n == 0.0) throw std::runtime_error("cannot renormalize the zero vector");
  for (auto& a : amps_) a /= n;
}

std::vector<std::byte> StateVector::to_bytes() const {
  std::vector<std::byte> out(sizeof(uint32_t) + amps_.size() * sizeof(cplx));
  const uint32_t l = static_cast<uint32_t>(sites_);
  std::memcpy(out.data(), &l, sizeof(l));
  std::memcpy(out.data() + sizeof(l), amps_.data(), amps_.size() * sizeof(cplx));
  return out;
}

StateVector StateVector::from_bytes(const std::vector<std::byte>& bytes) {
  if (bytes.size() < sizeof(uint32_t)) throw std::invalid_argument("short snapshot");
  uint32_t l = 0;
  std::memcpy(&l, bytes.data(), sizeof(l));
  const std::size_t n = std::size_t{1} << l;
  if (bytes.size() != sizeof(uint32_t) + n * sizeof(cplx))
    throw std::invalid_argument("snapshot size does not match L");
  std::vector<cplx> amps(n);
  std::memcpy(amps.data(), bytes.data() + sizeof(uint32_t), n * sizeof(cplx));
  return StateVector(static_cast<int>(l), std::move(amps));
}

cplx pauli_action_phase(const PauliString& p, uint64_t b) {
  static constexpr cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const int k = (p.y_count() + 2 * std::popcount(b & p.z_mask())) & 3;
  return ipow[k];
}

double expectation(const PauliSum& obs, const StateVector& psi) {
  check_lengths(obs.length(), psi.sites(), "expectation");
  if (!obs.is_hermitian(1e-10))
    throw std::invalid_argument("expectation requires a Hermitian observable");
  const auto& a = psi.amplitudes();
  const std::size_t n = a.size();
  cplx acc{0.0, 0.0};
  for (const auto& t : obs.terms()) {
    const uint64_t x = t.string.x_mask();
    cplx term{0.0, 0.0};
    if (x == 0) {
      // diagonal term: real by construction
      const uint64_t z = t.string.z_mask();
      double d = 0.0;
      for (std::size_t b = 0; b < n; ++b) {
        const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
        d += sign * std::norm(a[b]);
      }
      term = d;
    } else {
      for (std::size_t b = 0; b < n; ++b) {
        const uint64_t src = b ^ x;
        term += std::conj(a[b]) * pauli_action_phase(t.string, src) * a[src];
      }
    }
    acc += t.coeff * term;
  }
  if (std::abs(acc.imag()) > 1e-10)
    throw std::runtime_error("expectation has a non-negligible imaginary part");
  return acc.real();
}

cplx inner(const StateVector& a, const StateVector& b) {
  check_lengths(a.sites(), b.sites(), "inner");
  return kernels::active().inner(a.amplitudes().data(), b.amplitudes().data(),
                                 a.dim());
}

StateVector apply_string_exponential(const StateVector& psi,
                                     const PauliString& p, double theta) {
  check_lengths(p.length(), psi.sites(), "apply_string_exponential");
  if (p.is_identity()) {
    const cplx phase = std::polar(1.0, -theta);
    auto amps = psi.amplitudes();
    for (auto& v : amps) v *= phase;
    return StateVector(psi.sites(), std::move(amps));
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  auto amps = psi.amplitudes();
  const auto& in = psi.amplitudes();
  const std::size_t n = in.size();
  const uint64_t x = p.x_mask();
  if (x == 0) {
    // diagonal string: pure phases
    for (std::size_t b = 0; b < n; ++b) {
      const double sign = (std::popcount(b & p.z_mask()) & 1) ? -1.0 : 1.0;
      amps[b] = in[b] * cplx{c, -s * sign};
    }
  } else {
    const cplx mis{0.0, -s};
    for (std::size_t b = 0; b < n; ++b) {
      const uint64_t src = b ^ x;
      amps[b] = c * in[b] + mis * pauli_action_phase(p, src) * in[src];
    }
  }
  return StateVector(psi.sites(), std::move(amps));
}

std::vector<double> diagonal_energies(const PauliSum& zz_terms) {
  if (!zz_terms.is_diagonal())
    throw std::invalid_argument("diagonal_energies requires I/Z-only terms");
  const std::size_t n = std::size_t{1} << zz_terms.length();
  std::vector<double> e(n, 0.0);
  for (const auto& t : zz_terms.terms()) {
    const uint64_t z = t.string.z_mask();
    const double c = t.coeff.real();
    for (std::size_t b = 0; b < n; ++b)
      e[b] += (std::popcount(b & z) & 1) ? -c : c;
  }
  return e;
}

StateVector apply_diagonal_evolution(const StateVector& psi,
                                     const PauliSum& zz_terms, double dt) {
  check_lengths(zz_terms.length(), psi.sites(), "apply_diagonal_evolution");
  const auto energies = diagonal_energies(zz_terms);
  std::vector<cplx> phases(energies.size());
  for (std::size_t b = 0; b < phases.size(); ++b)
    phases[b] = std::polar(1.0, -dt * energies[b]);
  auto amps = psi.amplitudes();
  kernels::active().apply_phases(amps.data(), phases.data(), amps.size());
  return StateVector(psi.sites(), std::move(amps));
}

void apply_phases_inplace(StateVector& psi, const std::vector<cplx>& phases) {
  if (phases.size() != psi.dim())
    throw std::invalid_argument("phase array size mismatch");
  kernels::active().apply_phases(psi.mutable_amplitudes().data(), phases.data(),
                                 psi.dim());
}

void apply_rx_site_inplace(StateVector& psi, int site, double theta) {
  if (site < 0 || site >= psi.sites()) throw std::out_of_range("site out of range");
  const std::size_t stride = std::size_t{1} << (psi.sites() - 1 - site);
  kernels::active().apply_rx(psi.mutable_amplitudes().data(), psi.dim(), stride,
                             std::cos(theta), std::sin(theta));
}

}  // namespace annni
