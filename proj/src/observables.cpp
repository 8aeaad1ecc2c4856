#include "annni/observables.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "annni/pauli.hpp"

namespace annni {

namespace {

PauliOp to_pauli(SpinComponent mu) {
  switch (mu) {
    case SpinComponent::X: return PauliOp::X;
    case SpinComponent::Y: return PauliOp::Y;
    case SpinComponent::Z: return PauliOp::Z;
  }
  throw std::invalid_argument("bad spin component");
}

}  // namespace

std::vector<std::vector<double>> correlation_matrix(const StateVector& psi,
                                                    SpinComponent mu) {
  const int L = psi.sites();
  const PauliOp op = to_pauli(mu);
  std::vector<std::vector<double>> c(static_cast<std::size_t>(L),
                                     std::vector<double>(static_cast<std::size_t>(L)));
  for (int i = 0; i < L; ++i) {
    for (int j = i; j < L; ++j) {
      double value;
      if (i == j) {
        value = 0.25;  // (S^mu)^2 = 1/4
      } else {
        PauliString s(L);
        s.set_op(i, op);
        s.set_op(j, op);
        PauliSum obs(L);
        obs.add(1.0, s);
        value = 0.25 * expectation(obs, psi);
      }
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value;
      c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = value;
    }
  }
  return c;
}

CorrelationProfile correlation(const StateVector& psi, SpinComponent mu) {
  const int L = psi.sites();
  const auto c = correlation_matrix(psi, mu);
  CorrelationProfile profile{mu, std::vector<double>(static_cast<std::size_t>(L), 0.0)};
  for (int r = 0; r < L; ++r) {
    double acc = 0.0;
    for (int i = 0; i < L; ++i)
      acc += c[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + r) % L)];
    profile.values[static_cast<std::size_t>(r)] = acc / L;
  }
  return profile;
}

StructureFactorProfile structure_factor(const StateVector& psi, SpinComponent mu) {
  const int L = psi.sites();
  const auto c = correlation_matrix(psi, mu);
  // aggregate by periodic separation; exp(iK(i-j)) depends only on (i-j) mod L
  std::vector<double> h(static_cast<std::size_t>(L), 0.0);
  for (int i = 0; i < L; ++i)
    for (int d = 0; d < L; ++d)
      h[static_cast<std::size_t>(d)] +=
          c[static_cast<std::size_t>(i)][static_cast<std::size_t>((i - d + L) % L)];
  StructureFactorProfile out{std::vector<double>(static_cast<std::size_t>(L), 0.0)};
  for (int n = 0; n < L; ++n) {
    const double k = 2.0 * std::numbers::pi * n / L;
    std::complex<double> acc{0.0, 0.0};
    for (int d = 0; d < L; ++d)
      acc += std::polar(1.0, k * d) * h[static_cast<std::size_t>(d)];
    acc /= static_cast<double>(L);
    if (std::abs(acc.imag()) > 1e-10)
      throw std::runtime_error("structure factor has an imaginary residue");
    out.values[static_cast<std::size_t>(n)] = acc.real();
  }
  return out;
}

StructureFactorProfile structure_factor_direct(const StateVector& psi,
                                               SpinComponent mu) {
  const int L = psi.sites();
  const auto c = correlation_matrix(psi, mu);
  StructureFactorProfile out{std::vector<double>(static_cast<std::size_t>(L), 0.0)};
  for (int n = 0; n < L; ++n) {
    const double k = 2.0 * std::numbers::pi * n / L;
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < L; ++i)
      for (int j = 0; j < L; ++j)
        acc += std::polar(1.0, k * (i - j)) *
               c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    acc /= static_cast<double>(L);
    if (std::abs(acc.imag()) > 1e-10)
      throw std::runtime_error("structure factor has an imaginary residue");
    out.values[static_cast<std::size_t>(n)] = acc.real();
  }
  return out;
}

StructureFactorProfile structure_factor_sum(const StateVector& psi) {
  const auto sx = structure_factor(psi, SpinComponent::X);
  const auto sy = structure_factor(psi, SpinComponent::Y);
  const auto sz = structure_factor(psi, SpinComponent::Z);
  StructureFactorProfile out{std::vector<double>(sx.values.size(), 0.0)};
  for (std::size_t n = 0; n < out.values.size(); ++n)
    out.values[n] = sx.values[n] + sy.values[n] + sz.values[n];
  return out;
}

}  // namespace annni
