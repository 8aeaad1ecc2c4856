#include <doctest.h>

#include <random>
#include <vector>

#include "annni/kernels.hpp"

using namespace annni;
using cd = std::complex<double>;

namespace {

std::vector<cd> random_vec(std::size_t n, std::mt19937_64& gen) {
  std::normal_distribution<double> dist;
  std::vector<cd> v(n);
  for (auto& x : v) x = cd{dist(gen), dist(gen)};
  return v;
}

}  // namespace

TEST_CASE("scalar and AVX2 kernels are equivalent") {
  const kernels::Ops* simd = kernels::avx2();
  if (simd == nullptr) {
    MESSAGE("AVX2 backend unavailable on this host, skipping");
    return;
  }
  const kernels::Ops& ref = kernels::scalar();
  std::mt19937_64 gen(99);

  for (std::size_t n : {4ul, 16ul, 64ul, 256ul, 1024ul}) {
    const auto psi0 = random_vec(n, gen);
    const auto phases = random_vec(n, gen);
    std::vector<double> energy(n);
    std::normal_distribution<double> dist;
    for (auto& e : energy) e = dist(gen);
    const auto other = random_vec(n, gen);

    SUBCASE("apply_phases") {}
    {
      auto a = psi0, b = psi0;
      ref.apply_phases(a.data(), phases.data(), n);
      simd->apply_phases(b.data(), phases.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12);
    }
    {
      for (std::size_t stride = 1; stride < n; stride *= 2) {
        auto a = psi0, b = psi0;
        ref.apply_rx(a.data(), n, stride, 0.8, 0.6);
        simd->apply_rx(b.data(), n, stride, 0.8, 0.6);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12);
      }
    }
    CHECK(ref.diag_expectation(psi0.data(), energy.data(), n) ==
          doctest::Approx(simd->diag_expectation(psi0.data(), energy.data(), n))
              .epsilon(1e-12));
    CHECK(std::abs(ref.inner(psi0.data(), other.data(), n) -
                   simd->inner(psi0.data(), other.data(), n)) < 1e-10);
    CHECK(ref.norm_sqr(psi0.data(), n) ==
          doctest::Approx(simd->norm_sqr(psi0.data(), n)).epsilon(1e-12));
  }
}

TEST_CASE("active backend is one of the known implementations") {
  const kernels::Ops& a = kernels::active();
  CHECK((std::string(a.name) == "scalar" || std::string(a.name) == "avx2"));
}

TEST_CASE("apply_rx rotates a two-level pair correctly") {
  // theta = pi/2 on a single qubit: |0> -> -i|1>
  std::vector<cd> psi{cd{1, 0}, cd{0, 0}};
  const double c = std::cos(M_PI / 2), s = std::sin(M_PI / 2);
  kernels::active().apply_rx(psi.data(), 2, 1, c, s);
  CHECK(std::abs(psi[0]) < 1e-15);
  CHECK(std::abs(psi[1] - cd{0, -1}) < 1e-15);
}
