#include <doctest.h>

#include "annni/dense.hpp"
#include "annni/model.hpp"
#include "annni/state.hpp"
#include "annni/symmetry.hpp"
#include "test_util.hpp"

using namespace annni;

TEST_CASE("basis-state expectations") {
  const auto psi = StateVector::basis_state("00");
  PauliSum z0(2), x0(2);
  z0.add(1.0, PauliString::from_word("ZI"));
  x0.add(1.0, PauliString::from_word("XI"));
  CHECK(expectation(z0, psi) == doctest::Approx(1.0));
  CHECK(expectation(x0, psi) == doctest::Approx(0.0));
}

TEST_CASE("expectation rejects non-Hermitian observables and length mismatch") {
  const auto psi = StateVector::basis_state("00");
  PauliSum bad(2);
  bad.add(cplx{0.0, 1.0}, PauliString::from_word("ZI"));
  CHECK_THROWS_AS(expectation(bad, psi), std::invalid_argument);
  PauliSum wrong(3);
  wrong.add(1.0, PauliString::from_word("ZII"));
  CHECK_THROWS_AS(expectation(wrong, psi), std::invalid_argument);
}

TEST_CASE("GHZ+ expectation of H_p matches the dense oracle") {
  const AnnniParams params{4, 0.2, 0.2};
  const auto hp = build_problem(params);
  const auto [plus, minus] = ghz_pair(4);
  const Eigen::MatrixXcd h = to_matrix(hp);
  const Eigen::VectorXcd v = to_vector(plus);
  const double want = (v.adjoint() * h * v)(0).real();
  CHECK(expectation(hp, plus) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("string exponential closed-form examples") {
  SUBCASE("X rotation by pi/2 maps |0> to -i|1>") {
    const auto psi = StateVector::basis_state("00");
    const auto out =
        apply_string_exponential(psi, PauliString::from_word("XI"), M_PI / 2);
    CHECK(std::abs(out.amplitude(0b00)) < 1e-14);
    CHECK(std::abs(out.amplitude(0b10) - cplx{0, -1}) < 1e-14);
  }
  SUBCASE("theta = 0 is the identity") {
    auto gen = testutil::rng(3);
    const auto psi = testutil::random_state(3, gen);
    const auto out =
        apply_string_exponential(psi, PauliString::from_word("XYZ"), 0.0);
    for (uint64_t b = 0; b < psi.dim(); ++b)
      CHECK(std::abs(out.amplitude(b) - psi.amplitude(b)) < 1e-15);
  }
  SUBCASE("ZZ rotation applies parity phases") {
    std::vector<cplx> amps{cplx{1 / std::sqrt(2.0), 0}, cplx{1 / std::sqrt(2.0), 0},
                           cplx{0, 0}, cplx{0, 0}};
    const StateVector psi(2, amps);
    const auto out = apply_string_exponential(psi, PauliString::from_word("ZZ"), 0.3);
    CHECK(std::abs(out.amplitude(0) - amps[0] * std::polar(1.0, -0.3)) < 1e-14);
    CHECK(std::abs(out.amplitude(1) - amps[1] * std::polar(1.0, +0.3)) < 1e-14);
  }
}

TEST_CASE("string exponential matches the dense matrix exponential") {
  auto gen = testutil::rng(17);
  std::uniform_real_distribution<double> theta(-M_PI, M_PI);
  for (int trial = 0; trial < 30; ++trial) {
    const int sites = 2 + static_cast<int>(gen() % 3);
    const auto p = testutil::random_string(sites, gen);
    if (p.is_identity()) continue;
    const auto psi = testutil::random_state(sites, gen);
    const double t = theta(gen);
    const auto out = apply_string_exponential(psi, p, t);
    PauliSum sum(sites);
    sum.add(1.0, p);
    const Eigen::VectorXcd want = testutil::expm_herm(to_matrix(sum), t) * to_vector(psi);
    for (uint64_t b = 0; b < psi.dim(); ++b)
      CHECK(std::abs(out.amplitude(b) - want(static_cast<Eigen::Index>(b))) < 1e-10);
  }
}

TEST_CASE("diagonal evolution examples") {
  PauliSum zz(2);
  zz.add(-1.0, PauliString::from_word("ZZ"));
  SUBCASE("aligned spins pick up exp(+i)") {
    const auto psi = StateVector::basis_state("00");
    const auto out = apply_diagonal_evolution(psi, zz, 1.0);
    CHECK(std::abs(out.amplitude(0) - std::polar(1.0, 1.0)) < 1e-14);
  }
  SUBCASE("dt = 0 is the identity") {
    auto gen = testutil::rng(5);
    const auto psi = testutil::random_state(2, gen);
    const auto out = apply_diagonal_evolution(psi, zz, 0.0);
    for (uint64_t b = 0; b < psi.dim(); ++b)
      CHECK(std::abs(out.amplitude(b) - psi.amplitude(b)) < 1e-15);
  }
  SUBCASE("rejects non-diagonal terms") {
    PauliSum mixed(2);
    mixed.add(1.0, PauliString::from_word("XZ"));
    const auto psi = StateVector::basis_state("00");
    CHECK_THROWS_AS(apply_diagonal_evolution(psi, mixed, 0.1), std::invalid_argument);
  }
}

TEST_CASE("diagonal evolution of the L=4 kappa=0.8 ZZ part matches expm") {
  const AnnniParams params{4, 0.8, 0.0};
  const auto zz = build_problem_diagonal(params);
  auto gen = testutil::rng(9);
  const auto psi = testutil::random_state(4, gen);
  const auto out = apply_diagonal_evolution(psi, zz, 0.02);
  const Eigen::VectorXcd want =
      testutil::expm_herm(to_matrix(zz), 0.02) * to_vector(psi);
  for (uint64_t b = 0; b < psi.dim(); ++b)
    CHECK(std::abs(out.amplitude(b) - want(static_cast<Eigen::Index>(b))) < 1e-12);
}

TEST_CASE("inner product basics") {
  const auto a = StateVector::basis_state("00");
  const auto b = StateVector::basis_state("01");
  CHECK(std::abs(inner(a, a) - cplx{1, 0}) < 1e-15);
  CHECK(std::abs(inner(a, b)) < 1e-15);
  const auto [plus, minus] = ghz_pair(4);
  CHECK(std::abs(inner(plus, minus)) < 1e-15);
}

TEST_CASE("norm is preserved over ten thousand evolution steps") {
  auto gen = testutil::rng(31);
  StateVector psi = testutil::random_state(4, gen);
  PauliSum zz(4);
  zz.add(-1.0, PauliString::from_word("ZZII"));
  zz.add(0.5, PauliString::from_word("IZZI"));
  const auto p = PauliString::from_word("XYIZ");
  std::uniform_real_distribution<double> theta(-1.0, 1.0);
  for (int i = 0; i < 5000; ++i) {
    psi = apply_string_exponential(psi, p, theta(gen));
    psi = apply_diagonal_evolution(psi, zz, theta(gen));
  }
  CHECK(std::abs(psi.norm() - 1.0) < 1e-9);
}

TEST_CASE("expectation is linear in the observable") {
  auto gen = testutil::rng(41);
  const auto psi = testutil::random_state(3, gen);
  const auto a = testutil::random_hermitian_sum(3, 5, gen);
  const auto b = testutil::random_hermitian_sum(3, 5, gen);
  const double alpha = 0.7, beta = -1.3;
  const auto combo = (a * alpha + b * beta).normalized();
  CHECK(expectation(combo, psi) ==
        doctest::Approx(alpha * expectation(a, psi) + beta * expectation(b, psi))
            .epsilon(1e-10));
}

TEST_CASE("binary snapshot round-trips") {
  auto gen = testutil::rng(51);
  const auto psi = testutil::random_state(3, gen);
  const auto back = StateVector::from_bytes(psi.to_bytes());
  CHECK(back.sites() == psi.sites());
  for (uint64_t b = 0; b < psi.dim(); ++b)
    CHECK(back.amplitude(b) == psi.amplitude(b));
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(StateVector(2, std::vector<cplx>(3)), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(2, std::vector<cplx>(4, cplx{1, 0})),
                  std::invalid_argument);
}
