#include <doctest.h>

#include <map>

#include "annni/dense.hpp"
#include "annni/model.hpp"
#include "annni/oracle.hpp"
#include "annni/symmetry.hpp"
#include "test_util.hpp"

using namespace annni;

TEST_CASE("H_p term structure at L=4, kappa=0.2, g=0.2") {
  const auto h = build_problem({4, 0.2, 0.2});
  std::map<std::string, double> by_word;
  for (const auto& t : h.terms()) by_word[t.string.word()] = t.coeff.real();
  // 4 NN bonds at -1, the two doubled NNN bonds at +0.4, 4 X terms at -0.2
  CHECK(h.terms().size() == 10);
  CHECK(by_word.at("ZZII") == doctest::Approx(-1.0));
  CHECK(by_word.at("IZZI") == doctest::Approx(-1.0));
  CHECK(by_word.at("IIZZ") == doctest::Approx(-1.0));
  CHECK(by_word.at("ZIIZ") == doctest::Approx(-1.0));
  CHECK(by_word.at("ZIZI") == doctest::Approx(0.4));
  CHECK(by_word.at("IZIZ") == doctest::Approx(0.4));
  CHECK(by_word.at("XIII") == doctest::Approx(-0.2));
  CHECK(by_word.at("IIIX") == doctest::Approx(-0.2));
}

TEST_CASE("classical ferromagnet ground level") {
  const auto h = build_problem({4, 0.0, 0.0});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_matrix(h));
  CHECK(es.eigenvalues()(0) == doctest::Approx(-4.0));
  CHECK(es.eigenvalues()(1) == doctest::Approx(-4.0));
  CHECK(es.eigenvalues()(2) > -4.0 + 1e-9);
  // the degenerate pair lives on the fully aligned kets
  const auto e0 = expectation(h, StateVector::basis_state("0000"));
  const auto e1 = expectation(h, StateVector::basis_state("1111"));
  CHECK(e0 == doctest::Approx(-4.0));
  CHECK(e1 == doctest::Approx(-4.0));
}

TEST_CASE("L=4 dense minimum matches the reference value -3.2516") {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      to_matrix(build_problem({4, 0.2, 0.2})));
  CHECK(es.eigenvalues()(0) == doctest::Approx(-3.2516).epsilon(1e-4));
}

TEST_CASE("driver Hamiltonian") {
  const auto h = build_driver(2);
  REQUIRE(h.terms().size() == 2);
  for (const auto& t : h.terms()) CHECK(t.coeff == cplx{1.0, 0.0});

  for (int sites : {2, 3, 4}) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_matrix(build_driver(sites)));
    CHECK(es.eigenvalues()(0) == doctest::Approx(-sites));
  }
  // ground eigenvector is |-> tensored
  const auto chi0 = driver_ground(4);
  CHECK(expectation(build_driver(4), chi0) == doctest::Approx(-4.0));
}

TEST_CASE("feedback observable properties") {
  SUBCASE("independent of g") {
    const auto a = feedback_observable({5, 0.3, 0.0});
    const auto b = feedback_observable({5, 0.3, 0.9});
    REQUIRE(a.terms().size() == b.terms().size());
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
      CHECK(a.terms()[i].string == b.terms()[i].string);
      CHECK(std::abs(a.terms()[i].coeff - b.terms()[i].coeff) < 1e-12);
    }
  }
  SUBCASE("dense oracle equality at L=4, kappa=0.5") {
    const AnnniParams params{4, 0.5, 0.3};
    const auto hd = to_matrix(build_driver(4));
    const auto hp = to_matrix(build_problem(params));
    const Eigen::MatrixXcd want = cplx{0, 1} * (hd * hp - hp * hd);
    CHECK((to_matrix(feedback_observable(params)) - want).cwiseAbs().maxCoeff() <
          1e-12);
  }
  SUBCASE("Hermitian with real coefficients") {
    CHECK(feedback_observable({6, 0.4, 0.7}).is_hermitian());
  }
}

TEST_CASE("dt bound arithmetic and monotonicity") {
  CHECK(dt_bound({4, 0.2, 0.2}) == doctest::Approx(1.0 / (4 * 5.6 * 16)));
  CHECK(dt_bound({4, 0.0, 0.0}) == doctest::Approx(3.90625e-3));
  CHECK(dt_bound({4, 0.3, 0.2}) < dt_bound({4, 0.2, 0.2}));
  CHECK(dt_bound({4, 0.2, 0.3}) < dt_bound({4, 0.2, 0.2}));
  // the triangle-inequality bound never exceeds the exact-norm bound
  CHECK(dt_bound({4, 0.2, 0.2}) <= dt_bound({4, 0.2, 0.2}, true) + 1e-15);
}

TEST_CASE("H_p and H_d commute with the chain symmetries") {
  auto gen = testutil::rng(77);
  std::uniform_real_distribution<double> coupling(0.0, 1.0);
  for (int sites : {4, 5, 6}) {
    const AnnniParams params{sites, coupling(gen), coupling(gen)};
    const auto hp = to_matrix(build_problem(params));
    const auto hd = to_matrix(build_driver(sites));
    for (SymKind kind :
         {SymKind::Inversion, SymKind::Reflection, SymKind::Translation}) {
      const SymOp op{kind, sites};
      const Eigen::Index dim = hp.rows();
      Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
      for (Eigen::Index b = 0; b < dim; ++b)
        p(static_cast<Eigen::Index>(op.map_basis(static_cast<uint64_t>(b))), b) = 1.0;
      CHECK((p * hp - hp * p).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((p * hd - hd * p).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("spectrum is real") {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      to_matrix(build_problem({5, 0.7, 0.45})));
  // SelfAdjointEigenSolver returns reals; verify the matrix is Hermitian too
  const auto h = to_matrix(build_problem({5, 0.7, 0.45}));
  CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_problem({2, 0.1, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(build_problem({4, -0.1, 0.1}), std::invalid_argument);
  CHECK_THROWS_AS(build_problem({4, 0.1, -0.1}), std::invalid_argument);
}
