#include <doctest.h>

#include <cmath>

#include "annni/analysis.hpp"
#include "annni/oracle.hpp"

using namespace annni;

namespace {

GapCurve synthetic_curve(int sites, double g, std::vector<double> xs,
                         std::vector<double> ys) {
  GapCurve c;
  c.sites = sites;
  c.g = g;
  c.kappa_grid = std::move(xs);
  c.scaled_gap = std::move(ys);
  c.valid.assign(c.kappa_grid.size(), true);
  return c;
}

}  // namespace

TEST_CASE("crossing of two synthetic lines") {
  // y = 1 - x against y = x cross at exactly 0.5
  const std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 1.0};
  const auto a = synthetic_curve(4, 0.4, grid, {1.0, 0.75, 0.5, 0.25, 0.0});
  const auto b = synthetic_curve(5, 0.4, grid, {0.0, 0.25, 0.5, 0.75, 1.0});
  // nudge the middle knot off the crossing so the sign change is strict
  auto a2 = a;
  a2.scaled_gap[2] = 0.5 + 1e-9;
  CHECK(find_crossing(a2, b) == doctest::Approx(0.5).epsilon(1e-5));
}

TEST_CASE("crossing input validation") {
  const std::vector<double> grid{0.0, 1.0};
  const auto a = synthetic_curve(4, 0.4, grid, {1.0, 0.0});
  const auto b = synthetic_curve(6, 0.4, grid, {0.0, 1.0});
  CHECK_THROWS_AS(find_crossing(a, b), std::invalid_argument);  // not adjacent
  auto c = synthetic_curve(5, 0.3, grid, {0.0, 1.0});
  CHECK_THROWS_AS(find_crossing(a, c), std::invalid_argument);  // g mismatch
}

TEST_CASE("parallel curves raise NoCrossingError") {
  const std::vector<double> grid{0.0, 0.5, 1.0};
  const auto a = synthetic_curve(4, 0.4, grid, {1.0, 1.0, 1.0});
  const auto b = synthetic_curve(5, 0.4, grid, {2.0, 2.0, 2.0});
  CHECK_THROWS_AS(find_crossing(a, b), NoCrossingError);
}

TEST_CASE("double sign changes raise AmbiguousCrossingError with brackets") {
  const std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 1.0};
  const auto a = synthetic_curve(4, 0.4, grid, {0.0, 0.0, 0.0, 0.0, 0.0});
  const auto b = synthetic_curve(5, 0.4, grid, {-1.0, 1.0, 1.0, -1.0, -1.0});
  try {
    find_crossing(a, b);
    FAIL("expected AmbiguousCrossingError");
  } catch (const AmbiguousCrossingError& e) {
    REQUIRE(e.brackets.size() == 2);
    CHECK(e.brackets[0].first == 0.0);
    CHECK(e.brackets[0].second == 0.25);
    CHECK(e.brackets[1].first == 0.5);
    CHECK(e.brackets[1].second == 0.75);
  }
}

TEST_CASE("invalidated points are excluded from interpolation") {
  const std::vector<double> grid{0.0, 0.25, 0.5, 0.75, 1.0};
  // y = 1.01 - x with a poisoned midpoint, against y = x: crossing at 0.505
  auto a = synthetic_curve(4, 0.4, grid, {1.01, 0.76, 99.0, 0.26, 0.01});
  a.valid[2] = false;  // poisoned value must be ignored
  const auto b = synthetic_curve(5, 0.4, grid, {0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(find_crossing(a, b) == doctest::Approx(0.505).epsilon(1e-4));
}

TEST_CASE("extrapolation recovers an exact 1/L law") {
  std::vector<CrossingPoint> pts;
  for (int L : {4, 5, 6, 7}) pts.push_back({L, 0.3 + 0.8 / L});
  const auto r = extrapolate(pts);
  CHECK(r.kappa_c == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(r.slope == doctest::Approx(0.8).epsilon(1e-10));
  CHECK(r.residual < 1e-12);
}

TEST_CASE("extrapolation input validation") {
  CHECK_THROWS_AS(extrapolate({{4, 0.3}}), std::invalid_argument);
  CHECK_THROWS_AS(extrapolate({{4, 0.3}, {4, 0.35}}), std::invalid_argument);
}

TEST_CASE("grid validation") {
  GapSolverConfig cfg;
  CHECK_THROWS_AS(gap_curve(4, 0.4, {0.3}, cfg), std::invalid_argument);
  CHECK_THROWS_AS(gap_curve(4, 0.4, {0.4, 0.3}, cfg), std::invalid_argument);
}

TEST_CASE("oracle gap curves cross near the L=4/5 transition at g=0.4") {
  std::vector<double> grid;
  for (double k = 0.20; k <= 0.4001; k += 0.025) grid.push_back(k);
  GapSolverConfig cfg;
  const auto a = gap_curve(4, 0.4, grid, cfg);
  const auto b = gap_curve(5, 0.4, grid, cfg);
  const double kappa = find_crossing(a, b);
  CHECK(kappa == doctest::Approx(0.3069).epsilon(2e-3));
  // worker count must not change the assembled curve
  cfg.jobs = 3;
  const auto a3 = gap_curve(4, 0.4, grid, cfg);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(a3.scaled_gap[i] == a.scaled_gap[i]);
}

TEST_CASE("FQA gap curves track the oracle ones in the ferromagnetic regime") {
  std::vector<double> grid{0.25, 0.30, 0.35};
  GapSolverConfig oracle_cfg;
  GapSolverConfig fqa_cfg;
  fqa_cfg.solver = GapSolver::Fqa;
  fqa_cfg.fqa.dt = 0.02;
  fqa_cfg.fqa.layers = 6000;
  fqa_cfg.fqa.early_stop = {{200, 1e-10}};
  const auto want = gap_curve(4, 0.4, grid, oracle_cfg);
  const auto got = gap_curve(4, 0.4, grid, fqa_cfg);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(got.valid[i]);
    CHECK(got.scaled_gap[i] == doctest::Approx(want.scaled_gap[i]).epsilon(5e-2));
  }
}

TEST_CASE("antiphase boundary at L=8, g=0.2 from the sector oracle") {
  const std::vector<double> grid{0.50, 0.55, 0.60, 0.65};
  const double kappa = antiphase_boundary(0.2, grid);
  CHECK(kappa > 0.55);
  CHECK(kappa < 0.60);
}
