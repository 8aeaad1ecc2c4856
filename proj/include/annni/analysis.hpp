#pragma once

#include <stdexcept>
#include <vector>

#include "annni/fqa.hpp"
#include "annni/model.hpp"
#include "annni/symmetry.hpp"

namespace annni {

enum class GapSolver { Oracle, Fqa };

struct GapSolverConfig {
  GapSolver solver = GapSolver::Oracle;
  FqaConfig fqa;   // used when solver == Fqa (GHZ+/- initializations)
  int jobs = 1;    // worker threads across grid points
};

/// L*(E1 - E0) as a function of kappa at fixed g.
struct GapCurve {
  int sites = 0;
  double g = 0.0;
  std::vector<double> kappa_grid;
  std::vector<double> scaled_gap;
  std::vector<bool> valid;  // false where an FQA run was non-monotone
  GapSolver solver = GapSolver::Oracle;
};

struct NoCrossingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AmbiguousCrossingError : std::runtime_error {
  std::vector<std::pair<double, double>> brackets;
  AmbiguousCrossingError(const std::string& what,
                         std::vector<std::pair<double, double>> b)
      : std::runtime_error(what), brackets(std::move(b)) {}
};

GapCurve gap_curve(int sites, double g, const std::vector<double>& kappa_grid,
                   const GapSolverConfig& config);

/// Crossing kappa* of two adjacent-size scaled-gap curves (b.sites must be
/// a.sites + 1). Piecewise-linear interpolation, bisection to 1e-6.
double find_crossing(const GapCurve& a, const GapCurve& b);

struct CrossingPoint {
  int sites;  // the smaller L of the pair
  double kappa_star;
};

struct ExtrapolationResult {
  std::vector<CrossingPoint> crossings;
  double kappa_c = 0.0;
  double slope = 0.0;
  double residual = 0.0;
};

/// Least-squares line kappa*(1/L) = kappa_c + slope/L. Needs >= 2 points.
ExtrapolationResult extrapolate(const std::vector<CrossingPoint>& crossings);

/// Level-crossing kappa of the lowest sector energies of two labeled sectors
/// at fixed g. With an FqaConfig the energies come from FQA runs initialized
/// at each sector's chi_1 state; otherwise from the sector-spectrum oracle.
double sector_level_crossing(int sites, double g,
                             const std::vector<double>& kappa_grid,
                             const SectorLabel& sector_a,
                             const SectorLabel& sector_b,
                             const FqaConfig* fqa_config = nullptr,
                             int jobs = 1);

/// Antiphase-boundary estimate at L = 8 from the level crossing of sectors
/// (1,-,1,7) and (1,1,0,-).
double antiphase_boundary(double g, const std::vector<double>& kappa_grid,
                          const FqaConfig* fqa_config = nullptr, int sites = 8,
                          int jobs = 1);

}  // namespace annni
