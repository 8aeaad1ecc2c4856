#include "annni/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include "annni/oracle.hpp"

namespace annni {

namespace {

/// Deterministic parallel map over grid indices: results land by index, so
/// the assembled curve does not depend on thread scheduling.
void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  std::atomic<std::size_t> next{0};
  const int n = std::min<int>(jobs, static_cast<int>(count));
  for (int t = 0; t < n; ++t)
    workers.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        body(i);
    });
  for (auto& w : workers) w.join();
}

void check_grid(const std::vector<double>& grid) {
  if (grid.size() < 2) throw std::invalid_argument("kappa grid needs >= 2 points");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw std::invalid_argument("kappa grid must be ascending");
}

double lerp_at(const std::vector<double>& xs, const std::vector<double>& ys,
               double x) {
  const auto it = std::lower_bound(xs.begin(), xs.end(), x);
  if (it == xs.begin()) return ys.front();
  if (it == xs.end()) return ys.back();
  const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
  const std::size_t lo = hi - 1;
  const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
  return ys[lo] + t * (ys[hi] - ys[lo]);
}

/// Root of the difference of two piecewise-linear curves over their shared
/// kappa range; exactly one sign change required.
double crossing_of(const std::vector<double>& xa, const std::vector<double>& ya,
                   const std::vector<double>& xb, const std::vector<double>& yb) {
  const double lo = std::max(xa.front(), xb.front());
  const double hi = std::min(xa.back(), xb.back());
  if (lo >= hi) throw NoCrossingError("curves have no overlapping kappa range");

  // evaluate the difference on the union of knots inside the overlap
  std::vector<double> knots;
  for (double x : xa)
    if (x >= lo && x <= hi) knots.push_back(x);
  for (double x : xb)
    if (x >= lo && x <= hi) knots.push_back(x);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  auto diff = [&](double x) { return lerp_at(xa, ya, x) - lerp_at(xb, yb, x); };
  std::vector<std::pair<double, double>> brackets;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double d0 = diff(knots[i]);
    const double d1 = diff(knots[i + 1]);
    if (d0 * d1 < 0.0) brackets.emplace_back(knots[i], knots[i + 1]);
  }
  if (brackets.empty()) throw NoCrossingError("scaled-gap curves do not cross");
  if (brackets.size() > 1)
    throw AmbiguousCrossingError("multiple sign changes in the overlap", brackets);

  auto [a, b] = brackets.front();
  double fa = diff(a);
  while (b - a > 1e-6) {
    const double mid = 0.5 * (a + b);
    const double fm = diff(mid);
    if ((fa <= 0.0) == (fm <= 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

double fqa_energy(const AnnniParams& params, const FqaConfig& config,
                  const StateVector& initial, bool* monotone) {
  const RunRecord record = run(params, config, initial);
  if (monotone) *monotone = record.monotonic;
  return record.converged_energy;
}

}  // namespace

GapCurve gap_curve(int sites, double g, const std::vector<double>& kappa_grid,
                   const GapSolverConfig& config) {
  check_grid(kappa_grid);
  GapCurve curve{sites, g, kappa_grid,
                 std::vector<double>(kappa_grid.size(), 0.0),
                 std::vector<bool>(kappa_grid.size(), true), config.solver};
  if (config.solver == GapSolver::Oracle) {
    parallel_for(kappa_grid.size(), config.jobs, [&](std::size_t i) {
      const auto [e0, e1] = ground_gap({sites, kappa_grid[i], g});
      curve.scaled_gap[i] = sites * (e1 - e0);
    });
  } else {
    const auto [plus, minus] = ghz_pair(sites);
    parallel_for(kappa_grid.size(), config.jobs, [&](std::size_t i) {
      const AnnniParams params{sites, kappa_grid[i], g};
      bool ok0 = true, ok1 = true;
      const double e0 = fqa_energy(params, config.fqa, plus, &ok0);
      const double e1 = fqa_energy(params, config.fqa, minus, &ok1);
      curve.scaled_gap[i] = sites * (e1 - e0);
      curve.valid[i] = ok0 && ok1;
    });
  }
  return curve;
}

double find_crossing(const GapCurve& a, const GapCurve& b) {
  if (b.sites != a.sites + 1)
    throw std::invalid_argument("find_crossing needs adjacent sizes L and L+1");
  if (a.g != b.g) throw std::invalid_argument("find_crossing needs matching g");
  auto filtered = [](const GapCurve& c) {
    std::pair<std::vector<double>, std::vector<double>> out;
    for (std::size_t i = 0; i < c.kappa_grid.size(); ++i)
      if (c.valid[i]) {
        out.first.push_back(c.kappa_grid[i]);
        out.second.push_back(c.scaled_gap[i]);
      }
    return out;
  };
  const auto [xa, ya] = filtered(a);
  const auto [xb, yb] = filtered(b);
  if (xa.size() < 2 || xb.size() < 2)
    throw NoCrossingError("too few valid points to interpolate");
  return crossing_of(xa, ya, xb, yb);
}

ExtrapolationResult extrapolate(const std::vector<CrossingPoint>& crossings) {
  if (crossings.size() < 2)
    throw std::invalid_argument("extrapolation needs >= 2 crossings");
  // least squares for kappa* = kappa_c + slope * (1/L)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(crossings.size());
  for (const auto& c : crossings) {
    const double x = 1.0 / c.sites;
    sx += x;
    sy += c.kappa_star;
    sxx += x * x;
    sxy += x * c.kappa_star;
  }
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-15)
    throw std::invalid_argument("crossings need distinct chain sizes");
  ExtrapolationResult out;
  out.crossings = crossings;
  out.slope = (n * sxy - sx * sy) / denom;
  out.kappa_c = (sy - out.slope * sx) / n;
  double ss = 0;
  for (const auto& c : crossings) {
    const double fit = out.kappa_c + out.slope / c.sites;
    ss += (c.kappa_star - fit) * (c.kappa_star - fit);
  }
  out.residual = std::sqrt(ss / n);
  return out;
}

double sector_level_crossing(int sites, double g,
                             const std::vector<double>& kappa_grid,
                             const SectorLabel& sector_a,
                             const SectorLabel& sector_b,
                             const FqaConfig* fqa_config, int jobs) {
  check_grid(kappa_grid);
  std::vector<double> ea(kappa_grid.size()), eb(kappa_grid.size());
  if (fqa_config == nullptr) {
    parallel_for(kappa_grid.size(), jobs, [&](std::size_t i) {
      const AnnniParams params{sites, kappa_grid[i], g};
      ea[i] = sector_spectrum(params, sector_a).eigenvalues.front();
      eb[i] = sector_spectrum(params, sector_b).eigenvalues.front();
    });
  } else {
    const StateVector chi_a = chi_state(sites, 1, sector_a);
    const StateVector chi_b = chi_state(sites, 1, sector_b);
    parallel_for(kappa_grid.size(), jobs, [&](std::size_t i) {
      const AnnniParams params{sites, kappa_grid[i], g};
      ea[i] = fqa_energy(params, *fqa_config, chi_a, nullptr);
      eb[i] = fqa_energy(params, *fqa_config, chi_b, nullptr);
    });
  }
  return crossing_of(kappa_grid, ea, kappa_grid, eb);
}

double antiphase_boundary(double g, const std::vector<double>& kappa_grid,
                          const FqaConfig* fqa_config, int sites, int jobs) {
  // paramagnetic-side vs antiphase-side first-excited sectors
  const SectorLabel para{1, std::nullopt, 1, 7};
  const SectorLabel anti{1, 1, 0, std::nullopt};
  return sector_level_crossing(sites, g, kappa_grid, para, anti, fqa_config, jobs);
}

}  // namespace annni
