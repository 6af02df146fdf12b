#include "qscatter/sweep.hpp"

#include "qscatter/error.hpp"
#include "qscatter/integrator.hpp"
#include "qscatter/scattering.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

namespace qscatter {

std::vector<double> linear_grid(double e_min, double e_max, std::size_t n) {
  if (n < 2 || !(e_max > e_min))
    throw Error(ErrorCode::InvalidArgument,
                "grid needs at least two points and e_max > e_min");
  std::vector<double> out(n);
  const double step = (e_max - e_min) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = e_min + step * static_cast<double>(i);
  out.back() = e_max;
  return out;
}

std::vector<double> open_grid(double e_max, std::size_t n) {
  if (n < 1 || !(e_max > 0.0))
    throw Error(ErrorCode::InvalidArgument, "open grid needs n >= 1, e_max > 0");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = e_max * static_cast<double>(i + 1) / static_cast<double>(n);
  return out;
}

std::vector<double> refine_grid(const std::vector<double> &grid) {
  std::vector<double> out;
  if (grid.empty())
    return out;
  out.reserve(2 * grid.size() - 1);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    out.push_back(grid[i]);
    out.push_back(0.5 * (grid[i] + grid[i + 1]));
  }
  out.push_back(grid.back());
  return out;
}

TransmissionCurve run_sweep(const PotentialProfile &profile,
                            const std::vector<double> &grid,
                            const NumericsConfig &cfg,
                            const SweepOptions &options) {
  if (grid.empty())
    throw Error(ErrorCode::InvalidArgument, "empty energy grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0))
      throw Error(ErrorCode::NonPositiveEnergy, "grid energies must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw Error(ErrorCode::InvalidArgument,
                  "grid must be strictly increasing");
  }
  profile.validate();
  cfg.validate();

  const std::size_t n = grid.size();
  TransmissionCurve curve;
  curve.energies = grid;
  curve.T.assign(n, 0.0);
  curve.T_b.assign(n, 0.0);
  curve.R.assign(n, 0.0);
  curve.unitarity_defect.assign(n, 0.0);
  curve.profile = profile;
  curve.numerics = cfg;

  const PotentialProfile reference = profile.without_well();
  const bool analytic = profile.family == Family::DeltaPair;
  Window window;
  double h = cfg.h;
  if (!analytic) {
    window = integration_window(profile, cfg);
    // The highest energy has the shortest wavelength.
    h = step_size(profile, grid.back(), window, cfg);
  }

  std::vector<std::optional<std::string>> failures(n);
  std::vector<double> drift(n, 0.0);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        const ScatteringResult full =
            analytic ? transmission(profile, grid[i], cfg)
                     : transmission(profile, grid[i], cfg, window, h);
        const ScatteringResult bare =
            analytic ? transmission(reference, grid[i], cfg)
                     : transmission(reference, grid[i], cfg, window, h);
        curve.T[i] = full.T;
        curve.R[i] = full.R;
        curve.unitarity_defect[i] = full.unitarity_defect;
        curve.T_b[i] = bare.T;
        drift[i] = std::max(full.wronskian_drift, bare.wronskian_drift);
      } catch (const std::exception &e) {
        failures[i] = e.what();
      }
    }
  };

  unsigned threads = options.threads;
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t)
      pool.emplace_back(worker);
    worker();
  }

  std::ostringstream report;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (failures[i]) {
      if (failed < 5)
        report << "\n  E = " << grid[i] << ": " << *failures[i];
      ++failed;
    }
  }
  if (failed > 0) {
    std::ostringstream msg;
    msg << "sweep failed at " << failed << " of " << n << " energies:"
        << report.str();
    throw Error(ErrorCode::SweepFailure, msg.str());
  }
  curve.max_wronskian_drift = *std::max_element(drift.begin(), drift.end());
  return curve;
}

std::size_t count_local_maxima(const std::vector<double> &values) {
  std::vector<double> runs;
  for (double v : values)
    if (runs.empty() || runs.back() != v)
      runs.push_back(v);
  std::size_t count = 0;
  for (std::size_t i = 1; i + 1 < runs.size(); ++i)
    if (runs[i - 1] < runs[i] && runs[i] > runs[i + 1])
      ++count;
  return count;
}

std::size_t count_crossings(const std::vector<double> &values) {
  std::size_t count = 0;
  int last = 0;
  for (double v : values) {
    const int sign = (v > 0.0) - (v < 0.0);
    if (sign == 0)
      continue;
    if (last != 0 && sign != last)
      ++count;
    last = sign;
  }
  return count;
}

CurveStats curve_stats(const TransmissionCurve &curve) {
  std::vector<double> excursion(curve.T.size());
  for (std::size_t i = 0; i < excursion.size(); ++i)
    excursion[i] = curve.T[i] - curve.T_b[i];

  CurveStats stats;
  stats.n_local_maxima = count_local_maxima(excursion);
  stats.crossing_count = count_crossings(excursion);
  double sum = 0.0;
  for (double e : excursion) {
    stats.max_excursion = std::max(stats.max_excursion, std::abs(e));
    sum += std::abs(e);
  }
  if (!excursion.empty())
    stats.mean_excursion = sum / static_cast<double>(excursion.size());
  return stats;
}

CurveStats checked_curve_stats(const PotentialProfile &profile,
                               const std::vector<double> &grid,
                               const NumericsConfig &cfg,
                               const SweepOptions &options) {
  const CurveStats coarse = curve_stats(run_sweep(profile, grid, cfg, options));
  const CurveStats fine =
      curve_stats(run_sweep(profile, refine_grid(grid), cfg, options));
  const auto a = static_cast<long>(coarse.n_local_maxima);
  const auto b = static_cast<long>(fine.n_local_maxima);
  if (std::abs(a - b) > 1) {
    std::ostringstream msg;
    msg << "grid too coarse: refining the grid moved n_local_maxima from " << a
        << " to " << b;
    throw Error(ErrorCode::GridTooCoarse, msg.str());
  }
  return coarse;
}

} // namespace qscatter
