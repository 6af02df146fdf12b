#pragma once

#include "qscatter/potential.hpp"

#include <cstddef>
#include <vector>

namespace qscatter {

struct TransmissionCurve {
  std::vector<double> energies;
  std::vector<double> T;
  std::vector<double> T_b;
  std::vector<double> R;
  std::vector<double> unitarity_defect;
  //! Largest Wronskian drift over all integrations of the sweep.
  double max_wronskian_drift = 0.0;
  PotentialProfile profile;
  NumericsConfig numerics;
};

//! Observables of the excursion T - T_b.
struct CurveStats {
  std::size_t n_local_maxima = 0;
  double max_excursion = 0.0;
  double mean_excursion = 0.0;
  std::size_t crossing_count = 0;
};

struct SweepOptions {
  //! 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

//! n points spaced evenly on [e_min, e_max], endpoints included.
std::vector<double> linear_grid(double e_min, double e_max, std::size_t n);

//! n points spaced evenly on (0, e_max]: e_max * i / n for i = 1..n.
std::vector<double> open_grid(double e_max, std::size_t n);

//! Grid with the midpoint of every interval inserted.
std::vector<double> refine_grid(const std::vector<double> &grid);

//! T(E) for the profile and T_b(E) for profile.without_well() on the grid.
//! Both curves share one integration window and one step so their
//! discretization errors are correlated. Results are assembled by grid
//! index, independent of scheduling.
TransmissionCurve run_sweep(const PotentialProfile &profile,
                            const std::vector<double> &grid,
                            const NumericsConfig &cfg,
                            const SweepOptions &options = {});

CurveStats curve_stats(const TransmissionCurve &curve);

//! Strict three-point maxima of a sequence, with runs of equal values
//! collapsed to a single point first. Endpoints are never maxima.
std::size_t count_local_maxima(const std::vector<double> &values);

//! Sign changes, skipping exact zeros.
std::size_t count_crossings(const std::vector<double> &values);

//! Stats on `grid`, rejected with GridTooCoarse if refining the grid twofold
//! moves n_local_maxima by more than one.
CurveStats checked_curve_stats(const PotentialProfile &profile,
                               const std::vector<double> &grid,
                               const NumericsConfig &cfg,
                               const SweepOptions &options = {});

} // namespace qscatter
