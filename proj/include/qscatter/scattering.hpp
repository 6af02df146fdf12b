#pragma once

#include "qscatter/integrator.hpp"
#include "qscatter/potential.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstddef>

namespace qscatter {

struct ScatteringResult {
  double energy = 0.0;
  double k = 0.0;
  std::complex<double> b_over_a;
  std::complex<double> f_over_a;
  double T = 0.0;
  double R = 0.0;
  double unitarity_defect = 0.0;
  double wronskian_drift = 0.0;
  //! Relative mismatch between |F/A| from the linear solve and from the
  //! Wronskian-reduced closed expression.
  double closed_form_defect = 0.0;
};

//! Above this |T + R - 1| the integration is considered untrustworthy.
inline constexpr double kUnitarityLimit = 1e-6;

//! Matches A e^{ikx} + B e^{-ikx} at window.left and F e^{ikx} at
//! window.right to C1 psi1 + C2 psi2, solving the four conditions for
//! (B, C1, C2, F) with A = 1.
ScatteringResult match_amplitudes(const FundamentalEndpointData &data,
                                  double energy, const Window &window,
                                  const NumericsConfig &cfg);

//! Full pipeline. Delta pairs are answered analytically.
ScatteringResult transmission(const PotentialProfile &profile, double energy,
                              const NumericsConfig &cfg = {});

//! As above but over a caller-chosen window and step; used to give T and
//! T_b identical discretizations.
ScatteringResult transmission(const PotentialProfile &profile, double energy,
                              const NumericsConfig &cfg, const Window &window,
                              double h);

//! Exact propagator of (psi, psi') across a constant potential of length L.
Eigen::Matrix2d segment_transfer_matrix(double potential, double energy,
                                        double length, const NumericsConfig &cfg);

//! Transmission from a product of constant-segment propagators with midpoint
//! sampling. No slice straddles a breakpoint: constant pieces get one slice
//! each and the rest are shared among the varying pieces by length.
double transfer_matrix_T(const PotentialProfile &profile, double energy,
                         std::size_t n_slices, const NumericsConfig &cfg = {});

} // namespace qscatter
