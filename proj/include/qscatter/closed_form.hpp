#pragma once

#include "qscatter/potential.hpp"

#include <complex>

namespace qscatter {

//! Exact plane-wave amplitudes for -v_w delta(x+d) + v_b delta(x), with the
//! incident wave normalised to A = 1 and psi = A e^{ikx} + B e^{-ikx} on the
//! left, F e^{ikx} on the right.
struct DeltaAmplitudes {
  std::complex<double> b_over_a;
  std::complex<double> f_over_a;
  double k = 0.0;
  double u_w = 0.0; // 2m v_w / hbar^2
  double u_b = 0.0; // 2m v_b / hbar^2
  std::complex<double> lambda; // e^{2ikd}

  double T() const { return std::norm(f_over_a); }
  double R() const { return std::norm(b_over_a); }
};

//! General pair: s_left delta(x+d) + s_right delta(x). u_w and u_b of the
//! result hold -coupling*s_left and coupling*s_right.
DeltaAmplitudes double_delta_amplitudes(double s_left, double s_right, double d,
                                        double energy,
                                        const NumericsConfig &cfg = {});

DeltaAmplitudes delta_amplitudes(double v_w, double v_b, double d, double energy,
                                 const NumericsConfig &cfg = {});

//! Transmission through a single delta of strength v; identical for a well
//! and a barrier.
double delta_barrier_T(double v, double energy, const NumericsConfig &cfg = {});

//! Transmission through V0 tanh(x/a) sech(x/a), with Delta = hbar^2/(2 m a^2).
double scarf2_T(double v0, double delta, double energy);

//! Textbook rectangular barrier of height v and width w.
double rectangular_barrier_T(double v, double w, double energy,
                             const NumericsConfig &cfg = {});

} // namespace qscatter
