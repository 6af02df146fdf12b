#include "qscatter/closed_form.hpp"

#include "qscatter/error.hpp"

#include <cmath>
#include <numbers>

namespace qscatter {

namespace {

void require_positive_energy(double energy) {
  if (!(energy > 0.0) || !std::isfinite(energy))
    throw Error(ErrorCode::NonPositiveEnergy, "nonpositive energy");
}

} // namespace

DeltaAmplitudes double_delta_amplitudes(double s_left, double s_right, double d,
                                        double energy,
                                        const NumericsConfig &cfg) {
  require_positive_energy(energy);
  if (!(d >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "d must be non-negative");

  using namespace std::complex_literals;
  DeltaAmplitudes out;
  out.k = cfg.wavenumber(energy);
  out.u_w = -cfg.coupling() * s_left;
  out.u_b = cfg.coupling() * s_right;
  out.lambda = std::exp(2.0i * out.k * d);

  // Continuity of psi and the derivative jumps psi'(+) - psi'(-) = u psi
  // (u1 at x = -d, u2 at x = 0), eliminated for B and F.
  const double u1 = cfg.coupling() * s_left;
  const double u2 = cfg.coupling() * s_right;
  const std::complex<double> ik2 = 2.0i * out.k;
  const std::complex<double> denom =
      4.0 * out.k * out.k + ik2 * (u1 + u2) - u1 * u2 * (1.0 - out.lambda);
  out.f_over_a = 4.0 * out.k * out.k / denom;
  out.b_over_a = -(u1 * (ik2 - u2) + out.lambda * u2 * (ik2 + u1)) /
                 (out.lambda * denom);
  return out;
}

DeltaAmplitudes delta_amplitudes(double v_w, double v_b, double d, double energy,
                                 const NumericsConfig &cfg) {
  return double_delta_amplitudes(-v_w, v_b, d, energy, cfg);
}

double delta_barrier_T(double v, double energy, const NumericsConfig &cfg) {
  require_positive_energy(energy);
  // m v^2 / (2 hbar^2) = coupling * v^2 / 4
  return energy / (0.25 * cfg.coupling() * v * v + energy);
}

double scarf2_T(double v0, double delta, double energy) {
  require_positive_energy(energy);
  if (!(delta > 0.0))
    throw Error(ErrorCode::InvalidArgument, "nonpositive energy scale");

  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double k = std::sqrt(energy / delta);
  const std::complex<double> root =
      std::sqrt(std::complex<double>(0.25, v0 / delta));
  const double p = root.real();
  const double q = root.imag();

  const double s = std::sinh(two_pi * k);
  const double c = std::cosh(two_pi * k);
  // For large k both factors are ~cosh; divide through to avoid overflow.
  if (c > 1e150) {
    const double ratio = s / c;
    return ratio * ratio /
           ((1.0 + std::cos(two_pi * p) / c) * (1.0 + std::cosh(two_pi * q) / c));
  }
  return s * s / ((c + std::cos(two_pi * p)) * (c + std::cosh(two_pi * q)));
}

double rectangular_barrier_T(double v, double w, double energy,
                             const NumericsConfig &cfg) {
  require_positive_energy(energy);
  if (v == 0.0 || w == 0.0)
    return 1.0;
  const double excess = energy - v;
  if (excess == 0.0)
    return 1.0 / (1.0 + 0.25 * cfg.coupling() * v * w * w);
  const double q = std::sqrt(cfg.coupling() * std::abs(excess));
  const double s = excess > 0.0 ? std::sin(q * w) : std::sinh(q * w);
  return 1.0 / (1.0 + v * v * s * s / (4.0 * energy * std::abs(excess)));
}

} // namespace qscatter
