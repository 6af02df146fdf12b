#include "qscatter/integrator.hpp"

#include <numbers>

namespace qscatter {

double step_size(const PotentialProfile &profile, double energy,
                 const Window &window, const NumericsConfig &cfg) {
  if (!cfg.resolve_wavelength)
    return cfg.h;
  const double v_min = minimum_in_window(profile, window);
  const double q = std::sqrt(cfg.coupling() * (energy - v_min));
  if (!(q > 0.0))
    return cfg.h;
  return std::min(cfg.h, 2.0 * std::numbers::pi / q / 500.0);
}

FundamentalEndpointData fundamental_pair(const PotentialProfile &profile,
                                         double energy, const Window &window,
                                         const NumericsConfig &cfg) {
  if (!(energy > 0.0))
    throw Error(ErrorCode::NonPositiveEnergy, "nonpositive energy");
  return fundamental_pair(profile, energy, window, cfg,
                          step_size(profile, energy, window, cfg));
}

FundamentalEndpointData fundamental_pair(const PotentialProfile &profile,
                                         double energy, const Window &window,
                                         const NumericsConfig &cfg, double h) {
  if (!(energy > 0.0))
    throw Error(ErrorCode::NonPositiveEnergy, "nonpositive energy");
  if (window.degenerate() && !profile.is_null())
    throw Error(ErrorCode::DegenerateWindow, "degenerate window");
  if (window.left > 0.0 || window.right < 0.0)
    throw Error(ErrorCode::InvalidArgument, "window must contain the origin");

  const PairState<double> origin(1.0, 0.0, 0.0, 1.0);
  const auto right =
      propagate_pair(profile, energy, 0.0, window.right, origin, h, cfg);
  const auto left =
      propagate_pair(profile, energy, 0.0, window.left, origin, h, cfg);

  FundamentalEndpointData out;
  out.psi1 = left.state(0);
  out.psi1_prime = left.state(1);
  out.psi2 = left.state(2);
  out.psi2_prime = left.state(3);
  out.phi1 = right.state(0);
  out.phi1_prime = right.state(1);
  out.phi2 = right.state(2);
  out.phi2_prime = right.state(3);
  out.wronskian_drift = std::max(left.wronskian_drift, right.wronskian_drift);
  out.step = h;
  out.steps = left.steps + right.steps;
  return out;
}

} // namespace qscatter
