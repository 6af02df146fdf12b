#pragma once

#include "qscatter/error.hpp"
#include "qscatter/potential.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace qscatter {

//! One solution of y' = z, z' = -(2m/hbar^2)(E - V(x)) y.
template <typename Scalar> struct OdeState {
  Scalar x;
  Scalar y;
  Scalar z;
};

//! (psi1, psi1', psi2, psi2') for the two fundamental solutions carried
//! through the same steps.
template <typename Scalar> using PairState = Eigen::Matrix<Scalar, 4, 1>;

template <typename Scalar> Scalar wronskian(const PairState<Scalar> &s) {
  return s(0) * s(3) - s(1) * s(2);
}

//! Classical fourth-order Runge-Kutta step for y' = f(x, y). Every stage
//! advances the whole state vector consistently.
template <typename Vec, typename Rhs>
Vec rk4_advance(const Vec &y, double x, double h, const Rhs &f) {
  const Vec k1 = f(x, y);
  const Vec k2 = f(x + 0.5 * h, Vec(y + (0.5 * h) * k1));
  const Vec k3 = f(x + 0.5 * h, Vec(y + (0.5 * h) * k2));
  const Vec k4 = f(x + h, Vec(y + h * k3));
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

//! Single RK4 step of one solution, sampling the profile pointwise.
template <typename Scalar>
OdeState<Scalar> rk4_step(const OdeState<Scalar> &state, double h, double energy,
                          const PotentialProfile &profile,
                          const NumericsConfig &cfg) {
  if (h == 0.0)
    throw Error(ErrorCode::InvalidArgument, "step must be nonzero");
  using Vec = Eigen::Matrix<Scalar, 2, 1>;
  const Scalar c = cfg.coupling();
  auto rhs = [&](double x, const Vec &s) {
    return Vec(s(1), -c * (Scalar(energy) - Scalar(evaluate(profile, x))) * s(0));
  };
  const Vec next = rk4_advance(Vec(state.y, state.z), double(state.x), h, rhs);
  if (!next.allFinite())
    throw Error(ErrorCode::NonFiniteState, "non-finite state");
  return {state.x + Scalar(h), next(0), next(1)};
}

//! Result of carrying a pair of solutions across an interval.
template <typename Scalar> struct Propagation {
  PairState<Scalar> state;
  //! max |W - W0| over every step, W0 the Wronskian of the initial data.
  Scalar wronskian_drift = 0;
  std::size_t steps = 0;
};

//! Integrates both solutions from `from` to `to` (either direction),
//! restarting the step pattern at every potential breakpoint so that each
//! RK4 stage only ever sees one smooth piece. Steps never exceed `h`.
template <typename Scalar>
Propagation<Scalar> propagate_pair(const PotentialProfile &profile,
                                   double energy, double from, double to,
                                   const PairState<Scalar> &initial, double h,
                                   const NumericsConfig &cfg) {
  if (!(h > 0.0))
    throw Error(ErrorCode::InvalidArgument, "step must be positive");
  Propagation<Scalar> out{initial, Scalar(0), 0};
  if (from == to)
    return out;

  const Scalar c = cfg.coupling();
  const Scalar w0 = wronskian(initial);
  const double dir = to > from ? 1.0 : -1.0;
  const double lo = std::min(from, to);
  const double hi = std::max(from, to);

  auto segs = segments(profile);
  if (dir < 0.0)
    std::reverse(segs.begin(), segs.end());

  for (const Segment &seg : segs) {
    const double a = std::max(seg.lo, lo);
    const double b = std::min(seg.hi, hi);
    if (!(a < b))
      continue;
    const double start = dir > 0.0 ? a : b;
    const double length = b - a;
    const auto n = static_cast<std::size_t>(
        std::max(1.0, std::ceil(length / h * (1.0 - 1e-12))));
    const double step = dir * length / static_cast<double>(n);

    auto rhs = [&](double x, const PairState<Scalar> &s) {
      const Scalar q = -c * (Scalar(energy) - Scalar(piece_value(profile, seg.piece, x)));
      return PairState<Scalar>(s(1), q * s(0), s(3), q * s(2));
    };
    for (std::size_t i = 0; i < n; ++i) {
      const double x = start + step * static_cast<double>(i);
      out.state = rk4_advance(out.state, x, step, rhs);
      if (!out.state.allFinite())
        throw Error(ErrorCode::NonFiniteState, "non-finite state");
      using std::abs;
      out.wronskian_drift =
          std::max(out.wronskian_drift, Scalar(abs(wronskian(out.state) - w0)));
    }
    out.steps += n;
  }
  return out;
}

//! Endpoint values of psi1 (psi1(0)=1, psi1'(0)=0) and psi2 (psi2(0)=0,
//! psi2'(0)=1). psi* are taken at the left end of the window, phi* at the
//! right end.
struct FundamentalEndpointData {
  double psi1 = 1.0, psi1_prime = 0.0, psi2 = 0.0, psi2_prime = 1.0;
  double phi1 = 1.0, phi1_prime = 0.0, phi2 = 0.0, phi2_prime = 1.0;
  double wronskian_drift = 0.0;
  double step = 0.0;
  std::size_t steps = 0;
};

//! Step actually used for an energy: cfg.h, optionally limited to 1/500 of
//! the shortest local wavelength 2 pi hbar / sqrt(2m (E - V_min)). RK4 loses
//! about (q h)^6 / 72 of the Wronskian per step, so deep wells need the
//! tighter bound.
double step_size(const PotentialProfile &profile, double energy,
                 const Window &window, const NumericsConfig &cfg);

FundamentalEndpointData fundamental_pair(const PotentialProfile &profile,
                                         double energy, const Window &window,
                                         const NumericsConfig &cfg);

//! Same, with an explicit step (bypassing step_size).
FundamentalEndpointData fundamental_pair(const PotentialProfile &profile,
                                         double energy, const Window &window,
                                         const NumericsConfig &cfg, double h);

} // namespace qscatter
