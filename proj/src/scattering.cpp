#include "qscatter/scattering.hpp"

#include "qscatter/closed_form.hpp"
#include "qscatter/error.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace qscatter {

namespace {

using cd = std::complex<double>;

bool constant_piece(const PotentialProfile &p, Piece piece) {
  switch (piece) {
  case Piece::Zero:
    return true;
  case Piece::Well:
    return p.family == Family::FiniteComposite && p.well.kind == WellShape::Rectangular;
  case Piece::Barrier:
    return p.barrier == BarrierForm::Rectangular;
  default:
    return false;
  }
}

ScatteringResult from_delta(const DeltaAmplitudes &amp, double energy) {
  ScatteringResult r;
  r.energy = energy;
  r.k = amp.k;
  r.b_over_a = amp.b_over_a;
  r.f_over_a = amp.f_over_a;
  r.T = amp.T();
  r.R = amp.R();
  r.unitarity_defect = std::abs(r.T + r.R - 1.0);
  return r;
}

} // namespace

ScatteringResult match_amplitudes(const FundamentalEndpointData &data,
                                  double energy, const Window &window,
                                  const NumericsConfig &cfg) {
  if (!(energy > 0.0))
    throw Error(ErrorCode::NonPositiveEnergy, "nonpositive energy");
  using namespace std::complex_literals;
  const double k = cfg.wavenumber(energy);
  const cd ik = 1.0i * k;
  const cd in_left = std::exp(ik * window.left);   // e^{ik x_L}
  const cd out_left = std::exp(-ik * window.left); // e^{-ik x_L}
  const cd out_right = std::exp(ik * window.right);

  // Unknowns (B, C1, C2, F) with A = 1.
  Eigen::Matrix4cd m;
  m << out_left, -data.psi1, -data.psi2, 0.0,
      -ik * out_left, -data.psi1_prime, -data.psi2_prime, 0.0,
      0.0, data.phi1, data.phi2, -out_right,
      0.0, data.phi1_prime, data.phi2_prime, -ik * out_right;
  Eigen::Vector4cd rhs(-in_left, -ik * in_left, 0.0, 0.0);

  const Eigen::FullPivLU<Eigen::Matrix4cd> lu(m);
  if (lu.rank() < 4)
    throw Error(ErrorCode::SingularMatching, "singular matching system");
  const Eigen::Vector4cd x = lu.solve(rhs);
  if (!x.allFinite())
    throw Error(ErrorCode::SingularMatching, "singular matching system");

  ScatteringResult r;
  r.energy = energy;
  r.k = k;
  r.b_over_a = x(0);
  r.f_over_a = x(3);
  r.T = std::norm(r.f_over_a);
  r.R = std::norm(r.b_over_a);
  r.unitarity_defect = std::abs(r.T + r.R - 1.0);
  r.wronskian_drift = data.wronskian_drift;

  // |F/A| = 2k / |(phi1' - ik phi1)(psi2' + ik psi2) - (phi2' - ik phi2)(psi1' + ik psi1)|
  // once W[phi1, phi2] = 1 is used.
  const cd p1 = data.phi1_prime - ik * data.phi1;
  const cd p2 = data.phi2_prime - ik * data.phi2;
  const cd q1 = data.psi1_prime + ik * data.psi1;
  const cd q2 = data.psi2_prime + ik * data.psi2;
  const double f_closed = 2.0 * k / std::abs(p1 * q2 - p2 * q1);
  const double f_solved = std::abs(r.f_over_a);
  r.closed_form_defect = std::abs(f_solved - f_closed) / f_solved;

  if (!(r.unitarity_defect <= kUnitarityLimit)) {
    std::ostringstream msg;
    msg << "unitarity violation: |T + R - 1| = " << r.unitarity_defect
        << " at E = " << energy << " (Wronskian drift " << data.wronskian_drift
        << ", step " << data.step << ")";
    throw Error(ErrorCode::UnitarityViolation, msg.str());
  }
  return r;
}

ScatteringResult transmission(const PotentialProfile &profile, double energy,
                              const NumericsConfig &cfg) {
  if (!(energy > 0.0))
    throw Error(ErrorCode::NonPositiveEnergy, "nonpositive energy");
  if (profile.family == Family::DeltaPair) {
    // Reflection swaps which delta the wave meets first.
    const double s_left = profile.mirrored ? profile.v_b : -profile.v_w;
    const double s_right = profile.mirrored ? -profile.v_w : profile.v_b;
    return from_delta(
        double_delta_amplitudes(s_left, s_right, profile.d, energy, cfg), energy);
  }
  const Window window = integration_window(profile, cfg);
  return transmission(profile, energy, cfg, window,
                      step_size(profile, energy, window, cfg));
}

ScatteringResult transmission(const PotentialProfile &profile, double energy,
                              const NumericsConfig &cfg, const Window &window,
                              double h) {
  if (profile.family == Family::DeltaPair)
    return transmission(profile, energy, cfg);
  if (profile.is_null()) {
    if (!(energy > 0.0))
      throw Error(ErrorCode::NonPositiveEnergy, "nonpositive energy");
    ScatteringResult free;
    free.energy = energy;
    free.k = cfg.wavenumber(energy);
    free.f_over_a = 1.0;
    free.T = 1.0;
    return free;
  }
  const auto data = fundamental_pair(profile, energy, window, cfg, h);
  return match_amplitudes(data, energy, window, cfg);
}

Eigen::Matrix2d segment_transfer_matrix(double potential, double energy,
                                        double length,
                                        const NumericsConfig &cfg) {
  const double q2 = cfg.coupling() * (energy - potential);
  Eigen::Matrix2d m;
  if (q2 > 0.0) {
    const double q = std::sqrt(q2);
    const double c = std::cos(q * length), s = std::sin(q * length);
    m << c, s / q, -q * s, c;
  } else if (q2 < 0.0) {
    const double kappa = std::sqrt(-q2);
    const double c = std::cosh(kappa * length), s = std::sinh(kappa * length);
    m << c, s / kappa, kappa * s, c;
  } else {
    m << 1.0, length, 0.0, 1.0;
  }
  return m;
}

double transfer_matrix_T(const PotentialProfile &profile, double energy,
                         std::size_t n_slices, const NumericsConfig &cfg) {
  if (!(energy > 0.0))
    throw Error(ErrorCode::NonPositiveEnergy, "nonpositive energy");
  if (n_slices < 1)
    throw Error(ErrorCode::InvalidArgument, "n_slices must be at least 1");
  const Window window = integration_window(profile, cfg);
  if (window.degenerate())
    return 1.0;

  struct Span {
    double a, b;
    Piece piece;
    std::size_t n = 0;
  };
  std::vector<Span> spans;
  for (const Segment &s : segments(profile)) {
    const double a = std::max(s.lo, window.left);
    const double b = std::min(s.hi, window.right);
    if (a < b)
      spans.push_back({a, b, s.piece});
  }

  const bool piecewise = n_slices >= spans.size();
  if (piecewise) {
    // Constant pieces are propagated exactly by one slice; the rest are
    // shared among the varying pieces by largest remainder.
    double varying = 0.0;
    for (const Span &span : spans)
      if (!constant_piece(profile, span.piece))
        varying += span.b - span.a;
    const double spare = static_cast<double>(n_slices - spans.size());
    std::size_t assigned = 0;
    std::vector<std::pair<double, std::size_t>> remainders;
    for (std::size_t i = 0; i < spans.size(); ++i) {
      spans[i].n = 1;
      if (!constant_piece(profile, spans[i].piece)) {
        const double share = spare * (spans[i].b - spans[i].a) / varying;
        spans[i].n += static_cast<std::size_t>(std::floor(share));
        remainders.emplace_back(share - std::floor(share), i);
      }
      assigned += spans[i].n;
    }
    std::sort(remainders.begin(), remainders.end(),
              [](const auto &x, const auto &y) { return x.first > y.first; });
    for (std::size_t j = 0; !remainders.empty() && assigned < n_slices; ++j, ++assigned)
      ++spans[remainders[j % remainders.size()].second].n;
  } else {
    spans = {{window.left, window.right, Piece::Whole, n_slices}};
  }

  Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
  for (const Span &span : spans) {
    const double width = (span.b - span.a) / static_cast<double>(span.n);
    for (std::size_t i = 0; i < span.n; ++i) {
      const double mid = span.a + (static_cast<double>(i) + 0.5) * width;
      const double v = piecewise ? piece_value(profile, span.piece, mid)
                                 : evaluate(profile, mid);
      m = segment_transfer_matrix(v, energy, width, cfg) * m;
    }
    if (!m.allFinite())
      throw Error(ErrorCode::NonFiniteMatrix, "non-finite matrix product");
  }

  const double k = cfg.wavenumber(energy);
  const double trace = m(0, 0) + m(1, 1);
  const double skew = k * m(0, 1) - m(1, 0) / k;
  return 4.0 / (trace * trace + skew * skew);
}

} // namespace qscatter
