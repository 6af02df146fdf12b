#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace qscatter {

//! Physical constants and discretization knobs shared by every solver.
//! The defaults realize 2m = hbar^2 = 1, so energies and lengths are in the
//! same arbitrary units used throughout the figure configurations.
struct NumericsConfig {
  double mass = 0.5;
  double hbar = 1.0;
  //! Largest RK4 step, and the grid on which integration windows are aligned.
  double h = 1e-3;
  //! When set, the step is further limited by the shortest local
  //! de Broglie wavelength inside the window (see step_size).
  bool resolve_wavelength = true;
  double tail_epsilon = 1e-8;
  double max_window = 60.0;

  //! 2m / hbar^2, the factor multiplying (E - V) in the Schroedinger equation.
  double coupling() const { return 2.0 * mass / (hbar * hbar); }
  double wavenumber(double energy) const {
    return std::sqrt(coupling() * energy);
  }

  void validate() const;
  bool operator==(const NumericsConfig &) const = default;
};

enum class Family {
  DeltaPair,           // -v_w delta(x+d) + v_b delta(x)
  FiniteComposite,     // finite-support well, gap of length d, barrier on x >= 0
  ContinuousJoined,    // v_w g(x+d) left of the gap, v_b g(x) right of it
  DiscontinuousJoined, // -v_w f(x+d) left of the gap, v_b f(x) right of it
  SingleSmooth,        // -v_w f(x+d) + v_b f(x)
  Free,
};

enum class WellShape { Rectangular, Parabolic, Triangular, Gaussian, Exponential };

//! Unit-height well profile V_w, centred on zero and supported on
//! [-width/2, width/2]. Gaussian and exponential shapes use the width as
//! their decay scale and are clipped to the same support.
struct ProfileShape {
  WellShape kind = WellShape::Rectangular;
  double width = 1.0;

  double operator()(double offset) const;
  //! Same without the support cut. Segment endpoints computed in floating
  //! point can land a rounding error outside the support, where operator()
  //! would report zero.
  double formula(double offset) const;
  bool operator==(const ProfileShape &) const = default;
};

//! Named smooth forms used for barriers (and, for the joined and smooth
//! families, for the well as well).
enum class BarrierForm {
  XGauss,      // x e^{-x^2}
  XQuartic,    // x e^{-x^4}
  TanhSech,    // tanh x sech x
  Gauss,       // e^{-x^2}
  Sech2,       // sech^2 x
  Quartic,     // e^{-x^4}
  Rectangular, // 1 on [0, w_b]
};

double barrier_form_value(BarrierForm form, double x);
//! g-type forms vanish at the origin; f-type forms peak there.
bool is_odd_form(BarrierForm form);

struct PotentialProfile {
  Family family = Family::Free;
  double v_w = 0.0;
  double v_b = 0.0;
  double d = 0.0;
  ProfileShape well{};
  BarrierForm barrier = BarrierForm::XGauss;
  double w_b = 1.0;
  //! Reflected through x -> -x.
  bool mirrored = false;

  static PotentialProfile free();
  static PotentialProfile delta_pair(double v_w, double v_b, double d);
  static PotentialProfile finite_composite(double v_w, ProfileShape well,
                                           double d, double v_b,
                                           BarrierForm barrier = BarrierForm::XGauss,
                                           double w_b = 1.0);
  static PotentialProfile continuous_joined(double v_w, double v_b,
                                            BarrierForm g = BarrierForm::XGauss,
                                            double d = 0.0);
  static PotentialProfile discontinuous_joined(double v_w, double v_b,
                                               BarrierForm f = BarrierForm::Gauss,
                                               double d = 0.0);
  static PotentialProfile single_smooth(double v_w, double v_b, double d,
                                        BarrierForm f = BarrierForm::Gauss);

  //! The unperturbed barrier: same profile with the well switched off.
  PotentialProfile without_well() const;
  //! True when the potential vanishes identically.
  bool is_null() const;

  void validate() const;
  bool operator==(const PotentialProfile &) const = default;
};

enum class Piece { Zero, Well, Barrier, Whole };

//! A maximal interval on which the potential is given by one smooth formula.
struct Segment {
  double lo;
  double hi;
  Piece piece;
};

//! Ordered, gap-free cover of the real line. Breakpoints between segments
//! are exactly the places where V or one of its derivatives may jump.
std::vector<Segment> segments(const PotentialProfile &profile);

//! The smooth formula behind `piece`, evaluated at x (including endpoints).
double piece_value(const PotentialProfile &profile, Piece piece, double x);

double evaluate(const PotentialProfile &profile, double x);
double left_limit(const PotentialProfile &profile, double x);
double right_limit(const PotentialProfile &profile, double x);

PotentialProfile mirror(const PotentialProfile &profile);

struct Window {
  double left = 0.0;
  double right = 0.0;

  double length() const { return right - left; }
  bool degenerate() const { return left == right; }
  bool operator==(const Window &) const = default;
};

//! Interval outside of which the potential is treated as zero.
Window integration_window(const PotentialProfile &profile,
                          const NumericsConfig &cfg);

//! Rectangle of height strength/width on [0, width], same area as the delta.
PotentialProfile delta_as_rectangle(double strength, double width);

//! Maximum of the barrier piece (v_m). Differs from v_b for shaped barriers.
double effective_barrier_height(const PotentialProfile &profile);

//! max |V(x)| over the real line.
double peak_magnitude(const PotentialProfile &profile, const NumericsConfig &cfg);

//! min V(x) over [window.left, window.right].
double minimum_in_window(const PotentialProfile &profile, const Window &window);

std::string_view to_string(Family family);
std::string_view to_string(WellShape shape);
std::string_view to_string(BarrierForm form);
Family family_from_string(std::string_view name);
WellShape well_shape_from_string(std::string_view name);
BarrierForm barrier_form_from_string(std::string_view name);

std::string describe(const PotentialProfile &profile);

} // namespace qscatter
