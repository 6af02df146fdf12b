#include "qscatter/potential.hpp"

#include "qscatter/error.hpp"
#include "extremum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace qscatter {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Span searched for extrema of infinite-range pieces; every admissible form
// is below 1e-80 of its peak beyond it.
constexpr double kSearchSpan = 20.0;

void require(bool ok, const std::string &message) {
  if (!ok)
    throw Error(ErrorCode::InvalidArgument, message);
}

bool finite_nonnegative(double v) { return std::isfinite(v) && v >= 0.0; }

// Formula on the unmirrored profile.
double base_piece_value(const PotentialProfile &p, Piece piece, double x) {
  switch (piece) {
  case Piece::Zero:
    return 0.0;
  case Piece::Whole:
    return -p.v_w * barrier_form_value(p.barrier, x + p.d) +
           p.v_b * barrier_form_value(p.barrier, x);
  case Piece::Well:
    switch (p.family) {
    case Family::FiniteComposite:
      return -p.v_w * p.well.formula(x + p.d + 0.5 * p.well.width);
    case Family::ContinuousJoined:
      return p.v_w * barrier_form_value(p.barrier, x + p.d);
    case Family::DiscontinuousJoined:
      return -p.v_w * barrier_form_value(p.barrier, x + p.d);
    default:
      return 0.0;
    }
  case Piece::Barrier:
    if (p.barrier == BarrierForm::Rectangular)
      return p.v_b;
    return p.v_b * barrier_form_value(p.barrier, x);
  }
  return 0.0;
}

std::vector<Segment> base_segments(const PotentialProfile &p) {
  std::vector<Segment> out;
  switch (p.family) {
  case Family::DeltaPair:
    throw Error(ErrorCode::NonEvaluableProfile,
                "non-evaluable singular profile: delta potentials have no "
                "pointwise values");
  case Family::Free:
    out.push_back({-kInf, kInf, Piece::Zero});
    break;
  case Family::SingleSmooth:
    out.push_back({-kInf, kInf, Piece::Whole});
    break;
  case Family::FiniteComposite: {
    const double well_left = -p.d - p.well.width;
    out.push_back({-kInf, well_left, Piece::Zero});
    if (p.well.width > 0.0)
      out.push_back({well_left, -p.d, Piece::Well});
    if (p.d > 0.0)
      out.push_back({-p.d, 0.0, Piece::Zero});
    if (p.barrier == BarrierForm::Rectangular) {
      out.push_back({0.0, p.w_b, Piece::Barrier});
      out.push_back({p.w_b, kInf, Piece::Zero});
    } else {
      out.push_back({0.0, kInf, Piece::Barrier});
    }
    break;
  }
  case Family::ContinuousJoined:
  case Family::DiscontinuousJoined:
    out.push_back({-kInf, -p.d, Piece::Well});
    if (p.d > 0.0)
      out.push_back({-p.d, 0.0, Piece::Zero});
    out.push_back({0.0, kInf, Piece::Barrier});
    break;
  }
  return out;
}

double base_evaluate(const PotentialProfile &p, double x) {
  switch (p.family) {
  case Family::DeltaPair:
    throw Error(ErrorCode::NonEvaluableProfile,
                "non-evaluable singular profile: delta potentials have no "
                "pointwise values");
  case Family::Free:
    return 0.0;
  case Family::SingleSmooth:
    return base_piece_value(p, Piece::Whole, x);
  case Family::FiniteComposite:
    if (x < -p.d - p.well.width)
      return 0.0;
    if (x <= -p.d)
      return base_piece_value(p, Piece::Well, x);
    if (x < 0.0)
      return 0.0;
    if (p.barrier == BarrierForm::Rectangular && x > p.w_b)
      return 0.0;
    return base_piece_value(p, Piece::Barrier, x);
  case Family::ContinuousJoined:
  case Family::DiscontinuousJoined:
    if (x <= -p.d)
      return base_piece_value(p, Piece::Well, x);
    if (x <= 0.0)
      return 0.0;
    return base_piece_value(p, Piece::Barrier, x);
  }
  return 0.0;
}

PotentialProfile unmirrored(PotentialProfile p) {
  p.mirrored = false;
  return p;
}

// Extremum of `sign * V` over the given segments clipped to [lo, hi].
double segment_extremum(const PotentialProfile &p,
                        const std::vector<Segment> &segs, double lo, double hi,
                        double sign) {
  double best = -kInf;
  for (const Segment &s : segs) {
    const double a = std::max(s.lo, lo);
    const double b = std::min(s.hi, hi);
    if (!(a < b))
      continue;
    auto f = [&](double x) { return sign * piece_value(p, s.piece, x); };
    best = std::max(best, detail::maximize_sampled(f, a, b, 2048));
  }
  return sign * best;
}

} // namespace

void NumericsConfig::validate() const {
  require(std::isfinite(mass) && mass > 0.0, "m must be positive");
  require(std::isfinite(hbar) && hbar > 0.0, "hbar must be positive");
  require(std::isfinite(h) && h > 0.0, "h must be positive");
  require(tail_epsilon > 0.0 && tail_epsilon < 1.0,
          "tail_epsilon must lie in (0, 1)");
  require(std::isfinite(max_window) && max_window > 0.0,
          "max_window must be positive");
}

double ProfileShape::operator()(double offset) const {
  if (!(width > 0.0) || std::abs(offset) > 0.5 * width)
    return 0.0;
  return formula(offset);
}

double ProfileShape::formula(double offset) const {
  switch (kind) {
  case WellShape::Rectangular:
    return 1.0;
  case WellShape::Parabolic:
    return 1.0 - 4.0 * offset * offset / (width * width);
  case WellShape::Triangular:
    return 1.0 - 2.0 * std::abs(offset) / width;
  case WellShape::Gaussian:
    return std::exp(-offset * offset / (width * width));
  case WellShape::Exponential:
    return std::exp(-std::abs(offset) / width);
  }
  return 0.0;
}

double barrier_form_value(BarrierForm form, double x) {
  switch (form) {
  case BarrierForm::XGauss:
    return x * std::exp(-x * x);
  case BarrierForm::XQuartic:
    return x * std::exp(-x * x * x * x);
  case BarrierForm::TanhSech:
    return std::tanh(x) / std::cosh(x);
  case BarrierForm::Gauss:
    return std::exp(-x * x);
  case BarrierForm::Sech2: {
    const double s = 1.0 / std::cosh(x);
    return s * s;
  }
  case BarrierForm::Quartic:
    return std::exp(-x * x * x * x);
  case BarrierForm::Rectangular:
    return 1.0;
  }
  return 0.0;
}

bool is_odd_form(BarrierForm form) {
  return form == BarrierForm::XGauss || form == BarrierForm::XQuartic ||
         form == BarrierForm::TanhSech;
}

PotentialProfile PotentialProfile::free() { return PotentialProfile{}; }

PotentialProfile PotentialProfile::delta_pair(double v_w, double v_b, double d) {
  PotentialProfile p;
  p.family = Family::DeltaPair;
  p.v_w = v_w;
  p.v_b = v_b;
  p.d = d;
  p.validate();
  return p;
}

PotentialProfile PotentialProfile::finite_composite(double v_w,
                                                    ProfileShape well, double d,
                                                    double v_b,
                                                    BarrierForm barrier,
                                                    double w_b) {
  PotentialProfile p;
  p.family = Family::FiniteComposite;
  p.v_w = v_w;
  p.well = well;
  p.d = d;
  p.v_b = v_b;
  p.barrier = barrier;
  p.w_b = w_b;
  p.validate();
  return p;
}

PotentialProfile PotentialProfile::continuous_joined(double v_w, double v_b,
                                                     BarrierForm g, double d) {
  PotentialProfile p;
  p.family = Family::ContinuousJoined;
  p.v_w = v_w;
  p.v_b = v_b;
  p.barrier = g;
  p.d = d;
  p.validate();
  return p;
}

PotentialProfile PotentialProfile::discontinuous_joined(double v_w, double v_b,
                                                        BarrierForm f, double d) {
  PotentialProfile p;
  p.family = Family::DiscontinuousJoined;
  p.v_w = v_w;
  p.v_b = v_b;
  p.barrier = f;
  p.d = d;
  p.validate();
  return p;
}

PotentialProfile PotentialProfile::single_smooth(double v_w, double v_b,
                                                 double d, BarrierForm f) {
  PotentialProfile p;
  p.family = Family::SingleSmooth;
  p.v_w = v_w;
  p.v_b = v_b;
  p.d = d;
  p.barrier = f;
  p.validate();
  return p;
}

PotentialProfile PotentialProfile::without_well() const {
  PotentialProfile p = *this;
  p.v_w = 0.0;
  return p;
}

bool PotentialProfile::is_null() const {
  return family == Family::Free || (v_w == 0.0 && v_b == 0.0);
}

void PotentialProfile::validate() const {
  require(finite_nonnegative(v_w), "v_w must be finite and non-negative");
  require(finite_nonnegative(v_b), "v_b must be finite and non-negative");
  require(finite_nonnegative(d), "d must be finite and non-negative");
  switch (family) {
  case Family::FiniteComposite:
    require(std::isfinite(well.width) &&
                (well.width > 0.0 || (well.width == 0.0 && v_w == 0.0)),
            "w_w must be positive");
    if (barrier == BarrierForm::Rectangular)
      require(std::isfinite(w_b) && w_b > 0.0, "w_b must be positive");
    break;
  case Family::ContinuousJoined:
    require(is_odd_form(barrier),
            "barrier_shape of continuous_joined must vanish at the origin "
            "(x_gauss, x_quartic, tanh_sech)");
    break;
  case Family::DiscontinuousJoined:
  case Family::SingleSmooth:
    require(!is_odd_form(barrier) && barrier != BarrierForm::Rectangular,
            "barrier_shape must be one of gauss, sech2, quartic");
    break;
  case Family::DeltaPair:
  case Family::Free:
    break;
  }
}

std::vector<Segment> segments(const PotentialProfile &profile) {
  std::vector<Segment> segs = base_segments(profile);
  if (!profile.mirrored)
    return segs;
  std::vector<Segment> out;
  out.reserve(segs.size());
  for (auto it = segs.rbegin(); it != segs.rend(); ++it)
    out.push_back({-it->hi, -it->lo, it->piece});
  return out;
}

double piece_value(const PotentialProfile &profile, Piece piece, double x) {
  return profile.mirrored ? base_piece_value(profile, piece, -x)
                          : base_piece_value(profile, piece, x);
}

double evaluate(const PotentialProfile &profile, double x) {
  return profile.mirrored ? base_evaluate(profile, -x)
                          : base_evaluate(profile, x);
}

double left_limit(const PotentialProfile &profile, double x) {
  for (const Segment &s : segments(profile))
    if (s.lo < x && x <= s.hi)
      return piece_value(profile, s.piece, x);
  return 0.0;
}

double right_limit(const PotentialProfile &profile, double x) {
  for (const Segment &s : segments(profile))
    if (s.lo <= x && x < s.hi)
      return piece_value(profile, s.piece, x);
  return 0.0;
}

PotentialProfile mirror(const PotentialProfile &profile) {
  PotentialProfile p = profile;
  p.mirrored = !p.mirrored;
  return p;
}

double peak_magnitude(const PotentialProfile &profile,
                      const NumericsConfig &cfg) {
  if (profile.is_null())
    return 0.0;
  const auto segs = segments(profile);
  const double span = std::min(cfg.max_window, profile.d + kSearchSpan);
  return std::max(segment_extremum(profile, segs, -span, span, 1.0),
                  -segment_extremum(profile, segs, -span, span, -1.0));
}

double minimum_in_window(const PotentialProfile &profile, const Window &window) {
  if (profile.is_null() || window.degenerate())
    return 0.0;
  return std::min(0.0, segment_extremum(profile, segments(profile), window.left,
                                        window.right, -1.0));
}

double effective_barrier_height(const PotentialProfile &profile) {
  const PotentialProfile p = unmirrored(profile);
  switch (p.family) {
  case Family::Free:
    return 0.0;
  case Family::DeltaPair:
    return p.v_b;
  case Family::SingleSmooth: {
    auto f = [&](double x) { return base_piece_value(p, Piece::Whole, x); };
    return std::max(0.0, detail::maximize_sampled(f, -kSearchSpan, kSearchSpan,
                                                  8192));
  }
  default: {
    const double hi = p.barrier == BarrierForm::Rectangular ? p.w_b : kSearchSpan;
    auto f = [&](double x) { return base_piece_value(p, Piece::Barrier, x); };
    return std::max(0.0, detail::maximize_sampled(f, 0.0, hi, 4096));
  }
  }
}

namespace {

// Smallest grid-aligned distance D from the origin along `direction` such
// that |V| < threshold at every grid point beyond D, up to the cap.
double tail_extent(const PotentialProfile &p, double threshold, double direction,
                   const NumericsConfig &cfg) {
  const auto n_max = static_cast<long>(std::floor(cfg.max_window / cfg.h));
  if (std::abs(evaluate(p, direction * n_max * cfg.h)) >= threshold) {
    std::ostringstream msg;
    msg << "window cap exceeded: |V(" << direction * cfg.max_window
        << ")| is not below tail_epsilon * max|V|";
    throw Error(ErrorCode::WindowCapExceeded, msg.str());
  }
  for (long n = n_max - 1; n >= 0; --n)
    if (std::abs(evaluate(p, direction * n * cfg.h)) >= threshold)
      return (n + 1) * cfg.h;
  return 0.0;
}

} // namespace

Window integration_window(const PotentialProfile &profile,
                          const NumericsConfig &cfg) {
  cfg.validate();
  if (profile.family == Family::DeltaPair)
    throw Error(ErrorCode::NonEvaluableProfile,
                "non-evaluable singular profile: delta potentials have no "
                "integration window");
  if (profile.is_null())
    return {};

  const PotentialProfile p = unmirrored(profile);
  const double threshold = cfg.tail_epsilon * peak_magnitude(p, cfg);

  Window w;
  if (p.family == Family::FiniteComposite) {
    w.left = -p.d - p.well.width;
    w.right = p.barrier == BarrierForm::Rectangular
                  ? p.w_b
                  : tail_extent(p, threshold, 1.0, cfg);
  } else {
    w.left = -tail_extent(p, threshold, -1.0, cfg);
    w.right = tail_extent(p, threshold, 1.0, cfg);
  }
  if (profile.mirrored)
    w = {-w.right, -w.left};
  return w;
}

PotentialProfile delta_as_rectangle(double strength, double width) {
  require(std::isfinite(width) && width > 0.0, "width must be positive");
  require(finite_nonnegative(strength), "strength must be non-negative");
  PotentialProfile p;
  p.family = Family::FiniteComposite;
  p.v_w = 0.0;
  p.d = 0.0;
  p.well = {WellShape::Rectangular, 0.0};
  p.v_b = strength / width;
  p.barrier = BarrierForm::Rectangular;
  p.w_b = width;
  return p;
}

namespace {

template <typename Enum, std::size_t N>
Enum lookup(std::string_view name,
            const std::array<std::pair<std::string_view, Enum>, N> &table,
            std::string_view what) {
  for (const auto &[key, value] : table)
    if (key == name)
      return value;
  throw Error(ErrorCode::InvalidArgument,
              "unknown " + std::string(what) + " '" + std::string(name) + "'");
}

template <typename Enum, std::size_t N>
std::string_view
reverse_lookup(Enum value,
               const std::array<std::pair<std::string_view, Enum>, N> &table) {
  for (const auto &[key, v] : table)
    if (v == value)
      return key;
  return "?";
}

constexpr std::array<std::pair<std::string_view, Family>, 6> kFamilies{{
    {"delta_pair", Family::DeltaPair},
    {"finite_composite", Family::FiniteComposite},
    {"continuous_joined", Family::ContinuousJoined},
    {"discontinuous_joined", Family::DiscontinuousJoined},
    {"single_smooth", Family::SingleSmooth},
    {"free", Family::Free},
}};

constexpr std::array<std::pair<std::string_view, WellShape>, 5> kShapes{{
    {"rectangular", WellShape::Rectangular},
    {"parabolic", WellShape::Parabolic},
    {"triangular", WellShape::Triangular},
    {"gaussian", WellShape::Gaussian},
    {"exponential", WellShape::Exponential},
}};

constexpr std::array<std::pair<std::string_view, BarrierForm>, 7> kForms{{
    {"x_gauss", BarrierForm::XGauss},
    {"x_quartic", BarrierForm::XQuartic},
    {"tanh_sech", BarrierForm::TanhSech},
    {"gauss", BarrierForm::Gauss},
    {"sech2", BarrierForm::Sech2},
    {"quartic", BarrierForm::Quartic},
    {"rectangular", BarrierForm::Rectangular},
}};

} // namespace

std::string_view to_string(Family family) {
  return reverse_lookup(family, kFamilies);
}
std::string_view to_string(WellShape shape) {
  return reverse_lookup(shape, kShapes);
}
std::string_view to_string(BarrierForm form) {
  return reverse_lookup(form, kForms);
}
Family family_from_string(std::string_view name) {
  return lookup(name, kFamilies, "family");
}
WellShape well_shape_from_string(std::string_view name) {
  return lookup(name, kShapes, "well_shape");
}
BarrierForm barrier_form_from_string(std::string_view name) {
  return lookup(name, kForms, "barrier_shape");
}

std::string describe(const PotentialProfile &p) {
  std::ostringstream out;
  out << to_string(p.family);
  if (p.family != Family::Free) {
    out << " v_w=" << p.v_w << " v_b=" << p.v_b << " d=" << p.d;
    if (p.family == Family::FiniteComposite)
      out << " well_shape=" << to_string(p.well.kind) << " w_w=" << p.well.width;
    if (p.family != Family::DeltaPair) {
      out << " barrier_shape=" << to_string(p.barrier);
      if (p.barrier == BarrierForm::Rectangular)
        out << " w_b=" << p.w_b;
    }
  }
  if (p.mirrored)
    out << " (mirrored)";
  return out.str();
}

} // namespace qscatter
