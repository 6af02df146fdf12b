#include "qscatter/figures.hpp"

#include "qscatter/error.hpp"
#include "qscatter/sweep.hpp"

#include <algorithm>

namespace qscatter {

namespace {

constexpr std::size_t kPoints = 500;
constexpr double kShapedBarrier = 11.5;

struct Composite {
  double v_w, d, w_w;
};

FigureCurve composite(WellShape shape, Composite c, std::string label = {}) {
  return {std::move(label),
          PotentialProfile::finite_composite(c.v_w, {shape, c.w_w}, c.d,
                                             kShapedBarrier, BarrierForm::XGauss),
          open_grid(10.0 * shaped_barrier_height(), kPoints)};
}

} // namespace

double shaped_barrier_height() {
  static const double v_m = effective_barrier_height(
      PotentialProfile::finite_composite(0.0, {WellShape::Rectangular, 1.0}, 0.0,
                                         kShapedBarrier, BarrierForm::XGauss));
  return v_m;
}

std::vector<std::string> figure_names() {
  return {"fig2a", "fig2b", "fig2c", "fig2d", "fig3a", "fig3b", "fig3c",
          "fig3d", "fig4a", "fig4b", "fig4c", "fig4d", "fig5",  "fig6a",
          "fig6b", "fig6c", "fig6d"};
}

std::vector<FigureCurve> figure_curves(std::string_view name) {
  const auto delta = [](double v_w, double d) {
    return std::vector<FigureCurve>{
        {"", PotentialProfile::delta_pair(v_w, 5.0, d), open_grid(50.0, kPoints)}};
  };
  const auto joined = [](bool continuous) {
    std::vector<FigureCurve> out;
    for (double v_w : {5.0, 10.0, 15.0}) {
      out.push_back({"v_w" + std::to_string(static_cast<int>(v_w)),
                     continuous
                         ? PotentialProfile::continuous_joined(v_w, 5.0, BarrierForm::XGauss)
                         : PotentialProfile::discontinuous_joined(v_w, 5.0, BarrierForm::Gauss),
                     open_grid(15.0, kPoints)});
    }
    return out;
  };
  const auto smooth = [](double v_w) {
    return std::vector<FigureCurve>{
        {"", PotentialProfile::single_smooth(v_w, 5.0, 8.0, BarrierForm::Gauss),
         open_grid(50.0, kPoints)}};
  };
  using W = WellShape;

  if (name == "fig2a") return delta(1.0, 3.0);
  if (name == "fig2b") return delta(1.0, 1.0);
  if (name == "fig2c") return delta(5.0, 3.0);
  if (name == "fig2d") return delta(5.0, 1.0);
  if (name == "fig3a") return {composite(W::Rectangular, {1.0, 5.0, 5.0})};
  if (name == "fig3b") return {composite(W::Rectangular, {10.0, 0.0, 5.0})};
  if (name == "fig3c") return {composite(W::Rectangular, {10.0, 5.0, 5.0})};
  if (name == "fig3d") return {composite(W::Rectangular, {10.0, 5.0, 1.0})};
  if (name == "fig4a") return {composite(W::Parabolic, {5.0, 5.0, 5.0})};
  if (name == "fig4b") return {composite(W::Parabolic, {10.0, 0.0, 5.0})};
  if (name == "fig4c") return {composite(W::Parabolic, {10.0, 5.0, 5.0})};
  if (name == "fig4d") return {composite(W::Parabolic, {10.0, 5.0, 1.0})};
  if (name == "fig5") {
    std::vector<FigureCurve> out;
    for (W shape : {W::Rectangular, W::Parabolic, W::Gaussian, W::Triangular})
      out.push_back(composite(shape, {10.0, 5.0, 0.4}, std::string(to_string(shape))));
    return out;
  }
  if (name == "fig6a") return joined(true);
  if (name == "fig6b") return joined(false);
  if (name == "fig6c") return smooth(2000.0);
  if (name == "fig6d") return smooth(5000.0);

  std::string known;
  for (const auto &n : figure_names())
    known += (known.empty() ? "" : ", ") + n;
  throw Error(ErrorCode::UnknownFigure,
              "unknown figure '" + std::string(name) + "' (known: " + known + ")");
}

} // namespace qscatter
