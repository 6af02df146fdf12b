#pragma once

#include "qscatter/potential.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qscatter {

//! One T(E) curve of a figure panel.
struct FigureCurve {
  //! Empty for single-curve panels, otherwise appended to the file name.
  std::string label;
  PotentialProfile profile;
  std::vector<double> grid;
};

//! fig2a..fig2d, fig3a..fig3d, fig4a..fig4d, fig5, fig6a..fig6d.
std::vector<std::string> figure_names();

//! Throws Error(UnknownFigure) for names outside figure_names().
std::vector<FigureCurve> figure_curves(std::string_view name);

//! Height of the 11.5 x e^{-x^2} barrier shared by the well-shape panels.
double shaped_barrier_height();

} // namespace qscatter
