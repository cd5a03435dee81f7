#pragma once

#include <span>
#include <string>

#include "lst/dataset.hpp"

namespace lst::cli {

struct PlotLine {
  std::string label;
  Coefficients beta;  // (intercept, slope)
};

// Scatter of (x, y) for a p == 2 dataset with one line per fit, clipped to
// the plot area, and a legend. Output depends only on the inputs.
std::string render_svg(const Dataset& data, std::span<const PlotLine> lines);

}  // namespace lst::cli
