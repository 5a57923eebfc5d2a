#pragma once

#include <string>
#include <vector>

namespace parkdr {

struct SvgSeries {
    std::string label;
    std::vector<double> values;
};

// Render line charts as a minimal SVG 1.1 document. All coordinates are
// printed with fixed precision, so identical inputs give identical bytes.
std::string render_line_chart_svg(const std::string& title,
                                  const std::vector<SvgSeries>& series,
                                  int width = 860, int height = 420);

}  // namespace parkdr
