#pragma once

#include <string>
#include <vector>

#include "dcglearn/simulation.hpp"

namespace dcglearn {

// Renders result rows as an SVG line chart: x = training pairs, y = the
// chosen metric, one series per (model, pair_mode, noise) combination,
// each point the median over seeds. Metric is "precision" or "similarity".
std::string render_svg(const std::vector<ResultRow>& rows, const std::string& metric,
                       const std::string& title = "");

}  // namespace dcglearn
