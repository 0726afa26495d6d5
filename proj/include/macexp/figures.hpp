#pragma once

#include <string>
#include <vector>

#include "macexp/curve.hpp"

namespace macexp {

// Data behind the four reference plots. All builders return fully validated,
// 12-significant-digit-rounded figures so serialization round-trips exactly.
//
//  fig1   : random-coding vs expurgated exponent of the additive binary
//           channel, rate sweep, marked critical/expurgation rates.
//  fig2   : two-user exponents of the binary selector family vs the selector
//           probability p at the zero rate pair.
//  region : Gaussian two-user capacity region, structured-code region,
//           equal-noise-margin line, and expurgation region boundary.
//  fig4a-d: distributed nesting vs spherical-shell upper bound vs merged
//           single-user benchmark, for four SNR pairs.
figure_data fig1_data(double crossover, int resolution);
figure_data fig2_data(double q, int resolution);
figure_data region_data(double a1, double a2, int resolution);
figure_data fig4_data(const std::string& name, double a1, double a2, int resolution);

std::vector<std::string> figure_names();
bool figure_requires_increasing_x(const std::string& name);

// Dispatch by figure id with per-figure default parameters;
// resolution 0 selects the default. Throws std::invalid_argument for an
// unknown id or resolution < 2.
figure_data make_figure(const std::string& name, int resolution = 0);

}  // namespace macexp
