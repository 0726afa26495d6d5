#pragma once

#include <map>
#include <string>
#include <vector>

namespace macexp {

struct curve_point {
  double x = 0.0;
  double y = 0.0;
};

// One labeled curve of a figure: points plus named scalar parameters
// (marked rates, channel constants, ...).
struct curve {
  std::string label;
  std::map<std::string, double> params;
  std::vector<curve_point> points;
};

struct figure_data {
  std::string name;
  std::string x_name;
  std::string y_name;
  std::map<std::string, double> params;
  std::vector<curve> curves;
};

// All serialized values are rounded to 12 significant digits, identically in
// CSV and JSON, so either format parses back to the same doubles.
double round_sig12(double v);
std::string format_sig12(double v);
void round_figure(figure_data& f);

// Labels, parameter keys, and axis names are restricted to [A-Za-z0-9_.-]
// so the CSV needs no quoting.
bool identifier_ok(const std::string& s);

// Structural checks; x monotonicity is only demanded when the figure is a
// sweep over a strictly increasing axis.
void validate_figure(const figure_data& f, bool require_increasing_x);

std::string figure_to_csv(const figure_data& f);
std::string figure_to_json(const figure_data& f);
figure_data figure_from_csv(const std::string& text);
figure_data figure_from_json(const std::string& text);

// Exact comparison (doubles compared bitwise-equal via ==).
bool figures_equal(const figure_data& a, const figure_data& b);

}  // namespace macexp
