#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace macexp {

struct max_result {
  double x = 0.0;
  double value = 0.0;
};

// Golden-section maximization of a unimodal function on [lo, hi].
max_result golden_section_max(const std::function<double(double)>& f, double lo,
                              double hi, double x_tol = 1e-10, int max_iter = 200);

// Coarse grid scan followed by golden-section refinement around the best
// grid point; robust when unimodality is only empirical.
max_result grid_golden_max(const std::function<double(double)>& f, double lo,
                           double hi, int grid_points, double x_tol = 1e-10);

// Euclidean projection onto the probability simplex.
std::vector<double> project_to_simplex(std::vector<double> v);

struct simplex_opt_options {
  int max_iter = 400;
  double tol = 1e-10;
  int random_starts = 5;
  std::uint64_t seed = 0x9db1f6a2c3715e84ull;
};

// Projected gradient ascent over the probability simplex with backtracking,
// multistart (uniform plus random corners of the simplex).
std::vector<double> maximize_on_simplex(
    int dim, const std::function<double(const std::vector<double>&)>& f,
    const std::function<std::vector<double>(const std::vector<double>&)>& grad,
    const simplex_opt_options& opt = {});

// Nelder-Mead maximization over R^dim from a given start point.
std::vector<double> nelder_mead_max(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> start, double scale = 0.5, int max_iter = 400,
    double tol = 1e-11);

// Bisection for a root of a decreasing-sign function: requires
// f(lo) >= 0 >= f(hi); returns the sign-change location.
double bisect_decreasing(const std::function<double(double)>& f, double lo,
                         double hi, double x_tol = 1e-9);

}  // namespace macexp
