#include "macexp/figures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "macexp/channels.hpp"
#include "macexp/gaussian_exponents.hpp"
#include "macexp/su_exponents.hpp"
#include "macexp/transform.hpp"

namespace macexp {

namespace {

void check_resolution(int resolution) {
  if (resolution < 2) throw std::invalid_argument("figure: resolution must be >= 2");
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> xs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    xs[static_cast<size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  }
  xs.back() = hi;
  return xs;
}

}  // namespace

figure_data fig1_data(double crossover, int resolution) {
  check_resolution(resolution);
  additive_noise_channel ch(2, pmf::bernoulli(crossover));
  double cap = ch.capacity();
  dmc as_dmc = ch.to_dmc();
  double r_cr = critical_rate(as_dmc);
  double r_ex = expurgation_rate(as_dmc);

  figure_data f;
  f.name = "fig1";
  f.x_name = "rate";
  f.y_name = "exponent";
  f.params = {{"crossover", crossover}, {"capacity", cap}};

  curve random_curve{"random_coding", {}, {}};
  curve exp_curve{"expurgated", {}, {}};
  for (double r : linspace(0.0, cap, resolution)) {
    random_curve.points.push_back({r, additive_random_coding_exponent(ch, r)});
    exp_curve.points.push_back({r, expurgated_exponent(as_dmc, r).value});
  }

  curve markers{"rate_markers",
                {{"expurgation_rate", r_ex}, {"critical_rate", r_cr}, {"capacity", cap}},
                {{r_ex, 0.0}, {r_cr, 0.0}}};

  f.curves = {std::move(random_curve), std::move(exp_curve), std::move(markers)};
  round_figure(f);
  validate_figure(f, figure_requires_increasing_x(f.name));
  return f;
}

figure_data fig2_data(double q, int resolution) {
  check_resolution(resolution);
  figure_data f;
  f.name = "fig2";
  f.x_name = "p";
  f.y_name = "exponent";
  f.params = {{"q", q}, {"rate1", 0.0}, {"rate2", 0.0}};

  curve sw{"slepian_wolf", {}, {}};
  curve vc{"virtual_channel", {}, {}};
  curve ts{"time_sharing", {}, {}};
  transform_spec ident = transform_spec::identity(2);
  for (double p : linspace(0.0, 1.0, resolution)) {
    mac2 mac = binary_example_channel(q, p);
    sw.points.push_back({p, slepian_wolf_mac_exponent(mac, 0.0, 0.0).value()});
    virtual_channel virt = apply_transform(mac, ident);
    additive_noise_channel add(virt.m, virt.noise);
    vc.points.push_back({p, additive_best_exponent(add, 0.0).value});
    ts.points.push_back({p, time_sharing_exponent(mac, 0.0, 0.0)});
  }

  f.curves = {std::move(sw), std::move(vc), std::move(ts)};
  round_figure(f);
  validate_figure(f, figure_requires_increasing_x(f.name));
  return f;
}

figure_data region_data(double a1, double a2, int resolution) {
  check_resolution(resolution);
  if (!(a1 >= a2) || !(a2 > 0.0)) {
    throw std::invalid_argument("region: require a1 >= a2 > 0");
  }
  figure_data f;
  f.name = "region";
  f.x_name = "rate1";
  f.y_name = "rate2";
  f.params = {{"snr1", a1},
              {"snr2", a2},
              {"snr1_db", 10.0 * std::log10(a1)},
              {"snr2_db", 10.0 * std::log10(a2)}};

  auto boundary = [&](const char* label, double cap1, double cap2, double cap_sum) {
    // r2 = min(cap2, cap_sum - r1) swept over r1 in [0, cap1].
    curve c{label, {}, {}};
    for (double r1 : linspace(0.0, cap1, resolution)) {
      double r2 = std::max(0.0, std::min(cap2, cap_sum - r1));
      c.points.push_back({r1, r2});
    }
    return c;
  };

  double c1 = gaussian_capacity(a1);
  double c2 = gaussian_capacity(a2);
  double c_sum = 0.5 * std::log(1.0 + a1 + a2);
  f.curves.push_back(boundary("capacity_region", c1, c2, c_sum));

  if (a2 >= 1.0) {
    f.curves.push_back(
        boundary("r_struct", 0.5 * std::log(a1), 0.5 * std::log(a2), 0.5 * std::log(a1)));
  }
  if (a2 >= 4.0) {
    f.curves.push_back(boundary("expurgation_region", 0.5 * std::log(a1 / 4.0),
                                0.5 * std::log(a2 / 4.0), 0.5 * std::log(a1 / 4.0)));
  }

  if (a2 >= 1.0) {
    // Vertical locus where both noise margins coincide: r1 = (1/2) log(a1/a2).
    double r1_eq = 0.5 * std::log(a1 / a2);
    curve eq{"mu_equal_line", {{"rate1_equal", r1_eq}}, {}};
    for (double r2 : linspace(0.0, 0.5 * std::log(a2), resolution)) {
      eq.points.push_back({r1_eq, r2});
    }
    f.curves.push_back(std::move(eq));
  }

  round_figure(f);
  validate_figure(f, figure_requires_increasing_x(f.name));
  return f;
}

figure_data fig4_data(const std::string& name, double a1, double a2, int resolution) {
  check_resolution(resolution);
  if (!(a1 >= a2) || !(a2 > 0.0)) {
    throw std::invalid_argument("fig4: require a1 >= a2 > 0");
  }
  double r1 = 0.5 * std::log(a1 / a2);
  double half_log_a2 = 0.5 * std::log(a2);
  double a_sum = a1 + a2;

  figure_data f;
  f.name = name;
  f.x_name = "alpha";  // r2 / ((1/2) log a2)
  f.y_name = "exponent";
  f.params = {{"snr1", a1},
              {"snr2", a2},
              {"snr1_db", 10.0 * std::log10(a1)},
              {"snr2_db", 10.0 * std::log10(a2)},
              {"rate1", r1}};

  curve dn{"distributed_nesting", {}, {}};
  curve ug{"gallager_ub", {}, {}};
  curve su{"single_user", {}, {}};
  for (double alpha : linspace(0.0, 1.0, resolution)) {
    double r2 = alpha * half_log_a2;
    gaussian_mac_params p{a1, a2, r1, r2};
    dn.points.push_back({alpha, distributed_nesting_exponent(p).exponent});
    ug.points.push_back({alpha, gallager_spherical_ub(r1 + r2, a1, a2).value});
    su.points.push_back({alpha, su_gaussian_best(r1 + r2, a_sum)});
  }

  double r_cr = gaussian_critical_rate(a_sum);
  double r_ex = gaussian_expurgation_rate(a_sum);
  double alpha_cr = (r_cr - r1) / half_log_a2;
  double alpha_ex = (r_ex - r1) / half_log_a2;
  curve markers{"rate_markers",
                {{"critical_rate_sum", r_cr},
                 {"expurgation_rate_sum", r_ex},
                 {"alpha_critical", alpha_cr},
                 {"alpha_expurgation", alpha_ex}},
                {{alpha_ex, 0.0}, {alpha_cr, 0.0}}};

  f.curves = {std::move(dn), std::move(ug), std::move(su), std::move(markers)};
  round_figure(f);
  validate_figure(f, figure_requires_increasing_x(f.name));
  return f;
}

std::vector<std::string> figure_names() {
  return {"fig1", "fig2", "region", "fig4a", "fig4b", "fig4c", "fig4d"};
}

bool figure_requires_increasing_x(const std::string& name) {
  return name != "region";
}

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace

figure_data make_figure(const std::string& name, int resolution) {
  if (name == "fig1") {
    return fig1_data(0.02, resolution ? resolution : 60);
  }
  if (name == "fig2") {
    return fig2_data(0.1, resolution ? resolution : 41);
  }
  if (name == "region") {
    return region_data(db_to_linear(30.0), db_to_linear(27.0), resolution ? resolution : 60);
  }
  if (name == "fig4a") {
    return fig4_data("fig4a", db_to_linear(30.0), db_to_linear(27.0),
                     resolution ? resolution : 40);
  }
  if (name == "fig4b") {
    return fig4_data("fig4b", db_to_linear(50.0), db_to_linear(25.0),
                     resolution ? resolution : 40);
  }
  if (name == "fig4c") {
    return fig4_data("fig4c", db_to_linear(6.0), db_to_linear(3.0),
                     resolution ? resolution : 40);
  }
  if (name == "fig4d") {
    return fig4_data("fig4d", db_to_linear(10.0), db_to_linear(1.0),
                     resolution ? resolution : 40);
  }
  throw std::invalid_argument("unknown figure id: " + name);
}

}  // namespace macexp
