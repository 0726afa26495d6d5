#include "macexp/gaussian_exponents.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "macexp/optimize.hpp"

namespace macexp {

namespace {

void check_snr(double snr) {
  if (!(snr > 0.0)) throw std::invalid_argument("snr must be positive");
}

void check_rate(double rate) {
  if (!(rate >= 0.0)) throw std::invalid_argument("rate must be >= 0");
}

}  // namespace

double gaussian_capacity(double snr) {
  check_snr(snr);
  return 0.5 * std::log1p(snr);
}

double gaussian_gamma(double snr) {
  check_snr(snr);
  return 0.5 * (1.0 + 0.5 * snr + std::sqrt(1.0 + 0.25 * snr * snr));
}

double gaussian_critical_rate(double snr) {
  return 0.5 * std::log(gaussian_gamma(snr));
}

double gaussian_expurgation_rate(double snr) {
  return 0.5 * std::log(gaussian_gamma(snr) - 0.25 * snr);
}

double su_gaussian_rc_low_rate(double rate, double snr) {
  check_snr(snr);
  check_rate(rate);
  double g = gaussian_gamma(snr);
  return 1.0 - g + 0.5 * snr + 0.5 * std::log(g - 0.5 * snr) + 0.5 * std::log(g) - rate;
}

double su_gaussian_rc_high_rate(double rate, double snr) {
  check_snr(snr);
  check_rate(rate);
  double beta = std::exp(2.0 * rate);
  double root = std::sqrt(1.0 + 4.0 * beta / (snr * (beta - 1.0)));
  double t1 = snr / (4.0 * beta) * ((beta + 1.0) - (beta - 1.0) * root);
  double t2 = 0.5 * std::log(beta - 0.5 * snr * (beta - 1.0) * (root - 1.0));
  return t1 + t2;
}

double su_gaussian_random_coding(double rate, double snr) {
  check_snr(snr);
  check_rate(rate);
  if (rate >= gaussian_capacity(snr)) return 0.0;
  double v = (rate <= gaussian_critical_rate(snr)) ? su_gaussian_rc_low_rate(rate, snr)
                                                   : su_gaussian_rc_high_rate(rate, snr);
  return std::max(0.0, v);
}

double su_gaussian_expurgated(double rate, double snr) {
  check_snr(snr);
  check_rate(rate);
  double rex = gaussian_expurgation_rate(snr);
  if (rate <= rex) {
    return 0.25 * snr * (1.0 - std::sqrt(1.0 - std::exp(-2.0 * rate)));
  }
  double at_rex = 0.25 * snr * (1.0 - std::sqrt(1.0 - std::exp(-2.0 * rex)));
  return std::max(0.0, at_rex - (rate - rex));
}

double su_gaussian_best(double rate, double snr) {
  return std::max(su_gaussian_random_coding(rate, snr), su_gaussian_expurgated(rate, snr));
}

double poltyrev_exponent(double mu) {
  if (!(mu >= 0.0)) throw std::invalid_argument("poltyrev_exponent: mu must be >= 0");
  if (mu <= 1.0) return 0.0;
  if (mu <= 2.0) return 0.5 * ((mu - 1.0) - std::log(mu));
  if (mu <= 4.0) return 0.5 * (1.0 + std::log(0.25 * mu));
  return mu / 8.0;
}

gaussian_mac_params::gaussian_mac_params(double a1_, double a2_, double r1_, double r2_)
    : a1(a1_), a2(a2_), r1(r1_), r2(r2_) {
  if (!(a2 > 0.0) || !(a1 >= a2)) {
    throw std::invalid_argument("gaussian_mac_params: require a1 >= a2 > 0");
  }
  if (!(r1 >= 0.0) || !(r2 >= 0.0)) {
    throw std::invalid_argument("gaussian_mac_params: rates must be >= 0");
  }
}

bool r_struct_contains(const gaussian_mac_params& p) {
  return p.r1 + p.r2 <= 0.5 * std::log(p.a1) && p.r2 <= 0.5 * std::log(p.a2);
}

nesting_result distributed_nesting_exponent(const gaussian_mac_params& p) {
  nesting_result res;
  res.mu1 = p.a1 * std::exp(-2.0 * (p.r1 + p.r2));
  res.mu2 = p.a2 * std::exp(-2.0 * p.r2);
  res.exponent = poltyrev_exponent(std::min(res.mu1, res.mu2));
  return res;
}

namespace {

double ub_objective(double rho, double t1, double t2, double a1, double a2, double rate) {
  return (1.0 + rho) * (1.0 + 0.5 * std::log(t1 * t2) - std::log1p(rho)) -
         0.5 * (t1 + t2) + 0.5 * rho * std::log1p(a1 / t1 + a2 / t2) - rho * rate;
}

constexpr double theta_floor = 1e-9;

struct theta_opt {
  double t1, t2, value;
};

theta_opt best_thetas(double rho, double a1, double a2, double rate) {
  double hi = 1.0 + rho;
  double t1 = std::min(1.0, hi);
  double t2 = std::min(1.0, hi);
  double value = ub_objective(rho, t1, t2, a1, a2, rate);
  for (int pass = 0; pass < 60; ++pass) {
    max_result m1 = grid_golden_max(
        [&](double t) { return ub_objective(rho, t, t2, a1, a2, rate); }, theta_floor,
        hi, 33, 1e-11);
    t1 = m1.x;
    max_result m2 = grid_golden_max(
        [&](double t) { return ub_objective(rho, t1, t, a1, a2, rate); }, theta_floor,
        hi, 33, 1e-11);
    t2 = m2.x;
    if (m2.value <= value + 1e-13) {
      value = std::max(value, m2.value);
      break;
    }
    value = m2.value;
  }
  return {t1, t2, value};
}

}  // namespace

gallager_ub_state gallager_spherical_ub(double rate_sum, double a1, double a2) {
  check_rate(rate_sum);
  check_snr(a1);
  check_snr(a2);
  auto phi = [&](double rho) { return best_thetas(rho, a1, a2, rate_sum).value; };
  const int grid = 33;
  double best_rho = 0.0, best_v = phi(0.0);
  for (int i = 1; i < grid; ++i) {
    double rho = static_cast<double>(i) / (grid - 1);
    double v = phi(rho);
    if (v > best_v) {
      best_v = v;
      best_rho = rho;
    }
  }
  double step = 1.0 / (grid - 1);
  max_result refined = golden_section_max(phi, std::max(0.0, best_rho - step),
                                          std::min(1.0, best_rho + step), 1e-9);
  if (refined.value > best_v) {
    best_v = refined.value;
    best_rho = refined.x;
  }
  gallager_ub_state st;
  if (best_v <= 0.0) {
    // The rho = 0 slice attains 0 at theta = 1.
    st.rho = 0.0;
    st.theta1 = 1.0;
    st.theta2 = 1.0;
    st.value = 0.0;
    return st;
  }
  theta_opt t = best_thetas(best_rho, a1, a2, rate_sum);
  st.rho = best_rho;
  st.theta1 = t.t1;
  st.theta2 = t.t2;
  st.value = t.value;
  return st;
}

}  // namespace macexp
