#include "macexp/su_exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "macexp/errors.hpp"
#include "macexp/optimize.hpp"
#include "macexp/rng.hpp"

namespace macexp {

namespace {

constexpr double rate_tol = 1e-9;

void check_input(const dmc& ch, const pmf& input) {
  if (input.size() != ch.input_size()) {
    throw std::invalid_argument("input distribution does not match channel input alphabet");
  }
}

}  // namespace

double renyi_entropy(const pmf& p, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("renyi_entropy: beta must be positive");
  if (beta == 1.0) return p.shannon_entropy();
  double s = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) s += std::pow(p[i], beta);
  }
  return std::log(s) / (1.0 - beta);
}

double capacity(const dmc& ch) {
  const int nx = ch.input_size();
  const int ny = ch.output_size();
  std::vector<double> p(static_cast<size_t>(nx), 1.0 / nx);
  std::vector<double> q(static_cast<size_t>(ny));
  std::vector<double> logc(static_cast<size_t>(nx));
  double lower = 0.0;
  for (int it = 0; it < 10000; ++it) {
    std::fill(q.begin(), q.end(), 0.0);
    for (int x = 0; x < nx; ++x) {
      for (int y = 0; y < ny; ++y) q[static_cast<size_t>(y)] += p[static_cast<size_t>(x)] * ch.prob(y, x);
    }
    double upper = -std::numeric_limits<double>::infinity();
    double z = 0.0;
    for (int x = 0; x < nx; ++x) {
      double d = 0.0;
      for (int y = 0; y < ny; ++y) {
        double w = ch.prob(y, x);
        if (w > 0.0) d += w * std::log(w / q[static_cast<size_t>(y)]);
      }
      logc[static_cast<size_t>(x)] = d;
      upper = std::max(upper, d);
      z += p[static_cast<size_t>(x)] * std::exp(d);
    }
    lower = std::log(z);
    if (upper - lower < 1e-12) break;
    for (int x = 0; x < nx; ++x) {
      p[static_cast<size_t>(x)] *= std::exp(logc[static_cast<size_t>(x)]) / z;
    }
  }
  return std::max(0.0, lower);
}

double gallager_e0(const dmc& ch, const pmf& input, double rho) {
  check_input(ch, input);
  if (!(rho >= 0.0)) throw std::invalid_argument("gallager_e0: rho must be >= 0");
  const double s = 1.0 / (1.0 + rho);
  double f = 0.0;
  for (int y = 0; y < ch.output_size(); ++y) {
    double g = 0.0;
    for (int x = 0; x < ch.input_size(); ++x) {
      double w = ch.prob(y, x);
      if (w > 0.0 && input[x] > 0.0) g += input[x] * std::pow(w, s);
    }
    if (g > 0.0) f += std::pow(g, 1.0 + rho);
  }
  return -std::log(f);
}

double gallager_e0_rho_derivative(const dmc& ch, const pmf& input, double rho) {
  check_input(ch, input);
  const double s = 1.0 / (1.0 + rho);
  const double ds = -s * s;
  double f = 0.0, df = 0.0;
  for (int y = 0; y < ch.output_size(); ++y) {
    double g = 0.0, glog = 0.0;
    for (int x = 0; x < ch.input_size(); ++x) {
      double w = ch.prob(y, x);
      if (w > 0.0 && input[x] > 0.0) {
        double t = input[x] * std::pow(w, s);
        g += t;
        glog += t * std::log(w);
      }
    }
    if (g <= 0.0) continue;
    double gpow = std::pow(g, 1.0 + rho);
    f += gpow;
    df += gpow * std::log(g) + (1.0 + rho) * std::pow(g, rho) * ds * glog;
  }
  return -df / f;
}

namespace {

// Bhattacharyya-type kernel sum_y W(y|x)^(1/2) W(y|x')^(1/2).
std::vector<double> pairwise_kernel(const dmc& ch) {
  const int nx = ch.input_size();
  std::vector<double> b(static_cast<size_t>(nx) * nx, 0.0);
  for (int x1 = 0; x1 < nx; ++x1) {
    for (int x2 = 0; x2 < nx; ++x2) {
      double s = 0.0;
      for (int y = 0; y < ch.output_size(); ++y) {
        s += std::sqrt(ch.prob(y, x1) * ch.prob(y, x2));
      }
      b[static_cast<size_t>(x1) * nx + x2] = s;
    }
  }
  return b;
}

}  // namespace

double gallager_ex(const dmc& ch, const pmf& input, double rho) {
  check_input(ch, input);
  if (!(rho >= 1.0)) throw std::invalid_argument("gallager_ex: rho must be >= 1");
  const int nx = ch.input_size();
  std::vector<double> b = pairwise_kernel(ch);
  double d = 0.0;
  for (int x1 = 0; x1 < nx; ++x1) {
    for (int x2 = 0; x2 < nx; ++x2) {
      double bv = b[static_cast<size_t>(x1) * nx + x2];
      if (bv > 0.0) d += input[x1] * input[x2] * std::pow(bv, 1.0 / rho);
    }
  }
  return -rho * std::log(d);
}

double gallager_ex_rho_derivative(const dmc& ch, const pmf& input, double rho) {
  check_input(ch, input);
  const int nx = ch.input_size();
  std::vector<double> b = pairwise_kernel(ch);
  double d = 0.0, dd = 0.0;
  for (int x1 = 0; x1 < nx; ++x1) {
    for (int x2 = 0; x2 < nx; ++x2) {
      double bv = b[static_cast<size_t>(x1) * nx + x2];
      if (bv > 0.0) {
        double t = input[x1] * input[x2] * std::pow(bv, 1.0 / rho);
        d += t;
        dd += t * std::log(bv) * (-1.0 / (rho * rho));
      }
    }
  }
  return -std::log(d) - rho * dd / d;
}

bool has_uniform_symmetry(const dmc& ch) {
  std::vector<double> ref = ch.row(0).probs();
  std::sort(ref.begin(), ref.end());
  for (int x = 1; x < ch.input_size(); ++x) {
    std::vector<double> r = ch.row(x).probs();
    std::sort(r.begin(), r.end());
    for (size_t i = 0; i < r.size(); ++i) {
      if (std::abs(r[i] - ref[i]) > prob_tol) return false;
    }
  }
  return true;
}

namespace {

pmf maximize_input(const dmc& ch, double rho, bool expurgated) {
  if (has_uniform_symmetry(ch)) return pmf::uniform(ch.input_size());
  const int nx = ch.input_size();
  auto objective = [&](const std::vector<double>& p) {
    pmf q(project_to_simplex(p));
    return expurgated ? gallager_ex(ch, q, rho) : gallager_e0(ch, q, rho);
  };
  std::function<std::vector<double>(const std::vector<double>&)> gradient;
  if (!expurgated) {
    gradient = [&ch, rho, nx](const std::vector<double>& p) {
      const double s = 1.0 / (1.0 + rho);
      const int ny = ch.output_size();
      std::vector<double> gy(static_cast<size_t>(ny), 0.0);
      double f = 0.0;
      for (int y = 0; y < ny; ++y) {
        double g = 0.0;
        for (int x = 0; x < nx; ++x) {
          double w = ch.prob(y, x);
          if (w > 0.0 && p[static_cast<size_t>(x)] > 0.0) {
            g += p[static_cast<size_t>(x)] * std::pow(w, s);
          }
        }
        gy[static_cast<size_t>(y)] = g;
        if (g > 0.0) f += std::pow(g, 1.0 + rho);
      }
      std::vector<double> grad(static_cast<size_t>(nx), 0.0);
      for (int x = 0; x < nx; ++x) {
        double acc = 0.0;
        for (int y = 0; y < ny; ++y) {
          double w = ch.prob(y, x);
          double g = gy[static_cast<size_t>(y)];
          if (w > 0.0 && g > 0.0) acc += std::pow(g, rho) * std::pow(w, s);
        }
        grad[static_cast<size_t>(x)] = -(1.0 + rho) * acc / f;
      }
      return grad;
    };
  } else {
    gradient = [&ch, rho, nx](const std::vector<double>& p) {
      std::vector<double> b = pairwise_kernel(ch);
      double d = 0.0;
      for (int x1 = 0; x1 < nx; ++x1) {
        for (int x2 = 0; x2 < nx; ++x2) {
          double bv = b[static_cast<size_t>(x1) * nx + x2];
          if (bv > 0.0) {
            d += p[static_cast<size_t>(x1)] * p[static_cast<size_t>(x2)] *
                 std::pow(bv, 1.0 / rho);
          }
        }
      }
      std::vector<double> grad(static_cast<size_t>(nx), 0.0);
      for (int x = 0; x < nx; ++x) {
        double acc = 0.0;
        for (int x2 = 0; x2 < nx; ++x2) {
          double bv = b[static_cast<size_t>(x) * nx + x2];
          if (bv > 0.0) acc += p[static_cast<size_t>(x2)] * std::pow(bv, 1.0 / rho);
        }
        grad[static_cast<size_t>(x)] = -rho * 2.0 * acc / d;
      }
      return grad;
    };
  }
  std::vector<double> best = maximize_on_simplex(nx, objective, gradient);
  return pmf(project_to_simplex(best));
}

}  // namespace

pmf maximize_e0_input(const dmc& ch, double rho) { return maximize_input(ch, rho, false); }

su_exponent_report random_coding_exponent(const dmc& ch, double rate) {
  if (!(rate >= 0.0)) throw std::invalid_argument("random_coding_exponent: rate must be >= 0");
  su_exponent_report rep;
  rep.rate = rate;
  if (has_uniform_symmetry(ch)) {
    pmf u = pmf::uniform(ch.input_size());
    auto f = [&](double rho) { return gallager_e0(ch, u, rho) - rho * rate; };
    max_result best = grid_golden_max(f, 0.0, 1.0, 65, 1e-10);
    rep.e_r = std::max(0.0, best.value);
    rep.rho = best.x;
    rep.input = u.probs();
  } else {
    pmf best_input = pmf::uniform(ch.input_size());
    auto phi = [&](double rho) {
      pmf p = maximize_e0_input(ch, rho);
      return gallager_e0(ch, p, rho) - rho * rate;
    };
    max_result best = grid_golden_max(phi, 0.0, 1.0, 33, 1e-8);
    best_input = maximize_e0_input(ch, best.x);
    rep.e_r = std::max(0.0, gallager_e0(ch, best_input, best.x) - best.x * rate);
    rep.rho = best.x;
    rep.input = best_input.probs();
  }
  rep.e_best = rep.e_r;
  return rep;
}

expurgated_result expurgated_exponent(const dmc& ch, double rate) {
  if (!(rate >= 0.0)) throw std::invalid_argument("expurgated_exponent: rate must be >= 0");
  auto value_at = [&](double rho) {
    pmf p = maximize_input(ch, rho, true);
    return gallager_ex(ch, p, rho) - rho * rate;
  };
  // Geometric grid: the slope parameter acts multiplicatively.
  const int grid = 65;
  double best_rho = 1.0, best_v = value_at(1.0);
  for (int i = 1; i < grid; ++i) {
    double rho = std::exp(std::log(rho_max) * i / (grid - 1));
    double v = value_at(rho);
    if (v > best_v) {
      best_v = v;
      best_rho = rho;
    }
  }
  double lo = best_rho / std::exp(std::log(rho_max) / (grid - 1));
  double hi = best_rho * std::exp(std::log(rho_max) / (grid - 1));
  lo = std::max(1.0, lo);
  hi = std::min(rho_max, hi);
  max_result refined = golden_section_max(value_at, lo, hi, 1e-9);
  if (refined.value > best_v) {
    best_v = refined.value;
    best_rho = refined.x;
  }
  expurgated_result res;
  res.value = std::max(0.0, best_v);
  res.rho = best_rho;
  res.truncated = res.value > 0.0 && best_rho > rho_max * (1.0 - 1e-6);
  return res;
}

su_exponent_report best_exponent_report(const dmc& ch, double rate) {
  su_exponent_report rep = random_coding_exponent(ch, rate);
  expurgated_result ex = expurgated_exponent(ch, rate);
  rep.e_ex = ex.value;
  rep.ex_truncated = ex.truncated;
  rep.e_best = std::max(rep.e_r, ex.value);
  return rep;
}

double additive_random_coding_exponent(const additive_noise_channel& ch, double rate) {
  if (!(rate >= 0.0)) throw std::invalid_argument("additive_random_coding_exponent: rate must be >= 0");
  const double logm = std::log(static_cast<double>(ch.modulus()));
  auto f = [&](double rho) {
    double beta = 1.0 / (1.0 + rho);
    return rho * (logm - renyi_entropy(ch.noise(), beta) - rate);
  };
  max_result best = grid_golden_max(f, 0.0, 1.0, 65, 1e-10);
  return std::max(0.0, best.value);
}

additive_best_result additive_best_exponent(const additive_noise_channel& ch, double rate) {
  additive_best_result res;
  res.e_r = additive_random_coding_exponent(ch, rate);
  expurgated_result ex = expurgated_exponent(ch.to_dmc(), rate);
  res.e_ex = ex.value;
  res.ex_truncated = ex.truncated;
  res.value = std::max(res.e_r, res.e_ex);
  return res;
}

double critical_rate(const dmc& ch) {
  double c = capacity(ch);
  if (c < rate_tol) throw zero_capacity_error("critical_rate: channel has zero capacity");
  pmf p = maximize_e0_input(ch, 1.0);
  double e01 = gallager_e0(ch, p, 1.0);
  double slope = gallager_e0_rho_derivative(ch, p, 1.0);
  if (std::abs(e01 - slope) <= rate_tol) return 0.0;  // E0 linear in rho
  auto g = [&](double r) { return slope - r; };
  return std::clamp(bisect_decreasing(g, 0.0, c, 1e-12), 0.0, c);
}

double expurgation_rate(const dmc& ch) {
  double c = capacity(ch);
  if (c < rate_tol) throw zero_capacity_error("expurgation_rate: channel has zero capacity");
  pmf p = maximize_input(ch, 1.0, true);
  double slope = gallager_ex_rho_derivative(ch, p, 1.0);
  auto g = [&](double r) { return slope - r; };
  return std::clamp(bisect_decreasing(g, 0.0, c, 1e-12), 0.0, c);
}

double sw_exponents::value() const { return std::min({genie1, genie2, joint}); }

namespace {

// Channel X_i -> (Y, X_j) seen by a decoder that knows the other user's
// transmission; the other input is distributed per its codebook law.
dmc side_information_channel(const mac2& mac, int user, const pmf& other) {
  const int ny = mac.output_size();
  const int self = (user == 1) ? mac.input1_size() : mac.input2_size();
  const int oth = (user == 1) ? mac.input2_size() : mac.input1_size();
  std::vector<pmf> rows;
  rows.reserve(static_cast<size_t>(self));
  for (int x = 0; x < self; ++x) {
    std::vector<double> row(static_cast<size_t>(ny) * oth);
    for (int xo = 0; xo < oth; ++xo) {
      for (int y = 0; y < ny; ++y) {
        double w = (user == 1) ? mac.prob(y, x, xo) : mac.prob(y, xo, x);
        row[static_cast<size_t>(xo) * ny + y] = other[xo] * w;
      }
    }
    rows.emplace_back(std::move(row));
  }
  return dmc(std::move(rows));
}

double rc_value(const dmc& ch, const pmf& input, double rate) {
  auto f = [&](double rho) { return gallager_e0(ch, input, rho) - rho * rate; };
  return std::max(0.0, grid_golden_max(f, 0.0, 1.0, 65, 1e-10).value);
}

sw_exponents sw_at(const mac2& mac, const pmf& p1, const pmf& p2, double r1, double r2) {
  sw_exponents out;
  out.input1 = p1.probs();
  out.input2 = p2.probs();
  std::vector<double> prod(static_cast<size_t>(p1.size()) * p2.size());
  for (int a = 0; a < p1.size(); ++a) {
    for (int b = 0; b < p2.size(); ++b) {
      prod[static_cast<size_t>(a) * p2.size() + b] = p1[a] * p2[b];
    }
  }
  out.joint = rc_value(mac.product_dmc(), pmf(std::move(prod)), r1 + r2);
  out.genie1 = rc_value(side_information_channel(mac, 1, p2), p1, r1);
  out.genie2 = rc_value(side_information_channel(mac, 2, p1), p2, r2);
  return out;
}

pmf softmax_pmf(const std::vector<double>& theta, size_t begin, int size) {
  std::vector<double> v(static_cast<size_t>(size));
  double mx = 0.0;  // implicit leading logit 0
  for (int i = 1; i < size; ++i) mx = std::max(mx, theta[begin + static_cast<size_t>(i - 1)]);
  double z = std::exp(0.0 - mx);
  v[0] = z;
  double sum = z;
  for (int i = 1; i < size; ++i) {
    double e = std::exp(theta[begin + static_cast<size_t>(i - 1)] - mx);
    v[static_cast<size_t>(i)] = e;
    sum += e;
  }
  for (double& x : v) x /= sum;
  return pmf(std::move(v));
}

}  // namespace

sw_exponents slepian_wolf_mac_exponent(const mac2& mac, double r1, double r2) {
  if (!(r1 >= 0.0) || !(r2 >= 0.0)) {
    throw std::invalid_argument("slepian_wolf_mac_exponent: rates must be >= 0");
  }
  const int n1 = mac.input1_size();
  const int n2 = mac.input2_size();
  if (has_uniform_symmetry(mac.product_dmc())) {
    return sw_at(mac, pmf::uniform(n1), pmf::uniform(n2), r1, r2);
  }
  const size_t dim = static_cast<size_t>(n1 - 1) + static_cast<size_t>(n2 - 1);
  auto objective = [&](const std::vector<double>& theta) {
    pmf p1 = softmax_pmf(theta, 0, n1);
    pmf p2 = softmax_pmf(theta, static_cast<size_t>(n1 - 1), n2);
    return sw_at(mac, p1, p2, r1, r2).value();
  };
  std::vector<std::vector<double>> starts;
  starts.push_back(std::vector<double>(dim, 0.0));
  rng_stream rng(0x51ba2c6e97d340f1ull);
  for (int s = 0; s < 5; ++s) {
    std::vector<double> t(dim);
    for (double& x : t) x = 4.0 * rng.uniform01() - 2.0;
    starts.push_back(std::move(t));
  }
  std::vector<double> best_theta;
  double best_v = -std::numeric_limits<double>::infinity();
  for (auto& s : starts) {
    std::vector<double> t = nelder_mead_max(objective, s, 0.7, 300, 1e-11);
    double v = objective(t);
    if (v > best_v) {
      best_v = v;
      best_theta = std::move(t);
    }
  }
  pmf p1 = softmax_pmf(best_theta, 0, n1);
  pmf p2 = softmax_pmf(best_theta, static_cast<size_t>(n1 - 1), n2);
  return sw_at(mac, p1, p2, r1, r2);
}

double time_sharing_exponent(const mac2& mac, double r1, double r2) {
  if (!(r1 >= 0.0) || !(r2 >= 0.0)) {
    throw std::invalid_argument("time_sharing_exponent: rates must be >= 0");
  }
  // Solo channels: the idle user pinned to symbol 0.
  std::vector<pmf> rows1, rows2;
  for (int x = 0; x < mac.input1_size(); ++x) rows1.push_back(mac.row(x, 0));
  for (int x = 0; x < mac.input2_size(); ++x) rows2.push_back(mac.row(0, x));
  dmc solo1(std::move(rows1));
  dmc solo2(std::move(rows2));
  auto f = [&](double alpha) {
    double e1 = alpha * best_exponent_report(solo1, r1 / alpha).e_best;
    double e2 = (1.0 - alpha) * best_exponent_report(solo2, r2 / (1.0 - alpha)).e_best;
    return std::min(e1, e2);
  };
  return std::max(0.0, grid_golden_max(f, 1e-6, 1.0 - 1e-6, 33, 1e-7).value);
}

}  // namespace macexp
