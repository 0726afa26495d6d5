#include "macexp/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "macexp/rng.hpp"

namespace macexp {

max_result golden_section_max(const std::function<double(double)>& f, double lo,
                              double hi, double x_tol, int max_iter) {
  if (!(lo <= hi)) throw std::invalid_argument("golden_section_max: empty interval");
  const double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < max_iter && (b - a) > x_tol; ++it) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  double xm = 0.5 * (a + b);
  double fm = f(xm);
  max_result best{xm, fm};
  if (f1 > best.value) best = {x1, f1};
  if (f2 > best.value) best = {x2, f2};
  return best;
}

max_result grid_golden_max(const std::function<double(double)>& f, double lo,
                           double hi, int grid_points, double x_tol) {
  if (grid_points < 2) throw std::invalid_argument("grid_golden_max: need >= 2 points");
  double best_x = lo, best_v = f(lo);
  int best_i = 0;
  for (int i = 1; i < grid_points; ++i) {
    double x = lo + (hi - lo) * i / (grid_points - 1);
    double v = f(x);
    if (v > best_v) {
      best_v = v;
      best_x = x;
      best_i = i;
    }
  }
  double step = (hi - lo) / (grid_points - 1);
  double a = std::max(lo, best_x - step);
  double b = std::min(hi, best_x + step);
  (void)best_i;
  max_result refined = golden_section_max(f, a, b, x_tol);
  if (refined.value >= best_v) return refined;
  return {best_x, best_v};
}

std::vector<double> project_to_simplex(std::vector<double> v) {
  // Sort-based projection: find the largest k with u_k - (sum u_1..k - 1)/k > 0.
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cum = 0.0, theta = 0.0;
  int k = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    cum += u[i];
    double t = (cum - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) {
      theta = t;
      k = static_cast<int>(i + 1);
    }
  }
  (void)k;
  for (double& x : v) x = std::max(0.0, x - theta);
  return v;
}

namespace {

std::vector<double> ascend_from(
    std::vector<double> p, const std::function<double(const std::vector<double>&)>& f,
    const std::function<std::vector<double>(const std::vector<double>&)>& grad,
    int max_iter, double tol) {
  double fp = f(p);
  double step = 1.0;
  for (int it = 0; it < max_iter; ++it) {
    std::vector<double> g = grad(p);
    bool improved = false;
    for (int bt = 0; bt < 40; ++bt) {
      std::vector<double> q(p.size());
      for (size_t i = 0; i < p.size(); ++i) q[i] = p[i] + step * g[i];
      q = project_to_simplex(std::move(q));
      double fq = f(q);
      if (fq > fp + 1e-18) {
        improved = fq - fp > tol;
        p = std::move(q);
        fp = fq;
        step *= 2.0;
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
  }
  return p;
}

}  // namespace

std::vector<double> maximize_on_simplex(
    int dim, const std::function<double(const std::vector<double>&)>& f,
    const std::function<std::vector<double>(const std::vector<double>&)>& grad,
    const simplex_opt_options& opt) {
  if (dim < 1) throw std::invalid_argument("maximize_on_simplex: dim must be >= 1");
  std::vector<std::vector<double>> starts;
  starts.push_back(std::vector<double>(static_cast<size_t>(dim), 1.0 / dim));
  rng_stream rng(opt.seed);
  for (int s = 0; s < opt.random_starts; ++s) {
    std::vector<double> v(static_cast<size_t>(dim));
    double sum = 0.0;
    for (double& x : v) {
      x = -std::log(rng.uniform01_open0());
      sum += x;
    }
    for (double& x : v) x /= sum;
    starts.push_back(std::move(v));
  }
  std::vector<double> best;
  double best_v = -std::numeric_limits<double>::infinity();
  for (auto& s : starts) {
    std::vector<double> p = ascend_from(s, f, grad, opt.max_iter, opt.tol);
    double v = f(p);
    if (v > best_v) {
      best_v = v;
      best = std::move(p);
    }
  }
  return best;
}

std::vector<double> nelder_mead_max(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> start, double scale, int max_iter, double tol) {
  const size_t n = start.size();
  if (n == 0) throw std::invalid_argument("nelder_mead_max: empty start");
  const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
  std::vector<std::vector<double>> xs(n + 1, start);
  for (size_t i = 0; i < n; ++i) xs[i + 1][i] += scale;
  std::vector<double> fs(n + 1);
  for (size_t i = 0; i <= n; ++i) fs[i] = f(xs[i]);

  auto order = [&]() {
    std::vector<size_t> idx(n + 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fs[a] > fs[b]; });
    std::vector<std::vector<double>> xs2(n + 1);
    std::vector<double> fs2(n + 1);
    for (size_t i = 0; i <= n; ++i) {
      xs2[i] = xs[idx[i]];
      fs2[i] = fs[idx[i]];
    }
    xs = std::move(xs2);
    fs = std::move(fs2);
  };

  for (int it = 0; it < max_iter; ++it) {
    order();
    if (fs.front() - fs.back() < tol) break;
    std::vector<double> centroid(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) centroid[j] += xs[i][j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto blend = [&](double t) {
      std::vector<double> p(n);
      for (size_t j = 0; j < n; ++j) p[j] = centroid[j] + t * (centroid[j] - xs[n][j]);
      return p;
    };
    std::vector<double> xr = blend(alpha);
    double fr = f(xr);
    if (fr > fs[0]) {
      std::vector<double> xe = blend(gamma);
      double fe = f(xe);
      if (fe > fr) {
        xs[n] = std::move(xe);
        fs[n] = fe;
      } else {
        xs[n] = std::move(xr);
        fs[n] = fr;
      }
    } else if (fr > fs[n - 1]) {
      xs[n] = std::move(xr);
      fs[n] = fr;
    } else {
      std::vector<double> xc = blend(-rho);
      double fc = f(xc);
      if (fc > fs[n]) {
        xs[n] = std::move(xc);
        fs[n] = fc;
      } else {
        for (size_t i = 1; i <= n; ++i) {
          for (size_t j = 0; j < n; ++j) {
            xs[i][j] = xs[0][j] + sigma * (xs[i][j] - xs[0][j]);
          }
          fs[i] = f(xs[i]);
        }
      }
    }
  }
  order();
  return xs.front();
}

double bisect_decreasing(const std::function<double(double)>& f, double lo,
                         double hi, double x_tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo < 0.0) return lo;
  if (fhi > 0.0) return hi;
  for (int it = 0; it < 200 && (hi - lo) > x_tol; ++it) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace macexp
