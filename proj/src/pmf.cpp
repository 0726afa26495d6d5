#include "macexp/pmf.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace macexp {

pmf::pmf(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) {
    throw std::invalid_argument("pmf: alphabet size must be at least 2");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("pmf: entries must be finite and nonnegative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > prob_tol) {
    throw std::invalid_argument("pmf: entries sum to " + std::to_string(sum) +
                                ", expected 1");
  }
}

pmf pmf::uniform(int m) {
  if (m < 2) throw std::invalid_argument("pmf::uniform: m must be >= 2");
  return pmf(std::vector<double>(static_cast<size_t>(m), 1.0 / m));
}

pmf pmf::bernoulli(double p_one) {
  if (!(p_one >= 0.0 && p_one <= 1.0)) {
    throw std::invalid_argument("pmf::bernoulli: parameter outside [0,1]");
  }
  return pmf({1.0 - p_one, p_one});
}

pmf pmf::point_mass(int m, int at) {
  if (m < 2 || at < 0 || at >= m) {
    throw std::invalid_argument("pmf::point_mass: index outside alphabet");
  }
  std::vector<double> v(static_cast<size_t>(m), 0.0);
  v[static_cast<size_t>(at)] = 1.0;
  return pmf(std::move(v));
}

double pmf::shannon_entropy() const {
  double h = 0.0;
  for (double p : probs_) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

bool approx_equal(const pmf& a, const pmf& b, double tol) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace macexp
