#pragma once

#include <vector>

namespace macexp {

inline constexpr double prob_tol = 1e-12;

// Probability mass function over Z_m, m >= 2. Entries are validated at
// construction (nonnegative, sum within prob_tol of 1) and never renormalized.
class pmf {
 public:
  explicit pmf(std::vector<double> probs);

  static pmf uniform(int m);
  static pmf bernoulli(double p_one);  // over {0,1}, P(1) = p_one
  static pmf point_mass(int m, int at);

  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[static_cast<size_t>(i)]; }
  const std::vector<double>& probs() const { return probs_; }

  double shannon_entropy() const;  // nats

 private:
  std::vector<double> probs_;
};

bool approx_equal(const pmf& a, const pmf& b, double tol = prob_tol);

}  // namespace macexp
