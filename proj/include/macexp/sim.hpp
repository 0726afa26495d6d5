#pragma once

#include <cstdint>
#include <vector>

#include "macexp/linear_codes.hpp"
#include "macexp/pmf.hpp"

namespace macexp {

// Monte Carlo estimate with a 95% confidence interval. Degenerate counts
// (0 or all trials) use the normal interval, which collapses to a point;
// small nonzero counts use the Wilson score interval; large counts use the
// normal approximation.
struct mc_estimate {
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;

  bool covers(double p) const { return ci_low <= p && p <= ci_high; }
};

mc_estimate mc_from_counts(std::uint64_t trials, std::uint64_t errors);

// Inverse-CDF sampling: smallest index whose cumulative probability exceeds u.
int sample_from_pmf(const pmf& dist, double u01);

// Error rate of a linear code over the additive noise channel, transmitting
// the zero codeword (valid because the noise is independent of the input and
// both exact computations condition on message zero).
mc_estimate simulate_single_user(const generator_matrix& g, const pmf& noise,
                                 tie_rule rule, std::uint64_t trials,
                                 std::uint64_t seed);

struct split_mc_estimates {
  mc_estimate joint;
  mc_estimate user1;
  mc_estimate user2;
};

// Two-user error rates of a row-split code over the same additive channel,
// transmitting the all-zero pair.
split_mc_estimates simulate_split_mac(const split_code& sc, const pmf& noise,
                                      tie_rule rule, std::uint64_t trials,
                                      std::uint64_t seed);

double q_function(double x);  // Gaussian upper tail

// One-shot nested PAM experiment: user 1 draws from the coarse constellation
// {0, l1, ..., (l2-1)*l1} and user 2 from the fine one {0, ..., l1-1}, both
// centered; their sum is a centered unit-spaced l0-PAM point (l0 = l1*l2).
// The receiver quantizes the noisy sum to the nearest constellation point and
// splits it back into the two messages by digit extraction.
struct pam_mc_result {
  mc_estimate joint;
  mc_estimate user1;
  mc_estimate user2;
  double predicted_symbol_error = 0.0;  // 2 (l0-1)/l0 Q(1/(2 sigma))
};

// Quantize a received value to an index in {0, ..., l0-1} for the centered
// unit-spaced l0-PAM constellation; exact midpoints resolve to the
// smaller-magnitude point (these have probability zero under Gaussian noise).
int quantize_pam(double y, int l0);

pam_mc_result simulate_nested_pam(int l1, int l2, double sigma,
                                  std::uint64_t trials, std::uint64_t seed);

}  // namespace macexp
