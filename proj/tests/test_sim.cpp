#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "doctest.h"
#include "macexp/linear_codes.hpp"
#include "macexp/pmf.hpp"
#include "macexp/sim.hpp"

using namespace macexp;

namespace {
constexpr double z95 = 1.959963984540054;

double three_sigma(double p, double n) { return 3.0 * std::sqrt(p * (1.0 - p) / n); }
}  // namespace

TEST_CASE("interval construction from counts") {
  CHECK_THROWS_AS(mc_from_counts(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(mc_from_counts(10, 11), std::invalid_argument);

  mc_estimate none = mc_from_counts(100, 0);
  CHECK(none.p_hat == 0.0);
  CHECK(none.ci_low == 0.0);
  CHECK(none.ci_high == 0.0);
  CHECK(none.covers(0.0));
  CHECK_FALSE(none.covers(0.01));

  mc_estimate all = mc_from_counts(50, 50);
  CHECK(all.p_hat == 1.0);
  CHECK(all.ci_low == 1.0);
  CHECK(all.ci_high == 1.0);

  // Small nonzero counts use the Wilson score interval.
  mc_estimate small = mc_from_counts(1000, 4);
  {
    double n = 1000.0, p = 0.004;
    double denom = 1.0 + z95 * z95 / n;
    double center = (p + z95 * z95 / (2.0 * n)) / denom;
    double half = z95 / denom * std::sqrt(p * (1.0 - p) / n + z95 * z95 / (4.0 * n * n));
    CHECK(small.p_hat == p);
    CHECK(small.ci_low == doctest::Approx(center - half).epsilon(1e-14));
    CHECK(small.ci_high == doctest::Approx(center + half).epsilon(1e-14));
    CHECK(small.ci_low > 0.0);
  }

  // Large counts use the normal interval.
  mc_estimate big = mc_from_counts(1000, 100);
  {
    double half = z95 * std::sqrt(0.1 * 0.9 / 1000.0);
    CHECK(big.ci_low == doctest::Approx(0.1 - half).epsilon(1e-14));
    CHECK(big.ci_high == doctest::Approx(0.1 + half).epsilon(1e-14));
  }

  // Normal intervals clamp into [0, 1].
  mc_estimate high = mc_from_counts(20, 19);
  CHECK(high.ci_high == 1.0);
  CHECK(high.ci_low < 1.0);
}

TEST_CASE("inverse cdf sampling") {
  pmf b = pmf::bernoulli(0.3);
  CHECK(sample_from_pmf(b, 0.0) == 0);
  CHECK(sample_from_pmf(b, 0.699999) == 0);
  CHECK(sample_from_pmf(b, 0.7) == 1);
  CHECK(sample_from_pmf(b, 0.999999) == 1);
  pmf u4 = pmf::uniform(4);
  CHECK(sample_from_pmf(u4, 0.25) == 1);
  CHECK(sample_from_pmf(u4, 0.9) == 3);
  // A zero-probability symbol is never drawn, even at u = 0.
  CHECK(sample_from_pmf(pmf({0.0, 1.0}), 0.0) == 1);
}

TEST_CASE("single user simulation is reproducible and covers the exact value") {
  generator_matrix rep(2, 1, 3, {1, 1, 1});
  pmf noise = pmf::bernoulli(0.1);
  mc_estimate a = simulate_single_user(rep, noise, tie_rule::lexicographic_min, 20000, 1);
  mc_estimate b = simulate_single_user(rep, noise, tie_rule::lexicographic_min, 20000, 1);
  CHECK(a.errors == b.errors);
  CHECK(a.trials == 20000);

  double exact = exact_ml_error_probability(rep, noise, tie_rule::lexicographic_min);
  CHECK(std::abs(a.p_hat - exact) <= three_sigma(exact, 20000.0));
}

TEST_CASE("split simulation tracks the exact split probabilities") {
  generator_matrix g = generator_matrix::random_full_rank(2, 3, 5, 11);
  split_code sc = split(g, 1);
  pmf noise = pmf::bernoulli(0.1);
  tie_rule rule = tie_rule::lexicographic_min;
  split_error_probs exact = exact_split_mac_error_probability(sc, noise, rule);
  split_mc_estimates est = simulate_split_mac(sc, noise, rule, 20000, 2);
  CHECK(std::abs(est.joint.p_hat - exact.joint) <= three_sigma(exact.joint, 20000.0));
  CHECK(std::abs(est.user1.p_hat - exact.user1) <= three_sigma(exact.user1, 20000.0));
  CHECK(std::abs(est.user2.p_hat - exact.user2) <= three_sigma(exact.user2, 20000.0));
  // A user error is always a joint error.
  CHECK(est.user1.errors <= est.joint.errors);
  CHECK(est.user2.errors <= est.joint.errors);
  CHECK(est.joint.errors <= est.user1.errors + est.user2.errors);
}

TEST_CASE("pam quantizer geometry") {
  // l0 = 4: points at -1.5, -0.5, 0.5, 1.5.
  CHECK(quantize_pam(-10.0, 4) == 0);
  CHECK(quantize_pam(10.0, 4) == 3);
  CHECK(quantize_pam(0.4, 4) == 2);
  CHECK(quantize_pam(-0.6, 4) == 1);
  CHECK(quantize_pam(1.49, 4) == 3);
  // Midpoints resolve toward the smaller-magnitude point.
  CHECK(quantize_pam(1.0, 4) == 2);
  CHECK(quantize_pam(-1.0, 4) == 1);
  CHECK(quantize_pam(0.5, 3) == 1);   // between 0 and 1, keeps 0
  CHECK(quantize_pam(-0.5, 3) == 1);  // between -1 and 0, keeps 0
  CHECK(quantize_pam(0.0, 2) == 0);   // equal magnitudes fall to the lower index
  CHECK(quantize_pam(0.0, 5) == 2);
}

TEST_CASE("gaussian tail function") {
  CHECK(q_function(0.0) == 0.5);
  CHECK(q_function(z95) == doctest::Approx(0.025).epsilon(1e-6));
  CHECK(q_function(-1.3) + q_function(1.3) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("nested pam simulation") {
  int l1 = 2, l2 = 2;
  double sigma = 0.35;
  pam_mc_result res = simulate_nested_pam(l1, l2, sigma, 20000, 3);
  int l0 = l1 * l2;
  double predicted = 2.0 * (l0 - 1) / l0 * q_function(1.0 / (2.0 * sigma));
  CHECK(res.predicted_symbol_error == doctest::Approx(predicted).epsilon(1e-15));
  CHECK(std::abs(res.joint.p_hat - predicted) <= three_sigma(predicted, 20000.0));
  CHECK(res.user1.errors <= res.joint.errors);
  CHECK(res.user2.errors <= res.joint.errors);
  CHECK(res.joint.errors <= res.user1.errors + res.user2.errors);

  pam_mc_result again = simulate_nested_pam(l1, l2, sigma, 20000, 3);
  CHECK(again.joint.errors == res.joint.errors);
}
