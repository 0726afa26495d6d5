#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "macexp/errors.hpp"
#include "macexp/linear_codes.hpp"
#include "macexp/pmf.hpp"

using namespace macexp;

namespace {

generator_matrix hamming74() {
  // Systematic [7,4] generator with minimum distance 3.
  std::vector<int> e{
      1, 0, 0, 0, 1, 1, 0,
      0, 1, 0, 0, 1, 0, 1,
      0, 0, 1, 0, 0, 1, 1,
      0, 0, 0, 1, 1, 1, 1,
  };
  return generator_matrix(2, 4, 7, e);
}

}  // namespace

TEST_CASE("rank over prime fields") {
  CHECK(gf_rank(2, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}) == 3);
  CHECK(gf_rank(2, 2, 3, {1, 1, 0, 0, 0, 0}) == 1);
  // Rows (1,2) and (2,1) are proportional mod 3: (2,1) = 2 * (1,2).
  CHECK(gf_rank(3, 2, 2, {1, 2, 2, 1}) == 1);
  CHECK(gf_rank(3, 2, 2, {1, 2, 2, 2}) == 2);
  CHECK(gf_rank(5, 1, 4, {0, 0, 0, 0}) == 0);
}

TEST_CASE("generator construction guards") {
  CHECK_THROWS_AS(generator_matrix(4, 1, 2, {1, 1}), non_prime_error);
  CHECK_THROWS_AS(generator_matrix(2, 3, 2, {1, 0, 0, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(generator_matrix(2, 1, 3, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(generator_matrix(2, 1, 2, {1, 2}), std::invalid_argument);
  // Rank-deficient rows are rejected.
  CHECK_THROWS_AS(generator_matrix(2, 2, 3, {1, 1, 0, 1, 1, 0}), std::invalid_argument);
}

TEST_CASE("random generators are reproducible and full rank") {
  generator_matrix a = generator_matrix::random_full_rank(3, 2, 5, 77);
  generator_matrix b = generator_matrix::random_full_rank(3, 2, 5, 77);
  CHECK(a.entries() == b.entries());
  CHECK(gf_rank(3, 2, 5, a.entries()) == 2);
  generator_matrix c = generator_matrix::random_full_rank(3, 2, 5, 78);
  CHECK(gf_rank(3, 2, 5, c.entries()) == 2);
}

TEST_CASE("encoding and codebooks") {
  generator_matrix rep(2, 1, 3, {1, 1, 1});
  CHECK(rep.rate() == doctest::Approx(std::log(2.0) / 3.0).epsilon(1e-15));
  auto cb = rep.codebook();
  REQUIRE(cb.size() == 2);
  CHECK(cb[0] == std::vector<int>{0, 0, 0});
  CHECK(cb[1] == std::vector<int>{1, 1, 1});

  generator_matrix g3(3, 2, 3, {1, 1, 0, 0, 1, 1});
  std::vector<int> out(3);
  g3.encode({1, 2}, out);
  CHECK(out == std::vector<int>{1, 0, 2});
  CHECK(g3.codebook().size() == 9);

  // k = 0 is the trivial code holding only the zero word.
  generator_matrix trivial(2, 0, 2, {});
  auto tcb = trivial.codebook();
  REQUIRE(tcb.size() == 1);
  CHECK(tcb[0] == std::vector<int>{0, 0});
  CHECK(trivial.rate() == 0.0);
}

TEST_CASE("row splits") {
  generator_matrix g3(3, 2, 3, {1, 1, 0, 0, 1, 1});
  split_code sc = split(g3, 1);
  CHECK(sc.user1().entries() == std::vector<int>{1, 1, 0});
  CHECK(sc.user2().entries() == std::vector<int>{0, 1, 1});
  CHECK(sc.rate1() == doctest::Approx(std::log(3.0) / 3.0).epsilon(1e-15));
  CHECK(sc.rate2() == doctest::Approx(std::log(3.0) / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(split(g3, 3), std::invalid_argument);
  CHECK_THROWS_AS(split(g3, -1), std::invalid_argument);
}

TEST_CASE("noise log likelihood is the canonical left to right sum") {
  pmf noise = pmf::bernoulli(0.1);
  double expect = std::log(0.9) + std::log(0.1) + std::log(0.9);
  CHECK(noise_log_prob(noise, {0, 1, 0}) == expect);
  CHECK(std::isinf(noise_log_prob(pmf::point_mass(3, 0), {0, 1, 0})));
}

TEST_CASE("repetition code error probability") {
  generator_matrix rep(2, 1, 3, {1, 1, 1});
  double q = 0.1;
  double expect = 3 * q * q * (1 - q) + q * q * q;
  CHECK(exact_ml_error_probability(rep, pmf::bernoulli(q), tie_rule::lexicographic_min) ==
        doctest::Approx(expect).epsilon(1e-12));
  // No ties for odd length, so both rules agree.
  CHECK(exact_ml_error_probability(rep, pmf::bernoulli(q), tie_rule::tie_is_error) ==
        doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("hamming code matches the perfect code formula") {
  generator_matrix g = hamming74();
  double q = 0.05;
  double expect = 1.0 - std::pow(1 - q, 7) - 7 * q * std::pow(1 - q, 6);
  for (tie_rule rule : {tie_rule::lexicographic_min, tie_rule::tie_is_error}) {
    CHECK(exact_ml_error_probability(g, pmf::bernoulli(q), rule) ==
          doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("conditioning on a message agrees with the coset computation") {
  generator_matrix g = hamming74();
  pmf noise = pmf::bernoulli(0.08);
  std::vector<int> zero{0, 0, 0, 0};
  std::vector<int> other{1, 0, 1, 1};
  for (tie_rule rule : {tie_rule::lexicographic_min, tie_rule::tie_is_error}) {
    double fast = exact_ml_error_probability(g, noise, rule);
    CHECK(exact_ml_error_probability_for_message(g, noise, rule, zero) == fast);
    // No ties occur here, so every message sees the same error probability.
    CHECK(exact_ml_error_probability_for_message(g, noise, rule, other) ==
          doctest::Approx(fast).epsilon(1e-14));
  }
}

TEST_CASE("uniform noise makes the lexicographic rule trivially biased") {
  generator_matrix rep(2, 1, 2, {1, 1});
  pmf uniform = pmf::uniform(2);
  CHECK(exact_ml_error_probability(rep, uniform, tie_rule::lexicographic_min) == 0.0);
  CHECK(exact_ml_error_probability(rep, uniform, tie_rule::tie_is_error) == 1.0);
  CHECK(exact_ml_error_probability_for_message(rep, uniform, tie_rule::lexicographic_min,
                                               {1}) == 1.0);
}

TEST_CASE("tie handling hand example") {
  // Length-2 repetition code under asymmetric flips: the weight-one coset
  // ties exactly, so the two rules separate cleanly.
  generator_matrix rep(2, 1, 2, {1, 1});
  pmf noise = pmf::bernoulli(0.3);
  CHECK(exact_ml_error_probability(rep, noise, tie_rule::lexicographic_min) ==
        doctest::Approx(0.09).epsilon(1e-15));
  CHECK(exact_ml_error_probability(rep, noise, tie_rule::tie_is_error) ==
        doctest::Approx(0.51).epsilon(1e-15));
}

TEST_CASE("split decoding is bit exact with the parent code") {
  struct config {
    int p, k, n, k1;
    pmf noise;
  };
  std::vector<config> cases{
      {2, 4, 6, 2, pmf::bernoulli(0.12)},
      {2, 3, 5, 1, pmf::bernoulli(0.3)},
      {3, 2, 4, 1, pmf({0.8, 0.1, 0.1})},
      {3, 3, 4, 2, pmf({0.6, 0.25, 0.15})},
  };
  int seed = 1000;
  for (const config& c : cases) {
    generator_matrix g = generator_matrix::random_full_rank(c.p, c.k, c.n, seed++);
    split_code sc = split(g, c.k1);
    for (tie_rule rule : {tie_rule::lexicographic_min, tie_rule::tie_is_error}) {
      split_error_probs probs = exact_split_mac_error_probability(sc, c.noise, rule);
      double parent = exact_ml_error_probability(g, c.noise, rule);
      CHECK(probs.joint == parent);
      CHECK(probs.user1 <= probs.joint + 1e-15);
      CHECK(probs.user2 <= probs.joint + 1e-15);
      CHECK(probs.joint <= probs.user1 + probs.user2 + 1e-15);
    }
  }
}

TEST_CASE("split codebooks add up to the parent codebook") {
  generator_matrix g = generator_matrix::random_full_rank(3, 3, 5, 5);
  split_code sc = split(g, 1);
  auto sum = minkowski_sum(codebook_set(sc.user1()), codebook_set(sc.user2()), 3);
  CHECK(sum == codebook_set(g));
}

TEST_CASE("pair decoding recovers a clean transmission") {
  generator_matrix g3(3, 2, 3, {1, 1, 0, 0, 1, 1});
  split_code sc = split(g3, 1);
  pmf noise({0.98, 0.01, 0.01});
  pair_decode_result res = ml_decode_pair(sc, {1, 0, 2}, noise);
  CHECK(res.u1 == std::vector<int>{1});
  CHECK(res.u2 == std::vector<int>{2});
  CHECK_FALSE(res.tie);
}

TEST_CASE("enumeration guard") {
  generator_matrix wide = generator_matrix::random_full_rank(2, 1, 23, 3);
  CHECK_THROWS_AS(
      exact_ml_error_probability(wide, pmf::bernoulli(0.1), tie_rule::lexicographic_min),
      too_large_error);
}
