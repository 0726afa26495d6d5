#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "macexp/channels.hpp"
#include "macexp/errors.hpp"
#include "macexp/pmf.hpp"

using namespace macexp;

namespace {

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
}

}  // namespace

TEST_CASE("pmf validation") {
  CHECK_THROWS_AS(pmf({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(pmf({0.5, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(pmf({1.2, -0.2}), std::invalid_argument);
  CHECK_NOTHROW(pmf({0.25, 0.75}));

  pmf u = pmf::uniform(4);
  for (int i = 0; i < 4; ++i) CHECK(u[i] == 0.25);

  pmf b = pmf::bernoulli(0.1);
  CHECK(b[0] == doctest::Approx(0.9));
  CHECK(b[1] == doctest::Approx(0.1));

  pmf pt = pmf::point_mass(3, 2);
  CHECK(pt[2] == 1.0);
  CHECK(pt[0] == 0.0);
}

TEST_CASE("shannon entropy closed forms") {
  CHECK(pmf::uniform(8).shannon_entropy() == doctest::Approx(std::log(8.0)).epsilon(1e-12));
  CHECK(pmf::point_mass(5, 1).shannon_entropy() == 0.0);
  CHECK(pmf::bernoulli(0.3).shannon_entropy() ==
        doctest::Approx(binary_entropy(0.3)).epsilon(1e-12));
}

TEST_CASE("bsc rows") {
  dmc ch = dmc::bsc(0.1);
  CHECK(ch.input_size() == 2);
  CHECK(ch.output_size() == 2);
  CHECK(ch.prob(0, 0) == doctest::Approx(0.9));
  CHECK(ch.prob(1, 0) == doctest::Approx(0.1));
  CHECK(ch.prob(0, 1) == doctest::Approx(0.1));
  CHECK(ch.prob(1, 1) == doctest::Approx(0.9));
}

TEST_CASE("additive channel capacity matches log m minus noise entropy") {
  additive_noise_channel ch(3, pmf({0.8, 0.15, 0.05}));
  double expect = std::log(3.0) - pmf({0.8, 0.15, 0.05}).shannon_entropy();
  CHECK(ch.capacity() == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("additive mac round trip") {
  pmf noise({0.7, 0.2, 0.1});
  mac2 mac = mac_from_additive_noise(noise);
  CHECK(mac.input1_size() == 3);
  CHECK(mac.input2_size() == 3);
  CHECK(is_additive(mac));
  additive_noise_channel assoc = associated_single_user(mac);
  CHECK(approx_equal(assoc.noise(), noise, 1e-12));

  // Shifting both inputs permutes the output row consistently.
  for (int x1 = 0; x1 < 3; ++x1) {
    for (int x2 = 0; x2 < 3; ++x2) {
      for (int y = 0; y < 3; ++y) {
        int z = ((y - x1 - x2) % 3 + 3) % 3;
        CHECK(mac.prob(y, x1, x2) == doctest::Approx(noise[z]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("non-additive channel rejected by associated_single_user") {
  // Output ignores the second user entirely; slices are not shifts.
  std::vector<pmf> rows;
  rows.push_back(pmf({0.9, 0.1}));
  rows.push_back(pmf({0.9, 0.1}));
  rows.push_back(pmf({0.2, 0.8}));
  rows.push_back(pmf({0.2, 0.8}));
  mac2 mac(2, 2, rows);
  CHECK_FALSE(is_additive(mac));
  CHECK_THROWS_AS(associated_single_user(mac), not_additive_error);
}

TEST_CASE("binary example channel law") {
  double q = 0.2, p = 0.3;
  mac2 mac = binary_example_channel(q, p);
  double s = q * (1.0 - p) + p * (1.0 - q);
  for (int x1 = 0; x1 < 2; ++x1) {
    for (int x2 = 0; x2 < 2; ++x2) {
      double flip = (x1 == x2) ? q : s;
      int same = x1 ^ x2;
      CHECK(mac.prob(same, x1, x2) == doctest::Approx(1.0 - flip).epsilon(1e-12));
      CHECK(mac.prob(1 - same, x1, x2) == doctest::Approx(flip).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(binary_example_channel(-0.1, 0.5), std::domain_error);
  CHECK_THROWS_AS(binary_example_channel(0.5, 1.2), std::domain_error);
}

TEST_CASE("binary example additivity boundary") {
  CHECK(is_additive(binary_example_channel(0.1, 0.0)));
  CHECK(is_additive(binary_example_channel(0.5, 0.7)));
  CHECK_FALSE(is_additive(binary_example_channel(0.1, 0.3)));
}

TEST_CASE("product dmc enumerates input pairs") {
  mac2 mac = binary_example_channel(0.1, 0.4);
  dmc prod = mac.product_dmc();
  CHECK(prod.input_size() == 4);
  CHECK(prod.output_size() == 2);
  for (int x1 = 0; x1 < 2; ++x1) {
    for (int x2 = 0; x2 < 2; ++x2) {
      for (int y = 0; y < 2; ++y) {
        CHECK(prod.prob(y, x1 * 2 + x2) == doctest::Approx(mac.prob(y, x1, x2)));
      }
    }
  }
}
