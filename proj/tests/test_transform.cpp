#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "macexp/channels.hpp"
#include "macexp/errors.hpp"
#include "macexp/su_exponents.hpp"
#include "macexp/transform.hpp"

using namespace macexp;

namespace {

mac2 random_mac(std::mt19937& gen, int m1, int m2, int outputs) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<pmf> rows;
  for (int i = 0; i < m1 * m2; ++i) {
    std::vector<double> w(static_cast<size_t>(outputs));
    double total = 0.0;
    for (double& v : w) {
      v = u(gen);
      total += v;
    }
    for (double& v : w) v /= total;
    rows.push_back(pmf(w));
  }
  return mac2(m1, m2, rows);
}

transform_spec random_spec(std::mt19937& gen, const mac2& mac, int m) {
  transform_spec s;
  s.m = m;
  std::uniform_int_distribution<int> d1(0, mac.input1_size() - 1);
  std::uniform_int_distribution<int> d2(0, mac.input2_size() - 1);
  std::uniform_int_distribution<int> dk(1, m - 1);
  std::uniform_int_distribution<int> dg(0, m - 1);
  for (int i = 0; i < m; ++i) {
    s.f1.push_back(d1(gen));
    s.f2.push_back(d2(gen));
  }
  s.k1 = dk(gen);
  s.k2 = dk(gen);
  for (int y = 0; y < mac.output_size(); ++y) s.g.push_back(dg(gen));
  return s;
}

}  // namespace

TEST_CASE("primality table") {
  for (int p : {2, 3, 5, 7, 11, 97}) CHECK(is_prime(p));
  for (int c : {-3, 0, 1, 4, 6, 9, 91, 100}) CHECK_FALSE(is_prime(c));
}

TEST_CASE("identity transform recovers the additive noise") {
  mac2 bin = mac_from_additive_noise(pmf::bernoulli(0.1));
  virtual_channel vb = apply_transform(bin, transform_spec::identity(2));
  CHECK(vb.m == 2);
  CHECK(approx_equal(vb.noise, pmf::bernoulli(0.1), 1e-15));
  CHECK(independence_deviation(bin, transform_spec::identity(2)) < 1e-15);

  pmf tern({0.7, 0.2, 0.1});
  mac2 mac3 = mac_from_additive_noise(tern);
  virtual_channel vt = apply_transform(mac3, transform_spec::identity(3));
  CHECK(approx_equal(vt.noise, tern, 1e-15));
}

TEST_CASE("any labeling yields dither independence") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 12; ++trial) {
    int outputs = (trial % 2 == 0) ? 2 : 3;
    mac2 mac = random_mac(gen, 2, 2, outputs);
    for (int m : {2, 3}) {
      transform_spec spec = random_spec(gen, mac, m);
      CHECK(independence_deviation(mac, spec) < 1e-12);
      virtual_channel vc = apply_transform(mac, spec);
      CHECK(vc.m == m);
      CHECK(vc.noise.size() == m);
    }
  }
}

TEST_CASE("transform validation") {
  mac2 mac = binary_example_channel(0.1, 0.3);
  transform_spec id = transform_spec::identity(2);

  transform_spec bad_f = id;
  bad_f.f1.push_back(0);
  CHECK_THROWS_AS(apply_transform(mac, bad_f), std::invalid_argument);

  transform_spec bad_val = id;
  bad_val.f2[0] = 5;
  CHECK_THROWS_AS(apply_transform(mac, bad_val), std::invalid_argument);

  transform_spec bad_k = id;
  bad_k.k1 = 0;
  CHECK_THROWS_AS(apply_transform(mac, bad_k), std::invalid_argument);

  transform_spec bad_g = id;
  bad_g.g = {0};
  CHECK_THROWS_AS(apply_transform(mac, bad_g), std::invalid_argument);

  transform_spec bad_m = id;
  bad_m.m = 4;
  bad_m.f1 = {0, 0, 0, 0};
  bad_m.f2 = {0, 0, 0, 0};
  bad_m.g = {0, 0};
  CHECK_THROWS_AS(apply_transform(mac, bad_m), non_prime_error);
  CHECK_THROWS_AS(transform_spec::identity(6), non_prime_error);
}

TEST_CASE("binary gamma closed form") {
  for (double q : {0.05, 0.1, 0.25}) {
    for (double p : {0.0, 0.3, 0.7, 1.0}) {
      mac2 mac = binary_example_channel(q, p);
      double expect = q + 0.5 * p - p * q;
      CHECK(binary_gamma(mac) == doctest::Approx(expect).epsilon(1e-12));
      virtual_channel vc = apply_transform(mac, transform_spec::identity(2));
      CHECK(vc.noise[1] == doctest::Approx(expect).epsilon(1e-12));
    }
  }
  mac2 tern = mac_from_additive_noise(pmf({0.8, 0.1, 0.1}));
  CHECK_THROWS_AS(binary_gamma(tern), std::invalid_argument);
}

TEST_CASE("virtual exponent matches the additive evaluation") {
  mac2 mac = binary_example_channel(0.1, 0.3);
  double gamma = binary_gamma(mac);
  additive_noise_channel ch(2, pmf::bernoulli(gamma));
  double expect = additive_best_exponent(ch, 0.0).value;
  CHECK(virtual_exponent(mac, transform_spec::identity(2), 0.0) ==
        doctest::Approx(expect).epsilon(1e-12));
  // Fully scrambled channel: uniform virtual noise, dead exponent.
  CHECK(virtual_exponent(binary_example_channel(0.1, 1.0), transform_spec::identity(2), 0.0) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("exhaustive search over the binary spec space") {
  mac2 mac = binary_example_channel(0.1, 0.3);
  search_result res = search_transform(mac, 2, 1000, 42);
  CHECK(res.exhaustive);
  CHECK(res.evaluated == 64);  // 2^2 * 2^2 * 1 * 2^2 labelings
  CHECK(res.exponent >= virtual_exponent(mac, transform_spec::identity(2), 0.0) - 1e-12);
  CHECK(res.exponent == doctest::Approx(virtual_exponent(mac, res.spec, 0.0)).epsilon(1e-12));

  // Deterministic, including tie resolution.
  search_result res2 = search_transform(mac, 2, 1000, 99);
  CHECK(res.spec.lex_key() == res2.spec.lex_key());
  CHECK(res.exponent == res2.exponent);
}

TEST_CASE("sampled search respects the budget and the seed") {
  mac2 mac = binary_example_channel(0.1, 0.3);
  search_result a = search_transform(mac, 2, 20, 5);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.evaluated == 20);
  search_result b = search_transform(mac, 2, 20, 5);
  CHECK(a.spec.lex_key() == b.spec.lex_key());
  CHECK(a.exponent == b.exponent);
  // A sampled run can never beat the exhaustive optimum.
  search_result full = search_transform(mac, 2, 1000, 5);
  CHECK(a.exponent <= full.exponent + 1e-15);
}

TEST_CASE("search guards") {
  mac2 mac = binary_example_channel(0.1, 0.3);
  CHECK_THROWS_AS(search_transform(mac, 4, 10, 1), non_prime_error);
  CHECK_THROWS_AS(search_transform(mac, 101, 10, 1), too_large_error);
  CHECK_THROWS_AS(search_transform(mac, 2, 0, 1), std::invalid_argument);
}
