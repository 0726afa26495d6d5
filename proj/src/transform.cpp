#include "macexp/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "macexp/errors.hpp"
#include "macexp/rng.hpp"
#include "macexp/su_exponents.hpp"

namespace macexp {

namespace {

constexpr double independence_tol = 1e-12;
constexpr int search_modulus_limit = 97;

int mod(int a, int m) { return ((a % m) + m) % m; }

void validate_spec(const mac2& mac, const transform_spec& spec) {
  if (!is_prime(spec.m)) throw non_prime_error("transform: modulus must be prime");
  if (mod(spec.k1, spec.m) == 0 || mod(spec.k2, spec.m) == 0) {
    throw std::invalid_argument("transform: coefficients must be nonzero mod m");
  }
  if (spec.f1.size() != static_cast<size_t>(spec.m) ||
      spec.f2.size() != static_cast<size_t>(spec.m)) {
    throw std::invalid_argument("transform: labelings must have m entries");
  }
  for (int v : spec.f1) {
    if (v < 0 || v >= mac.input1_size()) {
      throw std::invalid_argument("transform: f1 value outside input alphabet");
    }
  }
  for (int v : spec.f2) {
    if (v < 0 || v >= mac.input2_size()) {
      throw std::invalid_argument("transform: f2 value outside input alphabet");
    }
  }
  if (spec.g.size() != static_cast<size_t>(mac.output_size())) {
    throw std::invalid_argument("transform: folding map must cover the output alphabet");
  }
  for (int v : spec.g) {
    if (v < 0 || v >= spec.m) {
      throw std::invalid_argument("transform: folding value outside Z_m");
    }
  }
}

std::vector<double> conditional_noise(const mac2& mac, const transform_spec& spec,
                                      int v1, int v2) {
  const int m = spec.m;
  std::vector<double> noise(static_cast<size_t>(m), 0.0);
  for (int u1 = 0; u1 < m; ++u1) {
    for (int u2 = 0; u2 < m; ++u2) {
      int x1 = mod(v1 + u1, m);
      int x2 = mod(v2 + u2, m);
      int shift = mod(spec.k1 * x1 + spec.k2 * x2, m);
      for (int y = 0; y < mac.output_size(); ++y) {
        int n = mod(spec.g[static_cast<size_t>(y)] - shift, m);
        noise[static_cast<size_t>(n)] +=
            mac.prob(y, spec.f1[static_cast<size_t>(x1)], spec.f2[static_cast<size_t>(x2)]);
      }
    }
  }
  for (double& x : noise) x /= static_cast<double>(m) * m;
  return noise;
}

// Dither average folded analytically: summing the channel law over the
// dithered pair is the same sum as conditioning on message pair (0,0).
std::vector<double> marginal_noise(const mac2& mac, const transform_spec& spec) {
  return conditional_noise(mac, spec, 0, 0);
}

}  // namespace

bool is_prime(int m) {
  if (m < 2) return false;
  for (int d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

transform_spec transform_spec::identity(int m) {
  if (!is_prime(m)) throw non_prime_error("transform_spec::identity: modulus must be prime");
  transform_spec s;
  s.m = m;
  s.k1 = 1;
  s.k2 = 1;
  s.f1.resize(static_cast<size_t>(m));
  s.f2.resize(static_cast<size_t>(m));
  s.g.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    s.f1[static_cast<size_t>(i)] = i;
    s.f2[static_cast<size_t>(i)] = i;
    s.g[static_cast<size_t>(i)] = i;
  }
  return s;
}

std::vector<int> transform_spec::lex_key() const {
  std::vector<int> key;
  key.reserve(f1.size() + f2.size() + 2 + g.size());
  key.insert(key.end(), f1.begin(), f1.end());
  key.insert(key.end(), f2.begin(), f2.end());
  key.push_back(k1);
  key.push_back(k2);
  key.insert(key.end(), g.begin(), g.end());
  return key;
}

double independence_deviation(const mac2& mac, const transform_spec& spec) {
  validate_spec(mac, spec);
  std::vector<double> marginal = marginal_noise(mac, spec);
  double dev = 0.0;
  for (int v1 = 0; v1 < spec.m; ++v1) {
    for (int v2 = 0; v2 < spec.m; ++v2) {
      std::vector<double> cond = conditional_noise(mac, spec, v1, v2);
      for (int n = 0; n < spec.m; ++n) {
        dev = std::max(dev, std::abs(cond[static_cast<size_t>(n)] -
                                     marginal[static_cast<size_t>(n)]));
      }
    }
  }
  return dev;
}

virtual_channel apply_transform(const mac2& mac, const transform_spec& spec) {
  validate_spec(mac, spec);
  std::vector<double> noise = marginal_noise(mac, spec);
  double dev = independence_deviation(mac, spec);
  if (!(dev < independence_tol)) {
    throw independence_violation_error(
        "apply_transform: virtual noise depends on the message pair");
  }
  return virtual_channel{spec.m, pmf(std::move(noise)), mod(spec.k1, spec.m),
                         mod(spec.k2, spec.m)};
}

double binary_gamma(const mac2& mac) {
  if (mac.input1_size() != 2 || mac.input2_size() != 2 || mac.output_size() != 2) {
    throw std::invalid_argument("binary_gamma: channel must be binary");
  }
  double g = 0.0;
  for (int x1 = 0; x1 < 2; ++x1) {
    for (int x2 = 0; x2 < 2; ++x2) {
      g += mac.prob((x1 ^ x2) ^ 1, x1, x2);
    }
  }
  return 0.25 * g;
}

double virtual_exponent(const mac2& mac, const transform_spec& spec, double rate_sum) {
  virtual_channel vc = apply_transform(mac, spec);
  additive_noise_channel ch(vc.m, vc.noise);
  return additive_best_exponent(ch, rate_sum).value;
}

namespace {

// Space size |X1|^m * |X2|^m * (m-1)^2 * m^|Y|, saturating.
std::uint64_t checked_space_size(const mac2& mac, int m) {
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  auto mul_pow = [&](std::uint64_t acc, std::uint64_t base, int exp) {
    for (int i = 0; i < exp; ++i) {
      if (base != 0 && acc > cap / base) return cap;
      acc *= base;
    }
    return acc;
  };
  std::uint64_t total = 1;
  total = mul_pow(total, static_cast<std::uint64_t>(mac.input1_size()), m);
  total = mul_pow(total, static_cast<std::uint64_t>(mac.input2_size()), m);
  total = mul_pow(total, static_cast<std::uint64_t>(m - 1), 2);
  total = mul_pow(total, static_cast<std::uint64_t>(m), mac.output_size());
  return total;
}

transform_spec spec_from_index(const mac2& mac, int m, std::uint64_t idx) {
  transform_spec s;
  s.m = m;
  s.f1.resize(static_cast<size_t>(m));
  s.f2.resize(static_cast<size_t>(m));
  s.g.resize(static_cast<size_t>(mac.output_size()));
  for (int i = m - 1; i >= 0; --i) {
    s.f1[static_cast<size_t>(i)] = static_cast<int>(idx % mac.input1_size());
    idx /= mac.input1_size();
  }
  for (int i = m - 1; i >= 0; --i) {
    s.f2[static_cast<size_t>(i)] = static_cast<int>(idx % mac.input2_size());
    idx /= mac.input2_size();
  }
  s.k1 = 1 + static_cast<int>(idx % (m - 1));
  idx /= static_cast<std::uint64_t>(m - 1);
  s.k2 = 1 + static_cast<int>(idx % (m - 1));
  idx /= static_cast<std::uint64_t>(m - 1);
  for (int i = mac.output_size() - 1; i >= 0; --i) {
    s.g[static_cast<size_t>(i)] = static_cast<int>(idx % m);
    idx /= m;
  }
  return s;
}

transform_spec random_spec(const mac2& mac, int m, rng_stream& rng) {
  transform_spec s;
  s.m = m;
  s.f1.resize(static_cast<size_t>(m));
  s.f2.resize(static_cast<size_t>(m));
  s.g.resize(static_cast<size_t>(mac.output_size()));
  for (int i = 0; i < m; ++i) {
    s.f1[static_cast<size_t>(i)] =
        static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(mac.input1_size())));
    s.f2[static_cast<size_t>(i)] =
        static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(mac.input2_size())));
  }
  s.k1 = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(m - 1)));
  s.k2 = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(m - 1)));
  for (int y = 0; y < mac.output_size(); ++y) {
    s.g[static_cast<size_t>(y)] = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(m)));
  }
  return s;
}

}  // namespace

search_result search_transform(const mac2& mac, int m, std::uint64_t budget,
                               std::uint64_t seed, double reference_rate) {
  if (!is_prime(m)) throw non_prime_error("search_transform: modulus must be prime");
  if (m > search_modulus_limit) {
    throw too_large_error("search_transform: modulus exceeds the supported limit");
  }
  if (budget == 0) throw std::invalid_argument("search_transform: budget must be positive");

  search_result best;
  bool have_best = false;
  std::vector<int> best_key;
  auto consider = [&](const transform_spec& spec) {
    virtual_channel vc = apply_transform(mac, spec);
    additive_noise_channel ch(vc.m, vc.noise);
    double e = additive_best_exponent(ch, reference_rate).value;
    std::vector<int> key = spec.lex_key();
    if (!have_best || e > best.exponent ||
        (e == best.exponent && key < best_key)) {
      best.spec = spec;
      best.channel = vc;
      best.exponent = e;
      best_key = std::move(key);
      have_best = true;
    }
  };

  std::uint64_t space = checked_space_size(mac, m);
  if (space <= budget) {
    for (std::uint64_t idx = 0; idx < space; ++idx) {
      consider(spec_from_index(mac, m, idx));
    }
    best.evaluated = space;
    best.exhaustive = true;
  } else {
    rng_stream rng(seed);
    for (std::uint64_t i = 0; i < budget; ++i) {
      consider(random_spec(mac, m, rng));
    }
    best.evaluated = budget;
    best.exhaustive = false;
  }
  return best;
}

}  // namespace macexp
