#pragma once

#include <cstdint>
#include <vector>

#include "macexp/channels.hpp"
#include "macexp/pmf.hpp"

namespace macexp {

bool is_prime(int m);

// Dithered modulo-m front end: each user relabels its message symbol v
// through f_i after adding a private uniform dither, the decoder folds the
// channel output through g, and the virtual channel output is
// g(Y) - k1 X1' - k2 X2' mod m.
struct transform_spec {
  int m = 2;                // prime modulus of the virtual channel
  std::vector<int> f1;      // size m, values in the first input alphabet
  std::vector<int> f2;      // size m, values in the second input alphabet
  int k1 = 1;               // nonzero coefficients mod m
  int k2 = 1;
  std::vector<int> g;       // size |Y|, values in Z_m

  // Identity labeling; valid for channels whose alphabets all equal m.
  static transform_spec identity(int m);

  // Flattened (f1, f2, k1, k2, g) for deterministic tie-breaking.
  std::vector<int> lex_key() const;
};

struct virtual_channel {
  int m = 2;
  pmf noise = pmf::uniform(2);
  int k1 = 1;
  int k2 = 1;
};

// Largest deviation between the virtual-noise law conditioned on a message
// pair and its marginal, enumerated over all dither values.
double independence_deviation(const mac2& mac, const transform_spec& spec);

// Computes the virtual additive channel; throws independence_violation_error
// when the noise law fails the per-message independence certificate (1e-12).
virtual_channel apply_transform(const mac2& mac, const transform_spec& spec);

// Crossover parameter of the binary virtual channel under the identity
// labeling: mean over input pairs of P(Y != X1 xor X2).
double binary_gamma(const mac2& mac);

// Best-known exponent of the virtual additive channel at the given sum rate.
double virtual_exponent(const mac2& mac, const transform_spec& spec, double rate_sum);

struct search_result {
  transform_spec spec;
  virtual_channel channel;
  double exponent = 0.0;
  std::uint64_t evaluated = 0;
  bool exhaustive = false;
};

// Best transform over all specs with modulus m, by exhaustive enumeration
// when the space fits the budget and seeded uniform sampling otherwise.
// Ties resolve to the lexicographically smallest spec.
search_result search_transform(const mac2& mac, int m, std::uint64_t budget,
                               std::uint64_t seed, double reference_rate = 0.0);

}  // namespace macexp
