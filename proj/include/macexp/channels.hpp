#pragma once

#include <vector>

#include "macexp/pmf.hpp"

namespace macexp {

// Discrete memoryless channel W(y|x), rows indexed by input symbol.
class dmc {
 public:
  explicit dmc(std::vector<pmf> rows);

  static dmc bsc(double crossover);

  int input_size() const { return static_cast<int>(rows_.size()); }
  int output_size() const { return rows_.front().size(); }
  const pmf& row(int x) const { return rows_[static_cast<size_t>(x)]; }
  double prob(int y, int x) const { return row(x)[y]; }

 private:
  std::vector<pmf> rows_;
};

// Two-user memoryless multiple-access channel W(y|x1,x2).
class mac2 {
 public:
  mac2(int input1, int input2, std::vector<pmf> table);  // table[x1*input2+x2]

  int input1_size() const { return input1_; }
  int input2_size() const { return input2_; }
  int output_size() const { return table_.front().size(); }
  const pmf& row(int x1, int x2) const {
    return table_[static_cast<size_t>(x1) * input2_ + x2];
  }
  double prob(int y, int x1, int x2) const { return row(x1, x2)[y]; }

  // Single-user channel over the pair alphabet, input index x1*input2+x2.
  dmc product_dmc() const;

 private:
  int input1_;
  int input2_;
  std::vector<pmf> table_;
};

// Channel Y = X (+) N over Z_m with noise law N.
class additive_noise_channel {
 public:
  additive_noise_channel(int modulus, pmf noise);

  int modulus() const { return modulus_; }
  const pmf& noise() const { return noise_; }
  dmc to_dmc() const;
  double capacity() const;  // nats, log m - H(N)

 private:
  int modulus_;
  pmf noise_;
};

// MAC Y = X1 (+) X2 (+) N over Z_m.
mac2 mac_from_additive_noise(const pmf& noise);

// True when the table matches a single shifted noise law within tol.
bool is_additive(const mac2& mac, double tol = prob_tol);

// Extracts the additive representation; throws not_additive_error otherwise.
additive_noise_channel associated_single_user(const mac2& mac, double tol = prob_tol);

// Binary MAC with Y = X1 xor X2 xor Z where Z is Bernoulli(q) when the
// inputs agree and Bernoulli(q(1-p) + p(1-q)) when they differ.
mac2 binary_example_channel(double q, double p);

}  // namespace macexp
