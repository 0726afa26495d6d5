#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "macexp/pmf.hpp"

namespace macexp {

// Rank of a k x n matrix over GF(p), entries row-major.
int gf_rank(int p, int k, int n, const std::vector<int>& entries);

// Full-rank k x n generator over GF(p), p prime, 0 <= k <= n.
class generator_matrix {
 public:
  generator_matrix(int p, int k, int n, std::vector<int> entries);

  // Rejection sampling of uniform matrices until full rank.
  static generator_matrix random_full_rank(int p, int k, int n, std::uint64_t seed);

  int p() const { return p_; }
  int k() const { return k_; }
  int n() const { return n_; }
  int entry(int r, int c) const { return entries_[static_cast<size_t>(r) * n_ + c]; }
  const std::vector<int>& entries() const { return entries_; }

  double rate() const;  // nats per symbol, (k/n) log p

  // Codeword of message u (size k), written into out (size n).
  void encode(const std::vector<int>& u, std::vector<int>& out) const;

  // All p^k codewords in lexicographic message order; guarded.
  std::vector<std::vector<int>> codebook() const;

 private:
  int p_;
  int k_;
  int n_;
  std::vector<int> entries_;
};

// Row split of a generator into a two-user pair: user 1 takes the top k1
// rows, user 2 the rest. Joint codewords u1 G1 + u2 G2 coincide with the
// parent code.
struct split_code {
  generator_matrix parent;
  int k1;

  generator_matrix user1() const;
  generator_matrix user2() const;
  double rate1() const;
  double rate2() const;
};

split_code split(const generator_matrix& g, int k1);

enum class tie_rule {
  lexicographic_min,  // smallest message among the likelihood maximizers
  tie_is_error,       // any tie counts as a decoding failure
};

// log-likelihood of an error pattern under i.i.d. noise; canonical
// left-to-right summation shared by every decoder so ties are reproducible.
double noise_log_prob(const pmf& noise, const std::vector<int>& pattern);

struct pair_decode_result {
  std::vector<int> u1;
  std::vector<int> u2;
  bool tie = false;
};

// Joint ML decoding over all message pairs in lexicographic order.
pair_decode_result ml_decode_pair(const split_code& sc, const std::vector<int>& y,
                                  const pmf& noise);

// Exact block error probability of ML decoding when message 0 is sent,
// by exhaustive noise enumeration with coset reduction. Guard: p^n <= 2^22.
double exact_ml_error_probability(const generator_matrix& g, const pmf& noise,
                                  tie_rule rule);

// Exact error probability conditioned on an arbitrary transmitted message.
double exact_ml_error_probability_for_message(const generator_matrix& g,
                                              const pmf& noise, tie_rule rule,
                                              const std::vector<int>& message);

struct split_error_probs {
  double joint = 0.0;  // decoded pair differs from the transmitted pair
  double user1 = 0.0;
  double user2 = 0.0;
};

// Exact error probabilities of joint ML decoding of a split pair when both
// users send message 0. Under tie_is_error a tie charges every error count.
split_error_probs exact_split_mac_error_probability(const split_code& sc,
                                                    const pmf& noise, tie_rule rule);

std::set<std::vector<int>> minkowski_sum(const std::set<std::vector<int>>& a,
                                         const std::set<std::vector<int>>& b, int p);

std::set<std::vector<int>> codebook_set(const generator_matrix& g);

}  // namespace macexp
