#pragma once

#include <optional>
#include <vector>

#include "macexp/channels.hpp"
#include "macexp/pmf.hpp"

namespace macexp {

// Upper limit for the expurgated-bound slope parameter search.
inline constexpr double rho_max = 64.0;

// Renyi entropy of order beta in nats; beta = 1 returns Shannon entropy.
double renyi_entropy(const pmf& p, double beta);

// Channel capacity in nats via Blahut-Arimoto iteration.
double capacity(const dmc& ch);

// Gallager functions for a fixed input distribution, rates in nats.
double gallager_e0(const dmc& ch, const pmf& input, double rho);       // rho >= 0
double gallager_e0_rho_derivative(const dmc& ch, const pmf& input, double rho);
double gallager_ex(const dmc& ch, const pmf& input, double rho);       // rho >= 1
double gallager_ex_rho_derivative(const dmc& ch, const pmf& input, double rho);

// True when all rows are permutations of one another; such channels take a
// uniform input in the exponent optimizations.
bool has_uniform_symmetry(const dmc& ch);

// Input distribution maximizing E0(rho, .).
pmf maximize_e0_input(const dmc& ch, double rho);

struct su_exponent_report {
  double rate = 0.0;
  double e_r = 0.0;                 // random-coding exponent, clamped at 0
  std::optional<double> e_ex;       // expurgated exponent when computed
  double e_best = 0.0;
  double rho = 0.0;                 // maximizer for e_r
  std::vector<double> input;        // maximizing input distribution for e_r
  bool ex_truncated = false;        // expurgated maximizer hit rho_max
};

su_exponent_report random_coding_exponent(const dmc& ch, double rate);

struct expurgated_result {
  double value = 0.0;  // clamped at 0
  double rho = 1.0;
  bool truncated = false;
};

expurgated_result expurgated_exponent(const dmc& ch, double rate);

// Random-coding report with the expurgated bound filled in.
su_exponent_report best_exponent_report(const dmc& ch, double rate);

// Random-coding exponent of an additive channel through the Renyi-entropy
// form max_rho rho (log m - h_{1/(1+rho)}(N) - R).
double additive_random_coding_exponent(const additive_noise_channel& ch, double rate);

struct additive_best_result {
  double value = 0.0;
  double e_r = 0.0;
  double e_ex = 0.0;
  bool ex_truncated = false;
};

additive_best_result additive_best_exponent(const additive_noise_channel& ch, double rate);

// Rate where the slope condition d/drho [E0 - rho R] = 0 holds at rho = 1.
// Channels with E0 linear in rho return 0 by convention.
// Throws zero_capacity_error when the channel has no capacity.
double critical_rate(const dmc& ch);

// Rate where the expurgated and random-coding bounds become tangent,
// i.e. d/drho [Ex - rho R] = 0 at rho = 1.
double expurgation_rate(const dmc& ch);

struct sw_exponents {
  double genie1 = 0.0;  // user 1 decoded with user 2 known
  double genie2 = 0.0;
  double joint = 0.0;   // both users decoded at the sum rate
  std::vector<double> input1;
  std::vector<double> input2;
  double value() const;
};

// Achievable joint-decoding exponent min(genie1, genie2, joint), maximized
// over product input distributions.
sw_exponents slepian_wolf_mac_exponent(const mac2& mac, double r1, double r2);

// Exponent of time sharing between single-user best-known codebooks, the
// idle user fixed at symbol 0; maximized over the time split.
double time_sharing_exponent(const mac2& mac, double r1, double r2);

}  // namespace macexp
