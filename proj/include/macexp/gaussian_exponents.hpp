#pragma once

namespace macexp {

// All rates and exponents in nats; snr arguments are linear power ratios.

double gaussian_capacity(double snr);          // log(1 + A) / 2
double gaussian_gamma(double snr);             // (1 + A/2 + sqrt(1 + A^2/4)) / 2
double gaussian_critical_rate(double snr);     // log(gamma) / 2
double gaussian_expurgation_rate(double snr);  // log(gamma - A/4) / 2

// Random-coding exponent branches; low is valid up to the critical rate,
// high from the critical rate to capacity. Exposed for boundary checks.
double su_gaussian_rc_low_rate(double rate, double snr);
double su_gaussian_rc_high_rate(double rate, double snr);

double su_gaussian_random_coding(double rate, double snr);

// Expurgated bound: closed form below the expurgation rate, its tangent-line
// continuation (slope optimum pinned at 1) above, clamped at 0.
double su_gaussian_expurgated(double rate, double snr);

double su_gaussian_best(double rate, double snr);

// Unconstrained-AWGN exponent as a function of the volume-to-noise ratio mu.
double poltyrev_exponent(double mu);

struct gaussian_mac_params {
  double a1;  // stronger user, a1 >= a2 > 0
  double a2;
  double r1;  // rates in nats, >= 0
  double r2;
  gaussian_mac_params(double a1_, double a2_, double r1_, double r2_);
};

// Rate region where nested construction exponents are positive:
// r1 + r2 <= log(a1)/2 and r2 <= log(a2)/2.
bool r_struct_contains(const gaussian_mac_params& p);

struct nesting_result {
  double exponent = 0.0;
  double mu1 = 0.0;  // a1 exp(-2(r1+r2))
  double mu2 = 0.0;  // a2 exp(-2 r2)
};

// Joint-decoding exponent of the nested-pair construction,
// poltyrev_exponent(min(mu1, mu2)).
nesting_result distributed_nesting_exponent(const gaussian_mac_params& p);

struct gallager_ub_state {
  double rho = 0.0;
  double theta1 = 1.0;
  double theta2 = 1.0;
  double value = 0.0;
};

// Upper bound on the exponent of unstructured spherical-shell pairs at the
// given sum rate, maximized over rho in [0,1] and theta_i in (0, 1+rho].
gallager_ub_state gallager_spherical_ub(double rate_sum, double a1, double a2);

}  // namespace macexp
