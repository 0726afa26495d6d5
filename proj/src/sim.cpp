#include "macexp/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "macexp/rng.hpp"

namespace macexp {

namespace {

constexpr double z95 = 1.959963984540054;  // two-sided 95% normal quantile

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

mc_estimate mc_from_counts(std::uint64_t trials, std::uint64_t errors) {
  if (trials == 0) throw std::invalid_argument("mc_from_counts: trials must be positive");
  if (errors > trials) throw std::invalid_argument("mc_from_counts: errors exceed trials");
  mc_estimate e;
  e.trials = trials;
  e.errors = errors;
  double n = static_cast<double>(trials);
  double p = static_cast<double>(errors) / n;
  e.p_hat = p;
  bool degenerate = errors == 0 || errors == trials;
  if (!degenerate && errors < 10) {
    // Wilson score interval.
    double z2 = z95 * z95;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2.0 * n)) / denom;
    double half = z95 / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    e.ci_low = clamp01(center - half);
    e.ci_high = clamp01(center + half);
  } else {
    double half = z95 * std::sqrt(p * (1.0 - p) / n);
    e.ci_low = clamp01(p - half);
    e.ci_high = clamp01(p + half);
  }
  return e;
}

int sample_from_pmf(const pmf& dist, double u01) {
  double acc = 0.0;
  int last = static_cast<int>(dist.size()) - 1;
  for (int i = 0; i < last; ++i) {
    acc += dist[i];
    if (u01 < acc) return i;
  }
  return last;
}

namespace {

// Shared decode core: scan the codebook for the likelihood maximizer, first
// (lexicographically smallest) message wins, with a tie flag.
struct codebook_decoder {
  const generator_matrix& g;
  std::vector<std::vector<int>> cb;
  std::vector<int> e;

  explicit codebook_decoder(const generator_matrix& gen)
      : g(gen), cb(gen.codebook()), e(static_cast<size_t>(gen.n()), 0) {}

  std::uint64_t decode(const std::vector<int>& y, bool& tie, const pmf& noise) {
    double best = -std::numeric_limits<double>::infinity();
    std::uint64_t winner = 0;
    std::uint32_t ties = 0;
    for (std::uint64_t u = 0; u < cb.size(); ++u) {
      const std::vector<int>& c = cb[u];
      for (int j = 0; j < g.n(); ++j) {
        int d = y[static_cast<size_t>(j)] - c[static_cast<size_t>(j)];
        e[static_cast<size_t>(j)] = d < 0 ? d + g.p() : d;
      }
      double sc = noise_log_prob(noise, e);
      if (sc > best) {
        best = sc;
        winner = u;
        ties = 1;
      } else if (sc == best) {
        ++ties;
      }
    }
    tie = ties > 1;
    return winner;
  }
};

void draw_noise(rng_stream& rng, const pmf& noise, std::vector<int>& z) {
  for (int& v : z) v = sample_from_pmf(noise, rng.uniform01());
}

}  // namespace

mc_estimate simulate_single_user(const generator_matrix& g, const pmf& noise,
                                 tie_rule rule, std::uint64_t trials,
                                 std::uint64_t seed) {
  if (noise.size() != g.p()) {
    throw std::invalid_argument("noise alphabet must match the code field");
  }
  codebook_decoder dec(g);
  std::vector<int> z(static_cast<size_t>(g.n()), 0);
  std::uint64_t errors = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    rng_stream rng = rng_stream::for_trial(seed, t);
    draw_noise(rng, noise, z);
    bool tie = false;
    std::uint64_t winner = dec.decode(z, tie, noise);
    bool correct = winner == 0 && (rule == tie_rule::lexicographic_min || !tie);
    if (!correct) ++errors;
  }
  return mc_from_counts(trials, errors);
}

split_mc_estimates simulate_split_mac(const split_code& sc, const pmf& noise,
                                      tie_rule rule, std::uint64_t trials,
                                      std::uint64_t seed) {
  const generator_matrix& g = sc.parent;
  if (noise.size() != g.p()) {
    throw std::invalid_argument("noise alphabet must match the code field");
  }
  codebook_decoder dec(g);
  std::vector<int> z(static_cast<size_t>(g.n()), 0);
  std::uint64_t joint = 0, e1 = 0, e2 = 0;
  std::uint64_t m2 = 1;
  for (int i = sc.k1; i < g.k(); ++i) m2 *= static_cast<std::uint64_t>(g.p());
  for (std::uint64_t t = 0; t < trials; ++t) {
    rng_stream rng = rng_stream::for_trial(seed, t);
    draw_noise(rng, noise, z);
    bool tie = false;
    std::uint64_t winner = dec.decode(z, tie, noise);
    if (rule == tie_rule::tie_is_error && tie) {
      // Failure is charged to both users.
      ++joint;
      ++e1;
      ++e2;
      continue;
    }
    if (winner != 0) {
      ++joint;
      if (winner / m2 != 0) ++e1;
      if (winner % m2 != 0) ++e2;
    }
  }
  split_mc_estimates out;
  out.joint = mc_from_counts(trials, joint);
  out.user1 = mc_from_counts(trials, e1);
  out.user2 = mc_from_counts(trials, e2);
  return out;
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

int quantize_pam(double y, int l0) {
  double shifted = y + 0.5 * (l0 - 1);
  int lo = static_cast<int>(std::floor(shifted));
  if (lo < 0) return 0;
  if (lo >= l0 - 1) return l0 - 1;
  double d_lo = shifted - lo;
  double d_hi = (lo + 1) - shifted;
  if (d_lo < d_hi) return lo;
  if (d_hi < d_lo) return lo + 1;
  // Exact midpoint: take the smaller-magnitude point (smaller index if the
  // magnitudes also tie).
  double c_lo = lo - 0.5 * (l0 - 1);
  return std::abs(c_lo) <= std::abs(c_lo + 1.0) ? lo : lo + 1;
}

pam_mc_result simulate_nested_pam(int l1, int l2, double sigma,
                                  std::uint64_t trials, std::uint64_t seed) {
  if (l1 < 1 || l2 < 1 || static_cast<std::int64_t>(l1) * l2 < 2) {
    throw std::invalid_argument("simulate_nested_pam: need l1*l2 >= 2");
  }
  if (!(sigma > 0.0)) throw std::invalid_argument("simulate_nested_pam: sigma must be positive");
  const int l0 = l1 * l2;
  const double offset = 0.5 * (l0 - 1);
  std::uint64_t joint = 0, e1 = 0, e2 = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    rng_stream rng = rng_stream::for_trial(seed, t);
    int u1 = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(l2)));
    int u2 = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(l1)));
    int s = u1 * l1 + u2;
    double y = (s - offset) + sigma * rng.gaussian();
    int q = quantize_pam(y, l0);
    int d2 = q % l1;
    int d1 = q / l1;
    if (q != s) ++joint;
    if (d1 != u1) ++e1;
    if (d2 != u2) ++e2;
  }
  pam_mc_result out;
  out.joint = mc_from_counts(trials, joint);
  out.user1 = mc_from_counts(trials, e1);
  out.user2 = mc_from_counts(trials, e2);
  out.predicted_symbol_error =
      2.0 * (l0 - 1) / l0 * q_function(1.0 / (2.0 * sigma));
  return out;
}

}  // namespace macexp
