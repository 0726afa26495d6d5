#include "macexp/linear_codes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "macexp/errors.hpp"
#include "macexp/rng.hpp"

namespace macexp {

namespace {

constexpr std::uint64_t enumeration_guard = 1ull << 22;

int gf_inv(int a, int p) {
  // Fermat inverse; p is prime and a != 0.
  long long result = 1;
  long long base = a % p;
  int e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t acc = 1;
  for (int i = 0; i < exp; ++i) {
    if (acc > cap / base) return cap;
    acc *= base;
  }
  return acc;
}

// Reduced row echelon form over GF(p); returns pivot columns.
std::vector<int> rref(std::vector<int>& m, int p, int rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (m[static_cast<size_t>(i) * cols + c] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    for (int j = 0; j < cols; ++j) {
      std::swap(m[static_cast<size_t>(pr) * cols + j], m[static_cast<size_t>(r) * cols + j]);
    }
    long long inv = gf_inv(m[static_cast<size_t>(r) * cols + c], p);
    for (int j = 0; j < cols; ++j) {
      m[static_cast<size_t>(r) * cols + j] =
          static_cast<int>(m[static_cast<size_t>(r) * cols + j] * inv % p);
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      long long f = m[static_cast<size_t>(i) * cols + c];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j) {
        long long v = m[static_cast<size_t>(i) * cols + j] -
                      f * m[static_cast<size_t>(r) * cols + j] % p;
        m[static_cast<size_t>(i) * cols + j] = static_cast<int>((v % p + p) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int gf_rank(int p, int k, int n, const std::vector<int>& entries) {
  std::vector<int> work = entries;
  return static_cast<int>(rref(work, p, k, n).size());
}

generator_matrix::generator_matrix(int p, int k, int n, std::vector<int> entries)
    : p_(p), k_(k), n_(n), entries_(std::move(entries)) {
  bool prime = p >= 2;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) prime = false;
  }
  if (!prime) throw non_prime_error("generator_matrix: p must be prime");
  if (n_ < 1 || k_ < 0 || k_ > n_) {
    throw std::invalid_argument("generator_matrix: require 0 <= k <= n, n >= 1");
  }
  if (entries_.size() != static_cast<size_t>(k_) * n_) {
    throw std::invalid_argument("generator_matrix: entry count mismatch");
  }
  for (int v : entries_) {
    if (v < 0 || v >= p_) throw std::invalid_argument("generator_matrix: entry outside GF(p)");
  }
  if (gf_rank(p_, k_, n_, entries_) != k_) {
    throw std::invalid_argument("generator_matrix: rows are not linearly independent");
  }
}

generator_matrix generator_matrix::random_full_rank(int p, int k, int n,
                                                    std::uint64_t seed) {
  rng_stream rng(seed);
  while (true) {
    std::vector<int> e(static_cast<size_t>(k) * n);
    for (int& v : e) v = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(p)));
    if (gf_rank(p, k, n, e) == k) return generator_matrix(p, k, n, std::move(e));
  }
}

double generator_matrix::rate() const {
  return static_cast<double>(k_) / n_ * std::log(static_cast<double>(p_));
}

void generator_matrix::encode(const std::vector<int>& u, std::vector<int>& out) const {
  if (u.size() != static_cast<size_t>(k_)) {
    throw std::invalid_argument("encode: message length mismatch");
  }
  out.assign(static_cast<size_t>(n_), 0);
  for (int i = 0; i < k_; ++i) {
    long long ui = u[static_cast<size_t>(i)];
    if (ui < 0 || ui >= p_) throw std::invalid_argument("encode: symbol outside GF(p)");
    if (ui == 0) continue;
    for (int j = 0; j < n_; ++j) {
      out[static_cast<size_t>(j)] =
          static_cast<int>((out[static_cast<size_t>(j)] + ui * entry(i, j)) % p_);
    }
  }
}

std::vector<std::vector<int>> generator_matrix::codebook() const {
  std::uint64_t count = checked_pow(static_cast<std::uint64_t>(p_), k_);
  if (count > enumeration_guard) {
    throw too_large_error("codebook: p^k exceeds the enumeration guard");
  }
  std::vector<std::vector<int>> cb;
  cb.reserve(count);
  std::vector<int> u(static_cast<size_t>(k_), 0);
  std::vector<int> c;
  for (std::uint64_t i = 0; i < count; ++i) {
    encode(u, c);
    cb.push_back(c);
    for (int pos = k_ - 1; pos >= 0; --pos) {
      if (++u[static_cast<size_t>(pos)] < p_) break;
      u[static_cast<size_t>(pos)] = 0;
    }
  }
  return cb;
}

generator_matrix split_code::user1() const {
  std::vector<int> e(parent.entries().begin(),
                     parent.entries().begin() + static_cast<size_t>(k1) * parent.n());
  return generator_matrix(parent.p(), k1, parent.n(), std::move(e));
}

generator_matrix split_code::user2() const {
  std::vector<int> e(parent.entries().begin() + static_cast<size_t>(k1) * parent.n(),
                     parent.entries().end());
  return generator_matrix(parent.p(), parent.k() - k1, parent.n(), std::move(e));
}

double split_code::rate1() const {
  return static_cast<double>(k1) / parent.n() * std::log(static_cast<double>(parent.p()));
}

double split_code::rate2() const {
  return static_cast<double>(parent.k() - k1) / parent.n() *
         std::log(static_cast<double>(parent.p()));
}

split_code split(const generator_matrix& g, int k1) {
  if (k1 < 0 || k1 > g.k()) throw std::invalid_argument("split: require 0 <= k1 <= k");
  return split_code{g, k1};
}

double noise_log_prob(const pmf& noise, const std::vector<int>& pattern) {
  double s = 0.0;
  for (int v : pattern) {
    double p = noise[v];
    s += (p > 0.0) ? std::log(p) : -std::numeric_limits<double>::infinity();
  }
  return s;
}

namespace {

double noise_prob(const pmf& noise, const std::vector<int>& pattern) {
  double s = 1.0;
  for (int v : pattern) s *= noise[v];
  return s;
}

void check_noise(const generator_matrix& g, const pmf& noise) {
  if (noise.size() != g.p()) {
    throw std::invalid_argument("noise alphabet must match the code field");
  }
}

std::uint64_t guarded_space(const generator_matrix& g) {
  std::uint64_t total = checked_pow(static_cast<std::uint64_t>(g.p()), g.n());
  if (total > enumeration_guard) {
    throw too_large_error("exact enumeration: p^n exceeds the guard");
  }
  return total;
}

// Coset bookkeeping for one code: syndrome contributions per position and a
// message solver from pivot columns.
struct coset_index {
  int p, n, r;  // r = n - k
  std::vector<std::vector<int>> sigma;  // per position, length r
  std::vector<int> pivots;
  std::vector<int> solver;  // k x k inverse of the pivot submatrix

  explicit coset_index(const generator_matrix& g) : p(g.p()), n(g.n()) {
    const int k = g.k();
    std::vector<int> red = g.entries();
    pivots = rref(red, p, k, n);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c) {
      if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
    }
    r = static_cast<int>(free_cols.size());
    // Residual of a unit vector after elimination, restricted to free columns.
    sigma.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(r), 0));
    for (int pos = 0; pos < n; ++pos) {
      std::vector<int> v(static_cast<size_t>(n), 0);
      v[static_cast<size_t>(pos)] = 1;
      for (int row = 0; row < k; ++row) {
        int c = pivots[static_cast<size_t>(row)];
        long long f = v[static_cast<size_t>(c)];
        if (f == 0) continue;
        for (int j = 0; j < n; ++j) {
          long long t =
              v[static_cast<size_t>(j)] - f * red[static_cast<size_t>(row) * n + j] % p;
          v[static_cast<size_t>(j)] = static_cast<int>((t % p + p) % p);
        }
      }
      for (int t = 0; t < r; ++t) {
        sigma[static_cast<size_t>(pos)][static_cast<size_t>(t)] =
            v[static_cast<size_t>(free_cols[static_cast<size_t>(t)])];
      }
    }
    // Inverse of G restricted to pivot columns, for message recovery.
    if (k > 0) {
      std::vector<int> aug(static_cast<size_t>(k) * (2 * k), 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          aug[static_cast<size_t>(i) * (2 * k) + j] =
              g.entry(i, pivots[static_cast<size_t>(j)]);
        }
        aug[static_cast<size_t>(i) * (2 * k) + k + i] = 1;
      }
      rref(aug, p, k, 2 * k);
      solver.assign(static_cast<size_t>(k) * k, 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          solver[static_cast<size_t>(i) * k + j] =
              aug[static_cast<size_t>(i) * (2 * k) + k + j];
        }
      }
    }
  }

  std::uint64_t coset_count() const {
    return checked_pow(static_cast<std::uint64_t>(p), r);
  }

  // Message whose codeword equals c (c must lie in the code): u = c_J * inv(G_J)
  // as a row-vector product.
  std::vector<int> solve_message(const generator_matrix& g, const std::vector<int>& c) const {
    const int k = g.k();
    std::vector<int> u(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
      long long acc = 0;
      for (int j = 0; j < k; ++j) {
        acc = (acc + static_cast<long long>(solver[static_cast<size_t>(j) * k + i]) *
                         c[static_cast<size_t>(pivots[static_cast<size_t>(j)])]) % p;
      }
      u[static_cast<size_t>(i)] = static_cast<int>(acc);
    }
    return u;
  }
};

// Lexicographic enumeration of Z_p^n with an incrementally maintained
// syndrome index; every digit bump (wraps included) adds one sigma.
struct zspace_walker {
  const coset_index& ix;
  std::vector<int> z;
  std::vector<int> synd;
  std::uint64_t synd_idx = 0;
  std::vector<std::uint64_t> place;  // p^t per free-column slot

  explicit zspace_walker(const coset_index& index)
      : ix(index),
        z(static_cast<size_t>(index.n), 0),
        synd(static_cast<size_t>(index.r), 0),
        place(static_cast<size_t>(index.r), 1) {
    for (int t = 1; t < ix.r; ++t) {
      place[static_cast<size_t>(t)] = place[static_cast<size_t>(t - 1)] *
                                      static_cast<std::uint64_t>(ix.p);
    }
  }

  void add_sigma(int pos) {
    for (int t = 0; t < ix.r; ++t) {
      int s = ix.sigma[static_cast<size_t>(pos)][static_cast<size_t>(t)];
      if (s == 0) continue;
      int old = synd[static_cast<size_t>(t)];
      int nw = old + s;
      if (nw >= ix.p) nw -= ix.p;
      synd[static_cast<size_t>(t)] = nw;
      synd_idx += (static_cast<std::uint64_t>(nw) - old) * place[static_cast<size_t>(t)];
    }
  }

  void step() {
    for (int pos = ix.n - 1; pos >= 0; --pos) {
      ++z[static_cast<size_t>(pos)];
      add_sigma(pos);
      if (z[static_cast<size_t>(pos)] == ix.p) {
        z[static_cast<size_t>(pos)] = 0;
      } else {
        return;
      }
    }
  }
};

struct coset_tables {
  std::vector<double> best;
  std::vector<std::uint32_t> ties;
  std::vector<std::uint64_t> winner;  // enumeration index of the first best member
};

coset_tables build_coset_tables(const coset_index& ix, const pmf& noise,
                                std::uint64_t total) {
  coset_tables t;
  std::uint64_t cosets = ix.coset_count();
  t.best.assign(cosets, -std::numeric_limits<double>::infinity());
  t.ties.assign(cosets, 0);
  t.winner.assign(cosets, 0);
  zspace_walker w(ix);
  for (std::uint64_t i = 0; i < total; ++i) {
    double sc = noise_log_prob(noise, w.z);
    std::uint64_t s = w.synd_idx;
    if (sc > t.best[s]) {
      t.best[s] = sc;
      t.ties[s] = 1;
      t.winner[s] = i;
    } else if (sc == t.best[s]) {
      ++t.ties[s];
    }
    w.step();
  }
  return t;
}

std::vector<int> vector_from_index(std::uint64_t idx, int p, int n) {
  std::vector<int> v(static_cast<size_t>(n), 0);
  for (int pos = n - 1; pos >= 0; --pos) {
    v[static_cast<size_t>(pos)] = static_cast<int>(idx % static_cast<std::uint64_t>(p));
    idx /= static_cast<std::uint64_t>(p);
  }
  return v;
}

}  // namespace

double exact_ml_error_probability(const generator_matrix& g, const pmf& noise,
                                  tie_rule rule) {
  check_noise(g, noise);
  std::uint64_t total = guarded_space(g);
  coset_index ix(g);
  coset_tables tables = build_coset_tables(ix, noise, total);
  double err = 0.0;
  zspace_walker w(ix);
  for (std::uint64_t i = 0; i < total; ++i) {
    double sc = noise_log_prob(noise, w.z);
    bool correct = sc == tables.best[w.synd_idx];
    if (rule == tie_rule::tie_is_error && correct) {
      correct = tables.ties[w.synd_idx] == 1;
    }
    if (!correct) err += noise_prob(noise, w.z);
    w.step();
  }
  return err;
}

double exact_ml_error_probability_for_message(const generator_matrix& g,
                                              const pmf& noise, tie_rule rule,
                                              const std::vector<int>& message) {
  check_noise(g, noise);
  std::uint64_t total = guarded_space(g);
  std::vector<std::vector<int>> cb = g.codebook();
  std::vector<int> c0;
  g.encode(message, c0);
  std::uint64_t sent = 0;
  for (int v : message) sent = sent * static_cast<std::uint64_t>(g.p()) +
                               static_cast<std::uint64_t>(v);
  const int n = g.n();
  std::vector<int> z(static_cast<size_t>(n), 0);
  std::vector<int> y(static_cast<size_t>(n), 0);
  std::vector<int> e(static_cast<size_t>(n), 0);
  double err = 0.0;
  for (std::uint64_t i = 0; i < total; ++i) {
    for (int j = 0; j < n; ++j) {
      y[static_cast<size_t>(j)] = (c0[static_cast<size_t>(j)] + z[static_cast<size_t>(j)]) % g.p();
    }
    double best = -std::numeric_limits<double>::infinity();
    std::uint64_t winner = 0;
    std::uint32_t ties = 0;
    for (std::uint64_t u = 0; u < cb.size(); ++u) {
      const std::vector<int>& c = cb[u];
      for (int j = 0; j < n; ++j) {
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
    bool correct = winner == sent && (rule == tie_rule::lexicographic_min || ties == 1);
    if (!correct) err += noise_prob(noise, z);
    for (int pos = n - 1; pos >= 0; --pos) {
      if (++z[static_cast<size_t>(pos)] < g.p()) break;
      z[static_cast<size_t>(pos)] = 0;
    }
  }
  return err;
}

pair_decode_result ml_decode_pair(const split_code& sc, const std::vector<int>& y,
                                  const pmf& noise) {
  const generator_matrix& g = sc.parent;
  check_noise(g, noise);
  std::vector<std::vector<int>> cb = g.codebook();
  const int n = g.n();
  std::vector<int> e(static_cast<size_t>(n), 0);
  double best = -std::numeric_limits<double>::infinity();
  std::uint64_t winner = 0;
  std::uint32_t ties = 0;
  for (std::uint64_t u = 0; u < cb.size(); ++u) {
    const std::vector<int>& c = cb[u];
    for (int j = 0; j < n; ++j) {
      int d = y[static_cast<size_t>(j)] - c[static_cast<size_t>(j)];
      e[static_cast<size_t>(j)] = d < 0 ? d + g.p() : d;
    }
    double v = noise_log_prob(noise, e);
    if (v > best) {
      best = v;
      winner = u;
      ties = 1;
    } else if (v == best) {
      ++ties;
    }
  }
  std::vector<int> u = vector_from_index(winner, g.p(), g.k());
  pair_decode_result res;
  res.u1.assign(u.begin(), u.begin() + sc.k1);
  res.u2.assign(u.begin() + sc.k1, u.end());
  res.tie = ties > 1;
  return res;
}

split_error_probs exact_split_mac_error_probability(const split_code& sc,
                                                    const pmf& noise, tie_rule rule) {
  const generator_matrix& g = sc.parent;
  check_noise(g, noise);
  std::uint64_t total = guarded_space(g);
  coset_index ix(g);
  coset_tables tables = build_coset_tables(ix, noise, total);
  std::vector<std::vector<int>> cb = g.codebook();
  const int n = g.n();
  const int k = g.k();
  std::vector<int> e(static_cast<size_t>(n), 0);
  split_error_probs out;
  zspace_walker w(ix);
  for (std::uint64_t i = 0; i < total; ++i) {
    double sc_z = noise_log_prob(noise, w.z);
    std::uint64_t s = w.synd_idx;
    bool tie = tables.ties[s] > 1;
    bool joint_correct;
    std::vector<int> u;  // decoded message when needed
    bool have_u = false;
    if (rule == tie_rule::tie_is_error) {
      joint_correct = sc_z == tables.best[s] && !tie;
      if (!joint_correct) {
        if (tie) {
          // Failure is charged to both users.
          double pr = noise_prob(noise, w.z);
          out.joint += pr;
          out.user1 += pr;
          out.user2 += pr;
          w.step();
          continue;
        }
        std::vector<int> winner_vec = vector_from_index(tables.winner[s], g.p(), n);
        std::vector<int> c(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
          int d = w.z[static_cast<size_t>(j)] - winner_vec[static_cast<size_t>(j)];
          c[static_cast<size_t>(j)] = d < 0 ? d + g.p() : d;
        }
        u = ix.solve_message(g, c);
        have_u = true;
      }
    } else {
      joint_correct = sc_z == tables.best[s];
      if (!joint_correct) {
        if (!tie) {
          std::vector<int> winner_vec = vector_from_index(tables.winner[s], g.p(), n);
          std::vector<int> c(static_cast<size_t>(n));
          for (int j = 0; j < n; ++j) {
            int d = w.z[static_cast<size_t>(j)] - winner_vec[static_cast<size_t>(j)];
            c[static_cast<size_t>(j)] = d < 0 ? d + g.p() : d;
          }
          u = ix.solve_message(g, c);
          have_u = true;
        } else {
          // Tied coset: resolve to the smallest message for this receive word.
          double best_sc = -std::numeric_limits<double>::infinity();
          std::uint64_t winner = 0;
          for (std::uint64_t m = 0; m < cb.size(); ++m) {
            const std::vector<int>& c = cb[m];
            for (int j = 0; j < n; ++j) {
              int d = w.z[static_cast<size_t>(j)] - c[static_cast<size_t>(j)];
              e[static_cast<size_t>(j)] = d < 0 ? d + g.p() : d;
            }
            double v = noise_log_prob(noise, e);
            if (v > best_sc) {
              best_sc = v;
              winner = m;
            }
          }
          // Message 0 scores sc_z < best here, so the winner is never 0.
          u = vector_from_index(winner, g.p(), k);
          have_u = true;
        }
      }
    }
    if (!joint_correct) {
      double pr = noise_prob(noise, w.z);
      out.joint += pr;
      if (have_u) {
        bool e1 = false, e2 = false;
        for (int j = 0; j < sc.k1; ++j) e1 |= u[static_cast<size_t>(j)] != 0;
        for (int j = sc.k1; j < k; ++j) e2 |= u[static_cast<size_t>(j)] != 0;
        if (e1) out.user1 += pr;
        if (e2) out.user2 += pr;
      }
    }
    w.step();
  }
  return out;
}

std::set<std::vector<int>> minkowski_sum(const std::set<std::vector<int>>& a,
                                         const std::set<std::vector<int>>& b, int p) {
  std::set<std::vector<int>> out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (x.size() != y.size()) {
        throw std::invalid_argument("minkowski_sum: vectors must have equal length");
      }
      std::vector<int> s(x.size());
      for (size_t i = 0; i < x.size(); ++i) s[i] = (x[i] + y[i]) % p;
      out.insert(std::move(s));
    }
  }
  return out;
}

std::set<std::vector<int>> codebook_set(const generator_matrix& g) {
  std::set<std::vector<int>> out;
  for (auto& c : g.codebook()) out.insert(c);
  return out;
}

}  // namespace macexp
