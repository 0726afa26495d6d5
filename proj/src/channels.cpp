#include "macexp/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "macexp/errors.hpp"

namespace macexp {

dmc::dmc(std::vector<pmf> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("dmc: no rows");
  for (const pmf& r : rows_) {
    if (r.size() != rows_.front().size()) {
      throw std::invalid_argument("dmc: inconsistent row lengths");
    }
  }
}

dmc dmc::bsc(double crossover) {
  if (!(crossover >= 0.0 && crossover <= 1.0)) {
    throw std::invalid_argument("dmc::bsc: crossover outside [0,1]");
  }
  return dmc({pmf({1.0 - crossover, crossover}), pmf({crossover, 1.0 - crossover})});
}

mac2::mac2(int input1, int input2, std::vector<pmf> table)
    : input1_(input1), input2_(input2), table_(std::move(table)) {
  if (input1_ < 2 || input2_ < 2) {
    throw std::invalid_argument("mac2: input alphabets must have size >= 2");
  }
  if (table_.size() != static_cast<size_t>(input1_) * input2_) {
    throw std::invalid_argument("mac2: table size does not match input alphabets");
  }
  for (const pmf& r : table_) {
    if (r.size() != table_.front().size()) {
      throw std::invalid_argument("mac2: inconsistent row lengths");
    }
  }
}

dmc mac2::product_dmc() const {
  return dmc(std::vector<pmf>(table_.begin(), table_.end()));
}

additive_noise_channel::additive_noise_channel(int modulus, pmf noise)
    : modulus_(modulus), noise_(std::move(noise)) {
  if (modulus_ < 2) {
    throw std::invalid_argument("additive_noise_channel: modulus must be >= 2");
  }
  if (noise_.size() != modulus_) {
    throw std::invalid_argument("additive_noise_channel: noise alphabet mismatch");
  }
}

dmc additive_noise_channel::to_dmc() const {
  std::vector<pmf> rows;
  rows.reserve(static_cast<size_t>(modulus_));
  for (int x = 0; x < modulus_; ++x) {
    std::vector<double> row(static_cast<size_t>(modulus_));
    for (int y = 0; y < modulus_; ++y) {
      row[static_cast<size_t>(y)] = noise_[((y - x) % modulus_ + modulus_) % modulus_];
    }
    rows.emplace_back(std::move(row));
  }
  return dmc(std::move(rows));
}

double additive_noise_channel::capacity() const {
  return std::log(static_cast<double>(modulus_)) - noise_.shannon_entropy();
}

mac2 mac_from_additive_noise(const pmf& noise) {
  int m = noise.size();
  std::vector<pmf> table;
  table.reserve(static_cast<size_t>(m) * m);
  for (int x1 = 0; x1 < m; ++x1) {
    for (int x2 = 0; x2 < m; ++x2) {
      std::vector<double> row(static_cast<size_t>(m));
      for (int y = 0; y < m; ++y) {
        row[static_cast<size_t>(y)] = noise[((y - x1 - x2) % m + m) % m];
      }
      table.emplace_back(std::move(row));
    }
  }
  return mac2(m, m, std::move(table));
}

bool is_additive(const mac2& mac, double tol) {
  int m = mac.output_size();
  if (mac.input1_size() != m || mac.input2_size() != m) return false;
  // Noise law is pinned by the (0,0) slice; every slice must be its shift.
  for (int x1 = 0; x1 < m; ++x1) {
    for (int x2 = 0; x2 < m; ++x2) {
      for (int y = 0; y < m; ++y) {
        int n = ((y - x1 - x2) % m + m) % m;
        if (std::abs(mac.prob(y, x1, x2) - mac.prob(n, 0, 0)) > tol) return false;
      }
    }
  }
  return true;
}

additive_noise_channel associated_single_user(const mac2& mac, double tol) {
  if (!is_additive(mac, tol)) {
    throw not_additive_error("associated_single_user: channel is not additive");
  }
  int m = mac.output_size();
  std::vector<double> noise(static_cast<size_t>(m));
  for (int n = 0; n < m; ++n) noise[static_cast<size_t>(n)] = mac.prob(n, 0, 0);
  return additive_noise_channel(m, pmf(std::move(noise)));
}

mac2 binary_example_channel(double q, double p) {
  if (!(q >= 0.0 && q <= 1.0) || !(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("binary_example_channel: parameters outside [0,1]");
  }
  double diff = q * (1.0 - p) + p * (1.0 - q);
  std::vector<pmf> table;
  table.reserve(4);
  for (int x1 = 0; x1 < 2; ++x1) {
    for (int x2 = 0; x2 < 2; ++x2) {
      double flip = (x1 == x2) ? q : diff;
      int clean = x1 ^ x2;
      std::vector<double> row(2);
      row[static_cast<size_t>(clean)] = 1.0 - flip;
      row[static_cast<size_t>(clean ^ 1)] = flip;
      table.emplace_back(std::move(row));
    }
  }
  return mac2(2, 2, std::move(table));
}

}  // namespace macexp
