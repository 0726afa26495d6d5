#pragma once

#include <cmath>
#include <cstdint>

namespace macexp {

// splitmix64 step; also used to derive independent substreams.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic, platform-independent random stream. Every simulation trial
// gets its own substream so results do not depend on evaluation order.
class rng_stream {
 public:
  explicit rng_stream(std::uint64_t seed) : state_(seed) {}

  static rng_stream for_trial(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64_next(s);
    s = a ^ (trial * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull);
    rng_stream r(0);
    r.state_ = s;
    r.next_u64();
    return r;
  }

  std::uint64_t next_u64() { return splitmix64_next(state_); }

  // Uniform on [0,1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0,1]; safe as a log argument.
  double uniform01_open0() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform integer in [0, n); n >= 1.
  std::uint64_t uniform_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Standard normal via explicit Box-Muller (no libc distribution objects,
  // so streams are bit-identical across platforms).
  void gaussian_pair(double& z0, double& z1) {
    double u1 = uniform01_open0();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * 3.14159265358979323846 * u2;
    z0 = r * std::cos(t);
    z1 = r * std::sin(t);
  }

  double gaussian() {
    double a, b;
    gaussian_pair(a, b);
    return a;
  }

 private:
  std::uint64_t state_;
};

}  // namespace macexp
