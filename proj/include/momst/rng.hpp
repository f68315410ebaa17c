#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "momst/errors.hpp"

namespace momst {

// 64-bit FNV-1a, used to derive per-job seeds from stable string tags.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// splitmix64 finalizer; decorrelates seeds that differ in few bits.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d9d798993c30cdULL;
  return x ^ (x >> 31);
}

// Deterministic random source. std::mt19937_64's raw output is pinned by the
// standard, but the std distributions are not, so every draw goes through the
// hand-rolled helpers below and results reproduce across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound) by rejection; no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw ContractError("Rng::below: bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % bound;
  }

  // Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    if (lo > hi) throw ContractError("Rng::uniform_int: empty range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi) - lo + 1));
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller; draws two uniforms per call, no cached spare (keeps the
  // consumed-draw count independent of call history).
  double normal(double mean, double sd) {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sd * r * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  // k distinct values from {0, ..., n-1} via partial Fisher-Yates.
  std::vector<int> sample_distinct(int n, int k) {
    if (k < 0 || k > n) throw ContractError("Rng::sample_distinct: k out of range");
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
      const int j = uniform_int(i, n - 1);
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Independent stream for a (master seed, tag) pair. Tags are stable strings
// like "gen/C1/25/7" or "<instance>|SGS|rep3", so re-running any subset of
// jobs reproduces the exact same draws regardless of scheduling.
inline Rng derive_rng(std::uint64_t master, std::string_view tag) {
  return Rng(mix64(master ^ fnv1a(tag)));
}

}  // namespace momst
