#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace evotune {

// Deterministic 64-bit generator (splitmix64 stream). The standard <random>
// distributions are implementation-defined, so every draw used anywhere in a
// run goes through this class; identical seeds give identical streams on any
// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform double in [0, 1), 53 mantissa bits.
  double next_double();

  // Uniform integer in [0, n). n must be > 0. Rejection sampling, unbiased.
  std::uint64_t uniform_below(std::uint64_t n);

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  bool bernoulli(double p) { return next_double() < p; }

  // Index draw proportional to non-negative weights (at least one > 0).
  std::size_t weighted_index(std::span<const double> weights);

  // Fisher-Yates, in place.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = uniform_below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Derives an independent stream seed from (master, name, index). Used to give
// each component (db-sampling, pairing, mock-backend, instance-gen) and each
// timestep its own stream, so draws in one component never shift another's
// and checkpoint-resume replays identically.
std::uint64_t derive_seed(std::uint64_t master, std::string_view name,
                          std::uint64_t index = 0);

inline Rng derive_rng(std::uint64_t master, std::string_view name,
                      std::uint64_t index = 0) {
  return Rng(derive_seed(master, name, index));
}

}  // namespace evotune
