#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace ptm::util {

/// FNV-1a over bytes; used for content-addressed seeding and feature hashing.
std::uint64_t fnv1a64(std::string_view bytes);

/// splitmix64 step; the standard mixer for seed derivation.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derive a labeled sub-seed from a base seed. One CLI --seed fans out to
/// the generators ("corpus", "unknowns", "init", "shuffle", "augment", ...)
/// so subsystems never consume from each other's streams.
std::uint64_t derive_seed(std::uint64_t base, std::string_view label);

/// Small deterministic PRNG (xoshiro256**). Self-contained on purpose:
/// libstdc++ distributions are implementation-defined, this is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform in [0, n); n must be > 0.
  std::uint64_t uniform(std::uint64_t n);

  /// Uniform in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform double in [0, 1).
  double uniform01();

  /// Uniform double in [lo, hi).
  double uniform_real(double lo, double hi);

  /// Standard normal via Box-Muller.
  double normal();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(v.size()))];
  }

 private:
  std::uint64_t s_[4];
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ptm::util
