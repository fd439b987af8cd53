#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace mcp {

/// Seedable generator whose output is identical on every platform.
///
/// The engine is std::mt19937_64, whose sequence the C++ standard fixes
/// exactly. Standard distributions and std::shuffle are implementation-defined,
/// so bounded draws use rejection sampling on the top bits and shuffling is an
/// explicit Fisher-Yates from the back.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + std::int64_t(below(std::uint64_t(hi - lo) + 1));
  }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

  /// Independent stream for (seed, stream) via SplitMix64 mixing.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
};

}  // namespace mcp
