#pragma once

#include <cstdint>
#include <random>

namespace nirrt {

/// Seeded random stream. Every random decision in the library goes through
/// one of these; identical seed and call sequence give identical output.
/// Single owner: move it between threads, never share it.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  /// Independent child stream derived from this stream's seed and `stream`.
  /// Does not advance this stream.
  Rng fork(std::uint64_t stream) const;

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform01();
  /// Uniform in [lo, hi]; returns lo when lo == hi.
  double uniform(double lo, double hi);
  double normal();
  /// Uniform index in [0, n).
  std::size_t index(std::size_t n);
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace nirrt
