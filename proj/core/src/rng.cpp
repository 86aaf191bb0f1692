#include "nirrt/rng.hpp"

#include "nirrt/errors.hpp"

namespace nirrt {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

Rng Rng::fork(std::uint64_t stream) const {
  return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

double Rng::uniform01() {
  // 53 random mantissa bits.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  if (lo == hi) return lo;
  return lo + (hi - lo) * uniform01();
}

double Rng::normal() { return normal_(engine_); }

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw ContractViolation("Rng::index: empty range");
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  return dist(engine_);
}

int Rng::integer(int lo, int hi) {
  if (lo > hi) throw ContractViolation("Rng::integer: lo > hi");
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(engine_);
}

}  // namespace nirrt
