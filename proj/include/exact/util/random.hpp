#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace exact {

// Seeded generator with a platform-independent integer mapping, so that a seed
// reproduces the same instances everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }

  // Uniform in the closed range [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }
  bool chance(std::uint32_t numerator, std::uint32_t denominator);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t hash_label(std::string_view label);
// Seed for iteration `index` of the stream named `label`; independent of how
// the iterations are scheduled.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::uint64_t index);

}  // namespace exact
