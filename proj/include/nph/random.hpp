#pragma once

// nph-rng-v1: std::mt19937_64 seeded with the user seed; bounded draws are
// `next() % bound`. Both pieces are fully specified by the C++ standard, so
// outputs are identical on every platform. Bump the version name if this
// ever changes.

#include <cstdint>
#include <random>

#include "nph/turns.hpp"

namespace nph {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  // A rational angle in [0, 1) drawn from a fixed denominator table.
  TurnClass angle();
  // A magnitude in {1, ..., 4}.
  Rational magnitude() { return Rational(static_cast<long long>(1 + below(4))); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nph
