#include "nph/random.hpp"

#include <array>

namespace nph {

TurnClass Rng::angle() {
  // Even denominators keep exact half-turn steps possible, so callers must
  // handle resampling; odd ones keep them rare.
  static constexpr std::array<std::int64_t, 12> kDenominators{7, 11, 13, 16, 17, 19, 23, 24, 29, 31, 37, 48};
  const std::int64_t q = kDenominators[below(kDenominators.size())];
  const auto p = static_cast<std::int64_t>(below(static_cast<std::uint64_t>(q)));
  return TurnClass(Turn(p, q));
}

}  // namespace nph
