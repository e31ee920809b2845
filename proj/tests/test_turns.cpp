#include <doctest.h>

#include "nph/error.hpp"
#include "support.hpp"

using namespace nph;
using support::tc;

namespace {

std::vector<TurnClass> loop(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<TurnClass> out;
  for (auto [p, q] : xs) out.push_back(tc(p, q));
  return out;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("rational text round trip and rejection") {
  CHECK(format_rational(parse_rational("6/8")) == "3/4");
  CHECK(format_rational(parse_rational("-2/4")) == "-1/2");
  CHECK(format_rational(parse_rational("5")) == "5");
  CHECK(format_rational(parse_rational("0/7")) == "0");
  for (const char* bad : {"1/0", "", "a/2", "1/-2", "--1", "1//2", " 1/2", "1.5"})
    CHECK(code_of([&] { parse_rational(bad); }) == ErrorCode::ParseError);
}

TEST_CASE("turn classes reduce into [0,1)") {
  CHECK(TurnClass(Turn(5, 4)).str() == "1/4");
  CHECK(TurnClass(Turn(-1, 3)).str() == "2/3");
  CHECK(TurnClass(Turn(3, 1)).str() == "0");
  CHECK(TurnClass(Turn(-7, 2)) == tc(1, 2));
  CHECK(Turn(2, 4) == Turn(1, 2));
}

TEST_CASE("shortest lift examples") {
  CHECK(shortest_lift(tc(0, 1), tc(1, 3)) == Turn(1, 3));
  CHECK(shortest_lift(tc(1, 4), tc(1, 4)) == Turn(0, 1));
  CHECK(shortest_lift(tc(9, 10), tc(1, 10)) == Turn(1, 5));
  CHECK(shortest_lift(tc(1, 10), tc(9, 10)) == Turn(-1, 5));
  CHECK(code_of([] { shortest_lift(tc(0, 1), tc(1, 2)); }) == ErrorCode::HalfTurnAmbiguity);
  CHECK(code_of([] { shortest_lift(tc(1, 8), tc(5, 8)); }) == ErrorCode::HalfTurnAmbiguity);
}

TEST_CASE("circle distance") {
  CHECK(circle_distance(tc(1, 10), tc(9, 10)) == Rational(1, 5));
  CHECK(circle_distance(tc(0, 1), tc(1, 2)) == Rational(1, 2));
  CHECK(circle_distance(tc(1, 3), tc(1, 3)) == 0);
}

TEST_CASE("winding examples") {
  CHECK(winding(loop({{0, 1}, {1, 3}, {2, 3}})) == 1);
  CHECK(winding(loop({{1, 4}, {1, 4}, {1, 4}})) == 0);
  CHECK(winding(loop({{0, 1}, {2, 5}, {4, 5}, {1, 5}, {3, 5}})) == 2);
  CHECK(winding(loop({{2, 3}, {1, 3}, {0, 1}})) == -1);
  CHECK(winding(loop({{1, 7}})) == 0);
  CHECK(winding(loop({{0, 1}, {1, 3}})) == 0);
  CHECK(code_of([] { winding(loop({{0, 1}, {1, 4}, {3, 4}})); }) == ErrorCode::HalfTurnAmbiguity);
  CHECK_THROWS_AS(SampledLoop(std::vector<TurnClass>{}), Error);
}

TEST_CASE("winding agrees with brute-force lift enumeration") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int len = 1 + static_cast<int>(rng.below(12));
    std::vector<TurnClass> xs;
    std::vector<Rational> reps;
    for (int i = 0; i < len; ++i) {
      xs.push_back(rng.angle());
      reps.push_back(xs.back().turn().value());
    }
    std::int64_t expected;
    try {
      expected = support::brute_winding(reps);
    } catch (const std::runtime_error&) {
      CHECK_THROWS_AS(winding(xs), Error);
      continue;
    }
    CHECK(winding(xs) == expected);
  }
}

TEST_CASE("winding is rotation invariant, reverses sign, adds under concatenation") {
  Rng rng(11);
  int checked = 0;
  while (checked < 200) {
    const int len = 2 + static_cast<int>(rng.below(10));
    std::vector<TurnClass> xs;
    for (int i = 0; i < len; ++i) xs.push_back(rng.angle());
    std::int64_t w;
    try {
      w = winding(xs);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    std::vector<TurnClass> rotated(xs.begin() + 1, xs.end());
    rotated.push_back(xs.front());
    CHECK(winding(rotated) == w);
    std::vector<TurnClass> reversed(xs.rbegin(), xs.rend());
    CHECK(winding(reversed) == -w);

    // Concatenate with a second loop sharing the first sample.
    std::vector<TurnClass> ys = {xs.front()};
    for (int i = 0; i < 5; ++i) ys.push_back(rng.angle());
    std::int64_t wy;
    try {
      wy = winding(ys);
    } catch (const Error&) {
      continue;
    }
    std::vector<TurnClass> joined = xs;
    joined.push_back(xs.front());
    joined.insert(joined.end(), ys.begin() + 1, ys.end());
    CHECK(winding(joined) == w + wy);
  }
}

TEST_CASE("power loops wind exactly d") {
  for (int K = 3; K <= 40; ++K)
    for (int d = -K; d <= K; ++d) {
      if (2 * std::abs(d) >= K) continue;
      std::vector<TurnClass> xs;
      for (int j = 0; j < K; ++j) xs.push_back(tc(static_cast<std::int64_t>(j) * d, K));
      CHECK(winding(xs) == d);
    }
}
