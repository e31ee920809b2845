#pragma once

// Exact angle arithmetic. Angles are rationals measured in full turns
// (1 turn = 2*pi radians); there is no floating point anywhere in here.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parse "p/q" or "p" with optional leading minus. Rejects q == 0 and junk.
Rational parse_rational(std::string_view text);
// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string format_rational(const Rational& value);

// A real-lifted (unreduced) angle in turns.
class Turn {
 public:
  Turn() = default;
  explicit Turn(Rational value) : value_(std::move(value)) {}
  Turn(std::int64_t num, std::int64_t den);

  static Turn parse(std::string_view text) { return Turn(parse_rational(text)); }
  std::string str() const { return format_rational(value_); }

  const Rational& value() const noexcept { return value_; }
  bool is_integer() const;
  // Exact integer value; throws InvalidInput when not integral.
  std::int64_t as_integer() const;
  BigInt floor() const;

  Turn operator-() const { return Turn(-value_); }
  Turn& operator+=(const Turn& o) { value_ += o.value_; return *this; }
  Turn& operator-=(const Turn& o) { value_ -= o.value_; return *this; }
  friend Turn operator+(Turn a, const Turn& b) { return a += b; }
  friend Turn operator-(Turn a, const Turn& b) { return a -= b; }
  friend Turn operator*(std::int64_t k, const Turn& t) { return Turn(Rational(k) * t.value_); }
  friend Turn operator*(const Rational& k, const Turn& t) { return Turn(k * t.value_); }

  friend bool operator==(const Turn& a, const Turn& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Turn& a, const Turn& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

// An angle of a non-zero vector: a Turn reduced into [0, 1).
class TurnClass {
 public:
  TurnClass() = default;
  explicit TurnClass(const Turn& t);
  static TurnClass parse(std::string_view text) { return TurnClass(Turn::parse(text)); }

  const Turn& turn() const noexcept { return rep_; }
  std::string str() const { return rep_.str(); }

  friend bool operator==(const TurnClass&, const TurnClass&) = default;
  friend auto operator<=>(const TurnClass& a, const TurnClass& b) { return a.rep_ <=> b.rep_; }

 private:
  Turn rep_;
};

// The unique d with |d| < 1/2 and a + d == b (mod 1). Throws
// HalfTurnAmbiguity when b - a == 1/2 (mod 1).
Turn shortest_lift(const TurnClass& a, const TurnClass& b);

// Absolute distance on the circle, in [0, 1/2]; defined even at the half turn.
Rational circle_distance(const TurnClass& a, const TurnClass& b);

// Cyclically ordered, non-empty sequence of angle samples.
class SampledLoop {
 public:
  explicit SampledLoop(std::vector<TurnClass> samples);
  std::span<const TurnClass> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }

 private:
  std::vector<TurnClass> samples_;
};

// Sum of shortest lifts over all cyclic consecutive pairs. Always an exact
// integer; HalfTurnAmbiguity propagates from any step.
std::int64_t winding(const SampledLoop& loop);
std::int64_t winding(std::span<const TurnClass> samples);

}  // namespace nph
