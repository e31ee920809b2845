#include "nph/turns.hpp"

#include <cctype>

#include "nph/error.hpp"

namespace nph {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

const Rational kHalf(1, 2);

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  BigInt p{std::string(num)};
  BigInt q{std::string(den)};
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) {
  const BigInt& den = boost::multiprecision::denominator(value);
  std::string out = boost::multiprecision::numerator(value).str();
  if (den != 1) out += "/" + den.str();
  return out;
}

Turn::Turn(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  value_ = Rational(BigInt(num), BigInt(den));
}

bool Turn::is_integer() const { return boost::multiprecision::denominator(value_) == 1; }

std::int64_t Turn::as_integer() const {
  if (!is_integer()) throw Error(ErrorCode::InvalidInput, "turn " + str() + " is not an integer");
  return boost::multiprecision::numerator(value_).convert_to<std::int64_t>();
}

BigInt Turn::floor() const {
  const BigInt& p = boost::multiprecision::numerator(value_);
  const BigInt& q = boost::multiprecision::denominator(value_);
  BigInt quot = p / q;  // truncates toward zero
  if (p < 0 && quot * q != p) quot -= 1;
  return quot;
}

TurnClass::TurnClass(const Turn& t) : rep_(t.value() - Rational(t.floor())) {}

Turn shortest_lift(const TurnClass& a, const TurnClass& b) {
  // Difference of two representatives lies in (-1, 1).
  Rational d = b.turn().value() - a.turn().value();
  if (d == kHalf || d == -kHalf)
    throw Error(ErrorCode::HalfTurnAmbiguity, "step " + a.str() + " -> " + b.str() + " is a half turn");
  if (d > kHalf) d -= 1;
  if (d < -kHalf) d += 1;
  return Turn(d);
}

Rational circle_distance(const TurnClass& a, const TurnClass& b) {
  Rational d = b.turn().value() - a.turn().value();
  if (d < 0) d = -d;
  return d > kHalf ? Rational(1 - d) : d;
}

SampledLoop::SampledLoop(std::vector<TurnClass> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw Error(ErrorCode::InvalidInput, "sampled loop must be non-empty");
}

std::int64_t winding(std::span<const TurnClass> samples) {
  Turn total;
  const std::size_t k = samples.size();
  for (std::size_t i = 0; i < k; ++i) total += shortest_lift(samples[i], samples[(i + 1) % k]);
  // The steps telescope modulo 1, so the total is integral by construction.
  return total.as_integer();
}

std::int64_t winding(const SampledLoop& loop) { return winding(loop.samples()); }

}  // namespace nph
