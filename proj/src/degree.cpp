#include "nph/degree.hpp"

#include <algorithm>
#include <numeric>

#include "nph/error.hpp"

namespace nph {

namespace {

constexpr std::size_t kSampleBudget = std::size_t{1} << 16;

// Cumulative lifts of a loop, one entry per sample plus the closing one.
std::vector<Rational> lift(const SampledLoop& loop) {
  auto s = loop.samples();
  std::vector<Rational> out;
  out.reserve(s.size() + 1);
  out.push_back(s[0].turn().value());
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(out.back() + shortest_lift(s[i], s[(i + 1) % s.size()]).value());
  return out;
}

BigInt floor_of(const Rational& x) {
  BigInt q = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
  if (x < 0 && Rational(q) != x) --q;
  return q;
}

Rational ceil_of(const Rational& x) {
  BigInt f = floor_of(x);
  return Rational(f) == x ? Rational(f) : Rational(f + 1);
}

// Piecewise-linear lift of an outer component, extended with period r.
struct OuterLift {
  int r;
  std::int64_t degree;
  std::vector<Rational> values;  // S + 1 entries

  Rational at(const Rational& u) const {
    const std::size_t samples = values.size() - 1;
    const Rational t = u * Rational(static_cast<long long>(samples)) / Rational(r);
    const BigInt m = floor_of(t);
    const Rational frac = t - Rational(m);
    BigInt period = m / static_cast<long long>(samples);
    BigInt slot = m % static_cast<long long>(samples);
    if (slot < 0) {
      slot += static_cast<long long>(samples);
      --period;
    }
    const std::size_t i = slot.convert_to<std::size_t>();
    const Rational base = values[i] + Rational(period) * Rational(degree);
    return base + frac * (values[i + 1] - values[i]);
  }
};

}  // namespace

StructuredCircleMap::StructuredCircleMap(std::vector<CircleComponent> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorCode::InvalidInput, "structured map needs at least one component");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (c.r < 1) throw Error(ErrorCode::InvalidInput, "component " + std::to_string(i) + " has r < 1");
    if (c.loop.size() % static_cast<std::size_t>(c.r) != 0)
      throw Error(ErrorCode::InvalidInput, "component " + std::to_string(i) + ": sample count " +
                                               std::to_string(c.loop.size()) + " is not divisible by r = " +
                                               std::to_string(c.r));
  }
}

int StructuredCircleMap::n() const {
  int total = 0;
  for (const auto& c : components_) total += c.r;
  return total;
}

StructuredS0Map::StructuredS0Map(std::vector<S0Point> points) : points_(std::move(points)) {
  int balance = 0;
  for (const auto& p : points_) {
    if ((p.base != 1 && p.base != -1) || (p.image != 1 && p.image != -1))
      throw Error(ErrorCode::InvalidInput, "S0 coordinates must be +1 or -1");
    balance += p.base;
  }
  if (points_.empty() || balance != 0)
    throw Error(ErrorCode::InvalidInput, "S0 map needs the same positive number of points over each base point");
}

int StructuredS0Map::coincidences() const {
  return static_cast<int>(std::count_if(points_.begin(), points_.end(), [](const S0Point& p) { return p.base == p.image; }));
}

std::int64_t degree_circle(const StructuredCircleMap& m) {
  std::int64_t total = 0;
  for (const auto& c : m.components()) total += winding(c.loop);
  return total;
}

std::int64_t degree_s0(const StructuredS0Map& m) { return m.coincidences() - m.n(); }

StructuredCircleMap compose(const StructuredCircleMap& outer, const StructuredCircleMap& inner) {
  std::vector<OuterLift> lifts;
  Rational spacing = -1;
  for (const auto& c : outer.components()) {
    OuterLift l{c.r, winding(c.loop), lift(c.loop)};
    const Rational gap = Rational(c.r) / Rational(static_cast<long long>(c.loop.size()));
    if (spacing < 0 || gap < spacing) spacing = gap;
    lifts.push_back(std::move(l));
  }

  std::vector<CircleComponent> out;
  for (const auto& ic : inner.components()) {
    const std::vector<Rational> f = lift(ic.loop);
    const std::size_t samples = ic.loop.size();
    const std::int64_t w = winding(ic.loop);

    // A uniform refinement keeps equal sample counts per base sector and
    // every step within one outer sample spacing.
    Rational parts = 1;
    for (std::size_t i = 0; i < samples; ++i) parts = std::max(parts, ceil_of(abs(f[i + 1] - f[i]) / spacing));
    if (parts > Rational(static_cast<long long>(kSampleBudget)))
      throw Error(ErrorCode::RefinementLimit, "inner steps need more than 2^16 subdivisions");
    const long long q = static_cast<long long>(boost::multiprecision::numerator(parts));
    std::vector<Rational> refined;
    refined.reserve(samples * q);
    for (std::size_t i = 0; i < samples; ++i)
      for (long long k = 0; k < q; ++k) refined.push_back(f[i] + (f[i + 1] - f[i]) * Rational(k, q));

    for (const OuterLift& ol : lifts) {
      const int g = static_cast<int>(std::gcd(((w % ol.r) + ol.r) % ol.r, static_cast<std::int64_t>(ol.r)));
      const int cycles = g == 0 ? ol.r : g;
      const int length = ol.r / cycles;
      if (refined.size() * static_cast<std::size_t>(length) > kSampleBudget)
        throw Error(ErrorCode::RefinementLimit, "composite component would exceed 2^16 samples");
      for (int start = 0; start < cycles; ++start) {
        std::vector<TurnClass> values;
        values.reserve(refined.size() * length);
        for (int lap = 0; lap < length; ++lap) {
          const Rational shift = Rational(static_cast<long long>(start) + static_cast<long long>(lap) * w);
          for (const Rational& x : refined) values.emplace_back(Turn(ol.at(x + shift)));
        }
        out.push_back({ic.r * length, SampledLoop(std::move(values))});
      }
    }
  }
  return StructuredCircleMap(std::move(out));
}

StructuredCircleMap lens_map(int n, int d, int samples_per_sector) {
  if (n < 1) throw Error(ErrorCode::InvalidParams, "lens map needs n >= 1");
  const int K = samples_per_sector > 0 ? samples_per_sector : 2 * std::max(std::abs(d), n) + 1;
  const int k = d == 0 ? n : std::gcd(std::abs(d), n);
  const int r = n / k;
  std::vector<CircleComponent> components;
  for (int j0 = 0; j0 < k; ++j0) {
    std::vector<TurnClass> values;
    values.reserve(static_cast<std::size_t>(r) * K);
    for (long long m = 0; m < static_cast<long long>(r) * K; ++m)
      values.emplace_back(Turn(Rational(d * m + static_cast<long long>(j0) * K, static_cast<long long>(K) * n)));
    components.push_back({r, SampledLoop(std::move(values))});
  }
  return StructuredCircleMap(std::move(components));
}

std::int64_t lefschetz(std::int64_t degree, int n, int dim_v) {
  if (dim_v == 2) return n - degree;
  if (dim_v == 1) return n + degree;
  throw Error(ErrorCode::InvalidParams, "dimV must be 1 or 2");
}

}  // namespace nph
