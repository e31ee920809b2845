#pragma once

// Structured finite-valued maps f/p over the circle and over S^0.
//
// A circle map is a finite cover of S^1 (a disjoint union of circles, the
// i-th wrapping r_i times) with a map to S^1 given by exact samples. Samples
// of a component are taken at equally spaced points of its r_i-fold
// traversal, starting over the base point.

#include <cstdint>
#include <vector>

#include "nph/turns.hpp"

namespace nph {

struct CircleComponent {
  int r = 1;
  SampledLoop loop{std::vector<TurnClass>{TurnClass{}}};
};

class StructuredCircleMap {
 public:
  StructuredCircleMap() = default;
  // Throws InvalidInput unless every r >= 1 divides its sample count.
  explicit StructuredCircleMap(std::vector<CircleComponent> components);

  const std::vector<CircleComponent>& components() const noexcept { return components_; }
  int n() const;

 private:
  std::vector<CircleComponent> components_;
};

struct S0Point {
  int base = 1;
  int image = 1;
};

class StructuredS0Map {
 public:
  // Throws InvalidInput unless every coordinate is +-1 and both base points
  // carry the same number of points.
  explicit StructuredS0Map(std::vector<S0Point> points);

  const std::vector<S0Point>& points() const noexcept { return points_; }
  int n() const { return static_cast<int>(points_.size() / 2); }
  int coincidences() const;

 private:
  std::vector<S0Point> points_;
};

std::int64_t degree_circle(const StructuredCircleMap& m);
std::int64_t degree_s0(const StructuredS0Map& m);

// outer after inner, on the pulled-back cover. Throws RefinementLimit when a
// composite component would need more than 2^16 samples.
StructuredCircleMap compose(const StructuredCircleMap& outer, const StructuredCircleMap& inner);

// The quotient family {(z, w) : z^d = w^n} -> w, sampled K times per sector.
StructuredCircleMap lens_map(int n, int d, int samples_per_sector = 0);

// Solves deg = (-1)^dimV (n - L) for L.
std::int64_t lefschetz(std::int64_t degree, int n, int dim_v);

}  // namespace nph
