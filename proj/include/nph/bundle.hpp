#pragma once

// Discrete rank-2 bundles over surfaces and rank-1 bundles over circles.
//
// A rank-2 bundle carries one frame per face. Crossing an edge is an affine
// map of angles, x -> (reflect ? -x : x) + turn, that rewrites an angle given
// in the frame of the face being entered in the frame of the face being left.
// Lifts are stored per edge endpoint: the link of each endpoint uses its own
// copy, and the two copies agree modulo 1. The integer gap between them is
// what carries the Euler number.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "nph/complexes.hpp"
#include "nph/turns.hpp"

namespace nph {

struct Transition {
  bool reflect = false;
  Turn turn;

  // Angle in the entered face's frame -> angle in the left face's frame.
  Turn pull(const Turn& angle) const { return (reflect ? -angle : angle) + turn; }
  // Inverse of pull.
  Turn push(const Turn& angle) const {
    Turn d = angle - turn;
    return reflect ? -d : d;
  }
  Transition inverse() const { return {reflect, reflect ? turn : -turn}; }
  // (*this) after `inner`: x -> pull(inner.pull(x)).
  Transition after(const Transition& inner) const { return {reflect != inner.reflect, pull(inner.turn)}; }

  friend bool operator==(const Transition&, const Transition&) = default;
};

// Transitions across edge e, indexed by endpoint slot (0 = source of the
// edge's canonical halfedge, 1 = its target), each running from the face of
// the canonical halfedge to the face of its twin.
using EdgeTransitions = std::array<Transition, 2>;

class BundleCocycle {
 public:
  // Checks per-edge consistency mod 1 and that every vertex link composes to
  // a reflection-free integer turn. Throws CocycleViolation.
  BundleCocycle(std::shared_ptr<const SurfaceComplex> base, std::vector<EdgeTransitions> edges);

  // The trivial bundle (identity transitions everywhere).
  static BundleCocycle trivial(std::shared_ptr<const SurfaceComplex> base);

  const SurfaceComplex& base() const noexcept { return *base_; }
  const std::shared_ptr<const SurfaceComplex>& base_ptr() const noexcept { return base_; }
  const std::vector<EdgeTransitions>& edges() const noexcept { return edges_; }
  const std::optional<Orientation>& orientation() const noexcept { return orientation_; }
  const std::vector<VertexLink>& links() const noexcept { return links_; }
  bool has_reflections() const noexcept;

  // Transition used by `link` when leaving entry i towards entry i+1.
  Transition crossing(const VertexLink& link, std::size_t i) const;
  // Composite of all crossings around the link: entry-0 frame after a full
  // circuit, expressed in the entry-0 frame.
  Transition holonomy(const VertexLink& link) const;
  // Integer H(v) of the vertex with the bundle's own link direction.
  std::int64_t vertex_holonomy(int v) const;

 private:
  std::shared_ptr<const SurfaceComplex> base_;
  std::vector<EdgeTransitions> edges_;
  std::optional<Orientation> orientation_;
  std::vector<VertexLink> links_;
};

// Sum of H(v) with links oriented by `orientation`. Throws NotOrientable,
// HasReflections, CocycleViolation.
std::int64_t euler_number(const BundleCocycle& b, const std::optional<Orientation>& orientation);
std::int64_t euler_number(const BundleCocycle& b);

// Canonical bundle with euler_number == chi on orientable bases. All turns
// are integers; the +-1 corrections sit at |chi| vertices picked by greedy
// farthest-point selection from vertex 0. Non-orientable bases get
// reflections wherever stored face orders disagree.
BundleCocycle tangent_like(std::shared_ptr<const SurfaceComplex> c);

// Vertices carrying the tangent_like corrections, in selection order.
std::vector<int> tangent_like_vertices(const SurfaceComplex& c, std::size_t count);

// Rank-1 bundle over a circle: one sign per vertex crossing.
class LineCocycle {
 public:
  LineCocycle(CircleComplex base, std::vector<int> signs);
  static LineCocycle trivial(CircleComplex base);

  const CircleComplex& base() const noexcept { return base_; }
  const std::vector<int>& signs() const noexcept { return signs_; }
  int sign(int v) const { return signs_[v]; }

 private:
  CircleComplex base_;
  std::vector<int> signs_;
};

// Parity of the number of -1 signs.
int line_w1(const LineCocycle& b);

// Top Stiefel-Whitney number: parity of the mod-2 index total of a random
// single field drawn from `seed`. Throws ResampleLimitExceeded.
int sw_top(const BundleCocycle& b, std::uint64_t seed);

}  // namespace nph
