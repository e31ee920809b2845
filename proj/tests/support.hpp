#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "nph/generators.hpp"
#include "nph/cover.hpp"
#include "nph/degree.hpp"
#include "nph/error.hpp"
#include "nph/index.hpp"
#include "nph/random.hpp"

namespace support {

using namespace nph;

inline TurnClass tc(std::int64_t p, std::int64_t q) { return TurnClass(Turn(p, q)); }

inline std::shared_ptr<const SurfaceComplex> mesh(const std::string& name) {
  return std::make_shared<const SurfaceComplex>(base_by_name(name));
}

inline std::shared_ptr<const BundleCocycle> tangent(const std::string& name) {
  return std::make_shared<const BundleCocycle>(tangent_like(mesh(name)));
}

inline std::shared_ptr<const BundleCocycle> trivial(const std::string& name) {
  return std::make_shared<const BundleCocycle>(BundleCocycle::trivial(mesh(name)));
}

// Winding by enumerating the three candidate lifts of every step, written
// independently of shortest_lift.
inline std::int64_t brute_winding(const std::vector<Rational>& reps) {
  Rational total = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Rational diff = reps[(i + 1) % reps.size()] - reps[i];
    int found = 0;
    for (int k = -2; k <= 2; ++k) {
      const Rational d = diff + k;
      if (d > Rational(-1, 2) && d < Rational(1, 2)) {
        total += d;
        ++found;
      }
    }
    if (found != 1) throw std::runtime_error("step without a unique short lift");
  }
  if (boost::multiprecision::denominator(total) != 1) throw std::runtime_error("non-integral total");
  return boost::multiprecision::numerator(total).convert_to<std::int64_t>();
}

// Sum of vertex holonomies, recomputed from the raw edge records: each
// crossing contributes +-turn depending on which way the link crosses the
// edge and which endpoint slot it uses. Reflection-free bundles only.
inline std::int64_t summed_holonomy(const BundleCocycle& b, const std::optional<Orientation>& o) {
  const SurfaceComplex& c = b.base();
  Rational total = 0;
  for (int v = 0; v < c.vertex_count(); ++v) {
    const VertexLink link = vertex_link(c, v, o);
    for (const LinkEntry& e : link.entries) {
      const int h = c.edge_halfedge(e.edge);
      const int slot = c.source(h) == v ? 0 : 1;
      const Rational t = b.edges()[e.edge][slot].turn.value();
      total += e.exit == h ? t : Rational(-t);
    }
  }
  if (boost::multiprecision::denominator(total) != 1) throw std::runtime_error("non-integral holonomy");
  return boost::multiprecision::numerator(total).convert_to<std::int64_t>();
}

}  // namespace support
