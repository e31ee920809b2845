#include "nph/bundle.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "nph/error.hpp"

namespace nph {

namespace {

// Integer difference of two congruent turns, or nullopt when not congruent.
bool congruent(const Turn& a, const Turn& b) { return (a - b).is_integer(); }

}  // namespace

BundleCocycle::BundleCocycle(std::shared_ptr<const SurfaceComplex> base, std::vector<EdgeTransitions> edges)
    : base_(std::move(base)), edges_(std::move(edges)) {
  if (!base_) throw Error(ErrorCode::InvalidInput, "bundle needs a base complex");
  if (static_cast<int>(edges_.size()) != base_->edge_count())
    throw Error(ErrorCode::SizeMismatch, "one transition pair per edge is required");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& [a, b] = edges_[e];
    if (a.reflect != b.reflect || !congruent(a.turn, b.turn))
      throw Error(ErrorCode::CocycleViolation,
                  "edge " + std::to_string(e) + " endpoint transitions disagree modulo 1");
  }
  orientation_ = orient(*base_);
  links_ = all_links(*base_, orientation_);
  for (const VertexLink& link : links_) {
    Transition h = holonomy(link);
    if (h.reflect || !h.turn.is_integer())
      throw Error(ErrorCode::CocycleViolation, "vertex " + std::to_string(link.vertex) +
                                                   " link composite is not an integer rotation");
  }
}

BundleCocycle BundleCocycle::trivial(std::shared_ptr<const SurfaceComplex> base) {
  std::vector<EdgeTransitions> edges(base->edge_count());
  return BundleCocycle(std::move(base), std::move(edges));
}

bool BundleCocycle::has_reflections() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const EdgeTransitions& t) { return t[0].reflect; });
}

Transition BundleCocycle::crossing(const VertexLink& link, std::size_t i) const {
  const LinkEntry& entry = link.entries[i];
  const SurfaceComplex& c = *base_;
  const int x = entry.exit;
  const int h = c.edge_halfedge(entry.edge);
  const bool leaves_from_source = (x % 3) == entry.corner;  // vertex is source(x)
  if (x == h) return edges_[entry.edge][leaves_from_source ? 0 : 1];
  // Crossing against the stored direction; source(x) is target(h).
  return edges_[entry.edge][leaves_from_source ? 1 : 0].inverse();
}

Transition BundleCocycle::holonomy(const VertexLink& link) const {
  Transition acc;
  for (std::size_t i = 0; i < link.size(); ++i) acc = acc.after(crossing(link, i));
  return acc;
}

std::int64_t BundleCocycle::vertex_holonomy(int v) const { return holonomy(links_.at(v)).turn.as_integer(); }

std::int64_t euler_number(const BundleCocycle& b, const std::optional<Orientation>& orientation) {
  if (!orientation) throw Error(ErrorCode::NotOrientable, "euler number needs an oriented base");
  if (b.has_reflections()) throw Error(ErrorCode::HasReflections, "euler number needs a reflection-free cocycle");
  std::int64_t total = 0;
  for (int v = 0; v < b.base().vertex_count(); ++v) {
    Transition h = b.holonomy(vertex_link(b.base(), v, orientation));
    if (h.reflect || !h.turn.is_integer())
      throw Error(ErrorCode::CocycleViolation, "vertex " + std::to_string(v));
    total += h.turn.as_integer();
  }
  return total;
}

std::int64_t euler_number(const BundleCocycle& b) { return euler_number(b, b.orientation()); }

std::vector<int> tangent_like_vertices(const SurfaceComplex& c, std::size_t count) {
  std::vector<int> chosen;
  if (count == 0) return chosen;
  const int nv = c.vertex_count();
  std::vector<std::vector<int>> nbrs(nv);
  for (int h = 0; h < c.halfedge_count(); ++h) nbrs[c.source(h)].push_back(c.target(h));

  std::vector<int> best(nv, std::numeric_limits<int>::max());
  auto absorb = [&](int s) {
    std::vector<int> dist(nv, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : nbrs[u])
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
    }
    for (int v = 0; v < nv; ++v) best[v] = std::min(best[v], dist[v]);
  };

  chosen.push_back(0);
  absorb(0);
  while (chosen.size() < std::min<std::size_t>(count, nv)) {
    int pick = -1;
    for (int v = 0; v < nv; ++v)
      if (pick == -1 || best[v] > best[pick]) pick = v;
    chosen.push_back(pick);
    absorb(pick);
  }
  for (std::size_t i = chosen.size(); i < count; ++i) chosen.push_back(chosen[i % nv]);
  return chosen;
}

BundleCocycle tangent_like(std::shared_ptr<const SurfaceComplex> c) {
  const bool orientable = orient(*c).has_value();
  std::vector<EdgeTransitions> edges(c->edge_count());
  if (!orientable) {
    // Frames follow the stored face orders; flip wherever neighbours disagree.
    for (int e = 0; e < c->edge_count(); ++e) {
      const int h = c->edge_halfedge(e);
      const bool coherent = c->source(h) == c->target(c->twin(h));
      edges[e][0].reflect = edges[e][1].reflect = !coherent;
    }
  }

  const std::int64_t chi = euler_characteristic(*c);
  const int step = chi >= 0 ? 1 : -1;
  const std::vector<int> chosen = tangent_like_vertices(*c, static_cast<std::size_t>(chi >= 0 ? chi : -chi));
  const BundleCocycle flat(c, edges);
  for (int v : chosen) {
    // Raise H(v) by `step` through the first crossing of v's link.
    const VertexLink& link = flat.links()[v];
    const LinkEntry& entry = link.entries.front();
    const int h = c->edge_halfedge(entry.edge);
    const bool from_source = (entry.exit % 3) == entry.corner;
    if (entry.exit == h) {
      edges[entry.edge][from_source ? 0 : 1].turn += Turn(step, 1);
    } else {
      Transition& t = edges[entry.edge][from_source ? 1 : 0];
      t.turn += Turn(t.reflect ? step : -step, 1);
    }
  }
  return BundleCocycle(std::move(c), std::move(edges));
}

LineCocycle::LineCocycle(CircleComplex base, std::vector<int> signs) : base_(base), signs_(std::move(signs)) {
  if (static_cast<int>(signs_.size()) != base_.vertex_count())
    throw Error(ErrorCode::SizeMismatch, "one sign per circle vertex is required");
  for (int s : signs_)
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidInput, "line cocycle signs must be +1 or -1");
}

LineCocycle LineCocycle::trivial(CircleComplex base) {
  return LineCocycle(base, std::vector<int>(base.vertex_count(), 1));
}

int line_w1(const LineCocycle& b) {
  return static_cast<int>(std::count(b.signs().begin(), b.signs().end(), -1) % 2);
}

}  // namespace nph
