#include "nph/complexes.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "nph/error.hpp"

namespace nph {

namespace {

int prev_in_face(int h) { return 3 * (h / 3) + (h % 3 + 2) % 3; }

void check_faces(int vertex_count, const std::vector<Face>& faces) {
  if (vertex_count <= 0) throw Error(ErrorCode::InvalidInput, "vertex count must be positive");
  if (faces.empty()) throw Error(ErrorCode::InvalidInput, "surface has no faces");
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const Face& t = faces[f];
    for (int v : t)
      if (v < 0 || v >= vertex_count)
        throw Error(ErrorCode::InvalidInput, "face " + std::to_string(f) + " has out-of-range vertex " + std::to_string(v));
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      throw Error(ErrorCode::InvalidInput, "face " + std::to_string(f) + " repeats a vertex");
  }
}

// Walk around the corner fan starting at `start` (a corner index 3f+j),
// leaving through `first_exit`.
VertexLink trace(const SurfaceComplex& c, int start, int first_exit) {
  const int v = c.source(start);
  VertexLink link{v, {}};
  int corner = start;
  int exit = first_exit;
  const std::size_t limit = c.corners_of(v).size();
  while (true) {
    link.entries.push_back({corner / 3, corner % 3, exit, c.edge_of(exit)});
    if (link.entries.size() > limit) break;
    const int t = c.twin(exit);
    const int g = t / 3;
    const int k = c.source(t) == v ? t % 3 : (t % 3 + 1) % 3;
    const int next_corner = 3 * g + k;
    // The two halfedges of g touching corner k are (g,k) and (g,k-1).
    exit = (t == next_corner) ? prev_in_face(next_corner) : next_corner;
    corner = next_corner;
    if (corner == start) break;
  }
  if (link.entries.size() != limit)
    throw Error(ErrorCode::PinchedVertex, "link of vertex " + std::to_string(v) + " is not a single cycle");
  return link;
}

}  // namespace

void SurfaceComplex::set_coords(std::vector<Point3> coords) {
  if (static_cast<int>(coords.size()) != vertex_count_)
    throw Error(ErrorCode::InvalidInput, "coordinate count does not match vertex count");
  coords_ = std::move(coords);
}

void SurfaceComplex::finish_connectivity() {
  const int nh = halfedge_count();
  edge_of_.assign(nh, -1);
  edge_halfedge_.clear();
  for (int h = 0; h < nh; ++h) {
    if (edge_of_[h] != -1) continue;
    const int e = static_cast<int>(edge_halfedge_.size());
    edge_halfedge_.push_back(h);
    edge_of_[h] = e;
    edge_of_[twins_[h]] = e;
  }

  corners_.assign(vertex_count_, {});
  for (int f = 0; f < face_count(); ++f)
    for (int j = 0; j < 3; ++j) corners_[faces_[f][j]].push_back(3 * f + j);

  face_component_.assign(face_count(), -1);
  components_ = 0;
  for (int seed = 0; seed < face_count(); ++seed) {
    if (face_component_[seed] != -1) continue;
    std::queue<int> todo;
    todo.push(seed);
    face_component_[seed] = components_;
    while (!todo.empty()) {
      const int f = todo.front();
      todo.pop();
      for (int j = 0; j < 3; ++j) {
        const int g = twins_[3 * f + j] / 3;
        if (face_component_[g] == -1) {
          face_component_[g] = components_;
          todo.push(g);
        }
      }
    }
    ++components_;
  }

  for (int v = 0; v < vertex_count_; ++v) {
    if (corners_[v].empty())
      throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(v) + " is not used by any face");
    trace(*this, corners_[v].front(), corners_[v].front());
  }
}

SurfaceComplex SurfaceComplex::validate(int vertex_count, std::vector<Face> faces) {
  check_faces(vertex_count, faces);
  std::set<Face> seen;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    Face key = faces[f];
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) throw Error(ErrorCode::DuplicateFace, "face " + std::to_string(f) + " is a duplicate");
  }

  std::map<std::pair<int, int>, std::vector<int>> by_edge;
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int j = 0; j < 3; ++j) {
      int a = faces[f][j], b = faces[f][(j + 1) % 3];
      by_edge[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(3 * f) + j);
    }

  SurfaceComplex c;
  c.vertex_count_ = vertex_count;
  c.faces_ = std::move(faces);
  c.twins_.assign(c.halfedge_count(), -1);
  for (const auto& [key, hs] : by_edge) {
    if (hs.size() != 2)
      throw Error(ErrorCode::NonManifoldEdge, "edge (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                                                  ") lies in " + std::to_string(hs.size()) + " faces");
    c.twins_[hs[0]] = hs[1];
    c.twins_[hs[1]] = hs[0];
  }
  c.simplicial_ = true;
  c.finish_connectivity();
  if (c.components_ != 1)
    throw Error(ErrorCode::Disconnected, "complex has " + std::to_string(c.components_) + " components");
  return c;
}

SurfaceComplex SurfaceComplex::from_gluing(int vertex_count, std::vector<Face> faces, std::vector<int> twins) {
  check_faces(vertex_count, faces);
  if (twins.size() != 3 * faces.size()) throw Error(ErrorCode::InvalidInput, "twin table has wrong size");
  SurfaceComplex c;
  c.vertex_count_ = vertex_count;
  c.faces_ = std::move(faces);
  c.twins_ = std::move(twins);
  const int nh = c.halfedge_count();
  for (int h = 0; h < nh; ++h) {
    const int t = c.twins_[h];
    if (t < 0 || t >= nh || t == h || c.twins_[t] != h)
      throw Error(ErrorCode::NonManifoldEdge, "halfedge " + std::to_string(h) + " has an invalid twin");
    const bool opposite = c.source(h) == c.target(t) && c.target(h) == c.source(t);
    const bool same = c.source(h) == c.source(t) && c.target(h) == c.target(t);
    if (!opposite && !same)
      throw Error(ErrorCode::NonManifoldEdge, "halfedge " + std::to_string(h) + " is glued to a different edge");
  }
  c.finish_connectivity();
  return c;
}

CircleComplex::CircleComplex(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 1) throw Error(ErrorCode::InvalidInput, "circle needs at least one vertex");
}

std::int64_t euler_characteristic(const SurfaceComplex& c) {
  return static_cast<std::int64_t>(c.vertex_count()) - c.edge_count() + c.face_count();
}

std::int64_t euler_characteristic(const CircleComplex&) { return 0; }

std::optional<Orientation> orient(const SurfaceComplex& c) {
  const int nf = c.face_count();
  std::vector<int> state(nf, -1);  // -1 unvisited, else flip bit
  for (int seed = 0; seed < nf; ++seed) {
    if (state[seed] != -1) continue;
    state[seed] = 0;
    std::queue<int> todo;
    todo.push(seed);
    while (!todo.empty()) {
      const int f = todo.front();
      todo.pop();
      for (int j = 0; j < 3; ++j) {
        const int h = 3 * f + j;
        const int t = c.twin(h);
        const int g = t / 3;
        // Coherent stored orders traverse the shared edge in opposite directions.
        const bool coherent = c.source(h) == c.target(t);
        const int want = coherent ? state[f] : 1 - state[f];
        if (state[g] == -1) {
          state[g] = want;
          todo.push(g);
        } else if (state[g] != want) {
          return std::nullopt;
        }
      }
    }
  }
  Orientation o;
  o.flip.reserve(nf);
  for (int s : state) o.flip.push_back(s == 1);
  return o;
}

VertexLink vertex_link(const SurfaceComplex& c, int v, const std::optional<Orientation>& orientation) {
  if (v < 0 || v >= c.vertex_count()) throw Error(ErrorCode::InvalidInput, "vertex out of range");
  const int start = c.corners_of(v).front();
  const int incoming = prev_in_face(start);  // runs from corner j-1 into corner j
  const int outgoing = start;
  int exit;
  if (orientation) {
    // Counter-clockwise: leave through the edge towards the previous vertex
    // of the oriented face.
    exit = orientation->flip[start / 3] ? outgoing : incoming;
  } else {
    exit = c.edge_of(incoming) < c.edge_of(outgoing) ? incoming : outgoing;
  }
  return trace(c, start, exit);
}

VertexLink vertex_link(const SurfaceComplex& c, int v) { return vertex_link(c, v, orient(c)); }

std::vector<VertexLink> all_links(const SurfaceComplex& c, const std::optional<Orientation>& orientation) {
  std::vector<VertexLink> out;
  out.reserve(c.vertex_count());
  for (int v = 0; v < c.vertex_count(); ++v) out.push_back(vertex_link(c, v, orientation));
  return out;
}

SurfaceComplex reversed(const SurfaceComplex& c) {
  std::vector<Face> faces = c.faces();
  for (Face& f : faces) std::swap(f[1], f[2]);
  if (c.simplicial()) {
    SurfaceComplex r = SurfaceComplex::validate(c.vertex_count(), std::move(faces));
    if (c.coords()) r.set_coords(*c.coords());
    return r;
  }
  // Swapping corners 1 and 2 maps halfedge slots 0->2, 1->1, 2->0.
  auto remap = [](int h) { return 3 * (h / 3) + (2 - h % 3); };
  std::vector<int> twins(c.halfedge_count());
  for (int h = 0; h < c.halfedge_count(); ++h) twins[remap(h)] = remap(c.twin(h));
  SurfaceComplex r = SurfaceComplex::from_gluing(c.vertex_count(), std::move(faces), std::move(twins));
  if (c.coords()) r.set_coords(*c.coords());
  return r;
}

}  // namespace nph
