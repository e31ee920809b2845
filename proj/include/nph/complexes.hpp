#pragma once

// Closed combinatorial manifolds of dimension 1 and 2.
//
// A SurfaceComplex is a set of triangles glued along edges with explicit
// halfedge twins. Halfedge h = 3*f + j runs from corner j to corner j+1 of
// face f. Complexes read from vertex-triple lists are simplicial (edges are
// identified by their vertex pair); complexes built by gluing, such as
// branched covers, may have several edges between the same two vertices.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace nph {

using Face = std::array<int, 3>;
using Point3 = std::array<double, 3>;

class SurfaceComplex {
 public:
  // Check a raw simplicial face list: closed, connected, manifold, no
  // duplicate faces. Throws NonManifoldEdge / Disconnected / PinchedVertex /
  // DuplicateFace / InvalidInput.
  static SurfaceComplex validate(int vertex_count, std::vector<Face> faces);

  // Build from explicit gluing data (twins[h] is the halfedge glued to h).
  // Connectivity is not required.
  static SurfaceComplex from_gluing(int vertex_count, std::vector<Face> faces, std::vector<int> twins);

  int vertex_count() const noexcept { return vertex_count_; }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edge_halfedge_.size()); }
  int halfedge_count() const noexcept { return 3 * face_count(); }

  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& face(int f) const { return faces_[f]; }
  int twin(int h) const { return twins_[h]; }
  const std::vector<int>& twins() const noexcept { return twins_; }
  int edge_of(int h) const { return edge_of_[h]; }
  // The lower-numbered of the two halfedges of edge e.
  int edge_halfedge(int e) const { return edge_halfedge_[e]; }
  int source(int h) const { return faces_[h / 3][h % 3]; }
  int target(int h) const { return faces_[h / 3][(h % 3 + 1) % 3]; }
  // Corner (3*f + j) entries of vertex v, in increasing order.
  const std::vector<int>& corners_of(int v) const { return corners_[v]; }

  int component_count() const noexcept { return components_; }
  // Component id of each face, numbered by lowest face.
  const std::vector<int>& face_component() const noexcept { return face_component_; }

  // True when built by `validate` (every edge is determined by its endpoints).
  bool simplicial() const noexcept { return simplicial_; }

  const std::optional<std::vector<Point3>>& coords() const noexcept { return coords_; }
  void set_coords(std::vector<Point3> coords);

 private:
  SurfaceComplex() = default;
  void finish_connectivity();

  int vertex_count_ = 0;
  std::vector<Face> faces_;
  std::vector<int> twins_;
  std::vector<int> edge_of_;
  std::vector<int> edge_halfedge_;
  std::vector<std::vector<int>> corners_;
  std::vector<int> face_component_;
  int components_ = 0;
  bool simplicial_ = false;
  std::optional<std::vector<Point3>> coords_;
};

// Cycle graph on vertices 0..N-1; edge i joins i and i+1 (mod N).
class CircleComplex {
 public:
  explicit CircleComplex(int vertex_count);
  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return vertex_count_; }
  // Edge entering vertex v (from v-1) and leaving it (towards v+1).
  int edge_in(int v) const { return (v + vertex_count_ - 1) % vertex_count_; }
  int edge_out(int v) const { return v; }

 private:
  int vertex_count_;
};

// Per-face flip relative to the stored vertex order.
struct Orientation {
  std::vector<bool> flip;
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

// One step of a vertex link: the face, the corner of that face sitting at
// the vertex, and the halfedge of that face crossed to reach the next step.
struct LinkEntry {
  int face;
  int corner;
  int exit;
  int edge;
};

struct VertexLink {
  int vertex;
  std::vector<LinkEntry> entries;
  std::size_t size() const noexcept { return entries.size(); }
};

std::int64_t euler_characteristic(const SurfaceComplex& c);
std::int64_t euler_characteristic(const CircleComplex& c);

// Global orientation, or nullopt when the complex is non-orientable. Each
// component is seeded from its lowest face with the stored order.
std::optional<Orientation> orient(const SurfaceComplex& c);

// Link of v. With an orientation the fan runs counter-clockwise with respect
// to it; without one it starts at the lowest incident face and leaves
// through the lower-id edge. Both start at the lowest incident face.
VertexLink vertex_link(const SurfaceComplex& c, int v, const std::optional<Orientation>& orientation);
VertexLink vertex_link(const SurfaceComplex& c, int v);
std::vector<VertexLink> all_links(const SurfaceComplex& c, const std::optional<Orientation>& orientation);

// Same faces with every stored order reversed.
SurfaceComplex reversed(const SurfaceComplex& c);

}  // namespace nph
