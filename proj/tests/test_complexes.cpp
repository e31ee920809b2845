#include <doctest.h>

#include <algorithm>
#include <map>

#include "nph/error.hpp"
#include "support.hpp"

using namespace nph;

namespace {

ErrorCode validate_code(int nv, std::vector<Face> faces) {
  try {
    SurfaceComplex::validate(nv, std::move(faces));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

std::vector<Face> tetra(int o) { return {{o, o + 1, o + 2}, {o, o + 3, o + 1}, {o + 1, o + 3, o + 2}, {o, o + 2, o + 3}}; }

// Edges counted from the raw face list, independently of the halfedge tables.
int raw_edge_count(const SurfaceComplex& c) {
  std::map<std::pair<int, int>, int> edges;
  for (const Face& f : c.faces())
    for (int j = 0; j < 3; ++j) edges[std::minmax(f[j], f[(j + 1) % 3])]++;
  return static_cast<int>(edges.size());
}

}  // namespace

TEST_CASE("validation diagnoses") {
  CHECK_NOTHROW(SurfaceComplex::validate(4, tetra(0)));
  auto two = tetra(0);
  for (const Face& f : tetra(4)) two.push_back(f);
  CHECK(validate_code(8, two) == ErrorCode::Disconnected);
  auto fin = tetra(0);
  fin.push_back({0, 1, 4});
  CHECK(validate_code(5, fin) == ErrorCode::NonManifoldEdge);
  auto dup = tetra(0);
  dup.push_back({1, 2, 0});
  CHECK(validate_code(4, dup) != ErrorCode::IoError);
  // Two tetrahedra sharing one vertex: closed, but the vertex link is two cycles.
  std::vector<Face> pinched = tetra(0);
  for (Face f : tetra(3)) pinched.push_back(f);
  CHECK(validate_code(7, pinched) == ErrorCode::PinchedVertex);
  CHECK(validate_code(3, {{0, 1, 1}}) == ErrorCode::InvalidInput);
}

TEST_CASE("euler characteristics of shipped meshes") {
  struct Row {
    const char* name;
    int v, e, f;
    std::int64_t chi;
    bool orientable;
  };
  for (const Row& r : {Row{"octahedron", 6, 12, 8, 2, true}, Row{"icosahedron", 12, 30, 20, 2, true},
                       Row{"torus", 16, 48, 32, 0, true}, Row{"genus2", 29, 93, 62, -2, true},
                       Row{"rp2", 6, 15, 10, 1, false}, Row{"klein", 25, 75, 50, 0, false}}) {
    CAPTURE(r.name);
    auto c = support::mesh(r.name);
    CHECK(c->vertex_count() == r.v);
    CHECK(c->edge_count() == r.e);
    CHECK(raw_edge_count(*c) == r.e);
    CHECK(c->face_count() == r.f);
    CHECK(euler_characteristic(*c) == r.chi);
    CHECK(orient(*c).has_value() == r.orientable);
  }
  CHECK(euler_characteristic(CircleComplex(5)) == 0);
}

TEST_CASE("genus surfaces") {
  for (int g = 1; g <= 4; ++g) CHECK(euler_characteristic(genus_surface(g)) == 2 - 2 * g);
}

TEST_CASE("link sizes and closure") {
  const auto octa = support::mesh("octahedron");
  CHECK(vertex_link(*octa, 0).size() == 4);
  CHECK(vertex_link(*support::mesh("icosahedron"), 3).size() == 5);
  CHECK(vertex_link(*support::mesh("torus"), 5).size() == 6);

  for (const char* name : {"octahedron", "icosahedron", "torus", "genus2", "rp2", "klein"}) {
    CAPTURE(name);
    const auto c = support::mesh(name);
    const auto o = orient(*c);
    std::size_t total = 0;
    for (int v = 0; v < c->vertex_count(); ++v) {
      const VertexLink link = vertex_link(*c, v, o);
      total += link.size();
      for (std::size_t i = 0; i < link.size(); ++i) {
        const LinkEntry& e = link.entries[i];
        const LinkEntry& next = link.entries[(i + 1) % link.size()];
        CHECK(c->face(e.face)[e.corner] == v);
        CHECK(e.exit / 3 == e.face);
        CHECK(c->edge_of(e.exit) == e.edge);
        CHECK(c->twin(e.exit) / 3 == next.face);
        // the crossed edge has v as an endpoint
        CHECK((c->source(e.exit) == v || c->target(e.exit) == v));
      }
      std::vector<int> faces;
      for (const LinkEntry& e : link.entries) faces.push_back(e.face);
      std::sort(faces.begin(), faces.end());
      CHECK(std::adjacent_find(faces.begin(), faces.end()) == faces.end());
    }
    CHECK(total == 3 * static_cast<std::size_t>(c->face_count()));
  }
}

TEST_CASE("octahedron links run in the documented order") {
  const auto c = support::mesh("octahedron");
  const auto o = orient(*c);
  auto faces_of = [&](int v) {
    std::vector<int> out;
    for (const LinkEntry& e : vertex_link(*c, v, o).entries) out.push_back(e.face);
    return out;
  };
  CHECK(faces_of(0) == std::vector<int>{0, 1, 2, 3});
  CHECK(faces_of(5) == std::vector<int>{4, 7, 6, 5});
  CHECK(faces_of(1) == std::vector<int>{0, 3, 7, 4});
  CHECK(faces_of(2) == std::vector<int>{0, 4, 5, 1});
}

TEST_CASE("orientation is coherent and flips with reversal") {
  for (const char* name : {"octahedron", "icosahedron", "torus", "genus2"}) {
    CAPTURE(name);
    const auto c = support::mesh(name);
    const auto o = orient(*c);
    REQUIRE(o);
    CHECK_FALSE(o->flip[0]);
    for (int h = 0; h < c->halfedge_count(); ++h) {
      const int t = c->twin(h);
      // After applying flips, the shared edge must be traversed in opposite directions.
      auto dir = [&](int x) {
        const bool f = o->flip[x / 3];
        return f ? std::pair{c->target(x), c->source(x)} : std::pair{c->source(x), c->target(x)};
      };
      CHECK(dir(h).first == dir(t).second);
      CHECK(dir(h).second == dir(t).first);
    }
    const SurfaceComplex r = reversed(*c);
    const auto ro = orient(r);
    REQUIRE(ro);
    // Same flips on reversed stored orders: the opposite orientation.
    CHECK(ro->flip == o->flip);
    CHECK(euler_characteristic(r) == euler_characteristic(*c));
  }
}

TEST_CASE("euler characteristic is invariant under relabelling") {
  Rng rng(3);
  for (const char* name : {"torus", "genus2", "rp2"}) {
    const auto c = support::mesh(name);
    std::vector<int> perm(c->vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = c->vertex_count() - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<Face> faces;
    for (const Face& f : c->faces()) faces.push_back({perm[f[0]], perm[f[1]], perm[f[2]]});
    CHECK(euler_characteristic(SurfaceComplex::validate(c->vertex_count(), faces)) == euler_characteristic(*c));
  }
}

TEST_CASE("circle complex adjacency") {
  CircleComplex c(5);
  CHECK(c.edge_in(0) == 4);
  CHECK(c.edge_out(0) == 0);
  CHECK(c.edge_in(3) == 2);
  CHECK_THROWS_AS(CircleComplex(0), Error);
}
