#include <doctest.h>

#include "nph/error.hpp"
#include "nph/io.hpp"
#include "nph/svg.hpp"
#include "support.hpp"

using namespace nph;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

Json parse(const char* text) { return Json::parse(text); }

void check_round_trip(const NField& f) {
  const Json j = field_json(f);
  const NField g = parse_field(Json::parse(j.dump()), f.bundle_ptr());
  CHECK(g.n() == f.n());
  CHECK(g.values() == f.values());
  for (int e = 0; e < f.bundle().base().edge_count(); ++e) {
    CHECK(g.forward(e) == f.forward(e));
    CHECK(g.backward(e) == f.backward(e));
  }
  CHECK(field_json(g).dump() == j.dump());
}

}  // namespace

TEST_CASE("mesh parsing") {
  const Mesh m = parse_mesh(parse(R"({"dim":2,"vertices":4,"faces":[[0,1,2],[0,3,1],[1,3,2],[0,2,3]],"extra":1})"));
  CHECK(m.surface->face_count() == 4);
  CHECK_FALSE(m.surface->coords());
  const Mesh c = parse_mesh(parse(R"({"dim":1,"vertices":5})"));
  CHECK(c.circle->vertex_count() == 5);
  CHECK(code_of([] { parse_mesh(parse(R"({"dim":2,"vertices":4,"faces":[[0,1]]})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_mesh(parse(R"({"dim":2,"faces":[]})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          parse_mesh(parse(R"({"dim":2,"vertices":4,"faces":[[0,1,2],[0,3,1],[1,3,2],[0,2,3],[2,1,0]]})"));
        }) != ErrorCode::IoError);
}

TEST_CASE("mesh round trip keeps coordinates and gluing") {
  for (const char* name : {"octahedron", "genus2", "klein"}) {
    const auto c = support::mesh(name);
    const Json j = mesh_json(*c);
    const Mesh back = parse_mesh(Json::parse(j.dump()));
    CHECK(back.surface->faces() == c->faces());
    CHECK(back.surface->coords().has_value());
    CHECK(mesh_json(*back.surface).dump() == j.dump());
  }
  const NField f = random_nfield(support::tangent("octahedron"), 2, 1);
  const BranchedResolution r = resolve(f);
  const Json j = resolution_mesh_json(r);
  CHECK(j.contains("twins"));
  CHECK(j["projection"].size() == 16);
  const Mesh back = parse_mesh(Json::parse(j.dump()));
  CHECK(back.surface->twins() == r.surface->twins());
}

TEST_CASE("bundle round trip") {
  for (const char* name : {"octahedron", "genus2", "rp2", "klein"}) {
    const auto b = support::tangent(name);
    const Json j = bundle_json(*b);
    const BundleCocycle back = parse_bundle(Json::parse(j.dump()), b->base_ptr());
    CHECK(back.edges() == b->edges());
  }
  const auto c = support::mesh("octahedron");
  CHECK(code_of([&] { parse_bundle(parse(R"({"transitions":[{"from_face":0,"to_face":6,"turn":"0"}]})"), c); }) ==
        ErrorCode::InvalidInput);
  CHECK(code_of([&] { parse_bundle(parse(R"({"transitions":[{"from_face":0,"to_face":1,"turn":"1/0"}]})"), c); }) ==
        ErrorCode::ParseError);
  // The reverse record is derived: writing 1->0 with turn t equals 0->1 with -t.
  const BundleCocycle fwd = parse_bundle(parse(R"({"transitions":[{"from_face":0,"to_face":1,"turn":"1"}]})"), c);
  const BundleCocycle rev = parse_bundle(parse(R"({"transitions":[{"from_face":1,"to_face":0,"turn":"-1"}]})"), c);
  CHECK(fwd.edges() == rev.edges());
}

TEST_CASE("line bundle round trip") {
  CircleComplex c(6);
  const LineCocycle b(c, {1, -1, 1, 1, -1, 1});
  const LineCocycle back = parse_line_bundle(Json::parse(bundle_json(b).dump()), c);
  CHECK(back.signs() == b.signs());
  CHECK(parse_line_bundle(parse("{}"), c).signs() == std::vector<int>(6, 1));
}

TEST_CASE("field round trips") {
  check_round_trip(quotient_field(support::tangent("octahedron"), 2));
  check_round_trip(random_nfield(support::tangent("genus2"), 3, 5));
  check_round_trip(scaled_sections(support::tangent("torus"), 3));
  check_round_trip(random_nfield(support::tangent("rp2"), 2, 5));

  auto lb = std::make_shared<const LineCocycle>(CircleComplex(5), std::vector<int>{1, 1, -1, 1, 1});
  const NField line = random_line_field(lb, 3, 8);
  const NField back = parse_line_field(Json::parse(field_json(line).dump()), lb);
  CHECK(back.line_values() == line.line_values());
  for (int v = 0; v < 5; ++v) CHECK(back.forward(v) == line.forward(v));
}

TEST_CASE("field parsing errors") {
  const auto b = support::trivial("octahedron");
  CHECK(code_of([&] { parse_field(parse(R"({"n":1,"rank":2,"values":{}})"), b); }) == ErrorCode::SizeMismatch);
  CHECK(code_of([&] { parse_field(parse(R"({"n":1,"rank":1,"values":{}})"), b); }) == ErrorCode::InvalidInput);
  Json j = field_json(constant_field(b));
  j["policy"] = "sideways";
  CHECK(code_of([&] { parse_field(j, b); }) == ErrorCode::ParseError);
  j["policy"] = "explicit";
  j["n"] = 2;
  CHECK(code_of([&] { parse_field(j, b); }) == ErrorCode::SizeMismatch);
}

TEST_CASE("report and degree formats") {
  const NField f = quotient_field(support::tangent("octahedron"), 2);
  const Json r = report_json(verify_theorem(f, IndexMode::Integer));
  CHECK(r["mode"] == "integer");
  CHECK(r["n"] == 2);
  CHECK(r["sum"] == 4);
  CHECK(r["expected"] == 4);
  CHECK(r["pass"] == true);
  CHECK(r["vertices"].size() == 6);
  CHECK(r["vertices"][0]["cycles"] == Json::array({2}));

  const Json d = degree_json(parse_circle_map(parse(R"({"lens":{"n":2,"d":3}})")));
  CHECK(d["degree"] == 3);
  CHECK(d["components"] == 1);
  CHECK(d["lefschetz"] == -1);
  const StructuredCircleMap m = parse_circle_map(parse(R"({"components":[{"r":1,"loop":["0","1/4","1/2","3/4"]}]})"));
  CHECK(degree_circle(m) == 1);
  CHECK(circle_map_json(parse_circle_map(circle_map_json(lens_map(4, 2)))).dump() ==
        circle_map_json(lens_map(4, 2)).dump());
  // A half-turn step is only rejected once the degree is taken.
  CHECK_NOTHROW(parse_circle_map(parse(R"({"components":[{"r":1,"loop":["0","1/2"]}]})")));
  CHECK(code_of([] { degree_circle(parse_circle_map(parse(R"({"components":[{"r":1,"loop":["0","1/2"]}]})"))); }) ==
        ErrorCode::HalfTurnAmbiguity);
}

TEST_CASE("svg output") {
  const NField f = quotient_field(support::tangent("octahedron"), 2);
  const auto v = verify_theorem(f, IndexMode::Integer);
  const std::string svg = emit_svg(f.bundle().base(), &f, &v);
  CHECK(svg == emit_svg(f.bundle().base(), &f, &v));
  std::size_t highlighted = 0;
  for (std::size_t at = svg.find("r=\"7.00\""); at != std::string::npos; at = svg.find("r=\"7.00\"", at + 1)) ++highlighted;
  CHECK(highlighted == 4);

  const NField flat = constant_field(support::trivial("torus"));
  const auto tv = verify_theorem(flat, IndexMode::Integer);
  CHECK(emit_svg(flat.bundle().base(), &flat, &tv).find("r=\"7.00\"") == std::string::npos);

  const auto bare = std::make_shared<const SurfaceComplex>(SurfaceComplex::validate(4, {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}}));
  CHECK(code_of([&] { emit_svg(*bare, nullptr, nullptr); }) == ErrorCode::MissingCoordinates);
}
