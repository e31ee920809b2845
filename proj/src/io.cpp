#include "nph/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "nph/error.hpp"

namespace nph {

namespace {

template <class F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

Rational rational_at(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(ErrorCode::ParseError, "expected a rational string, got " + j.dump());
}

int int_at(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing key \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

Permutation perm_at(const Json& j) {
  if (!j.contains("perm") || !j.at("perm").is_array()) throw Error(ErrorCode::ParseError, "matching without \"perm\"");
  return j.at("perm").get<Permutation>();
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Mesh parse_mesh(const Json& j) {
  return guarded("mesh", [&] {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "mesh must be an object");
    Mesh m;
    m.dim = j.contains("dim") ? int_at(j, "dim") : (j.contains("faces") ? 2 : 1);
    const int nv = int_at(j, "vertices");
    if (m.dim == 1) {
      m.circle = CircleComplex(nv);
      return m;
    }
    if (m.dim != 2) throw Error(ErrorCode::InvalidInput, "dim must be 1 or 2");
    if (!j.contains("faces") || !j.at("faces").is_array()) throw Error(ErrorCode::ParseError, "mesh without faces");
    std::vector<Face> faces;
    for (const Json& f : j.at("faces")) {
      if (!f.is_array() || f.size() != 3) throw Error(ErrorCode::ParseError, "faces must be vertex triples");
      faces.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>()});
    }
    SurfaceComplex c = [&] {
      if (!j.contains("twins")) return SurfaceComplex::validate(nv, std::move(faces));
      SurfaceComplex g = SurfaceComplex::from_gluing(nv, std::move(faces), j.at("twins").get<std::vector<int>>());
      if (g.component_count() != 1) throw Error(ErrorCode::Disconnected, "glued mesh is not connected");
      return g;
    }();
    if (j.contains("coords")) {
      std::vector<Point3> coords;
      for (const Json& p : j.at("coords")) {
        if (!p.is_array() || p.size() < 2 || p.size() > 3) throw Error(ErrorCode::ParseError, "coords must be 2D or 3D");
        coords.push_back({p[0].get<double>(), p[1].get<double>(), p.size() == 3 ? p[2].get<double>() : 0.0});
      }
      c.set_coords(std::move(coords));
    }
    m.surface = std::make_shared<const SurfaceComplex>(std::move(c));
    return m;
  });
}

Json mesh_json(const SurfaceComplex& c) {
  Json j;
  j["dim"] = 2;
  j["vertices"] = c.vertex_count();
  Json faces = Json::array();
  for (const Face& f : c.faces()) faces.push_back({f[0], f[1], f[2]});
  j["faces"] = std::move(faces);
  if (!c.simplicial()) j["twins"] = c.twins();
  if (c.coords()) {
    Json coords = Json::array();
    for (const Point3& p : *c.coords()) coords.push_back({p[0], p[1], p[2]});
    j["coords"] = std::move(coords);
  }
  return j;
}

Json mesh_json(const CircleComplex& c) {
  Json j;
  j["dim"] = 1;
  j["vertices"] = c.vertex_count();
  return j;
}

BundleCocycle parse_bundle(const Json& j, std::shared_ptr<const SurfaceComplex> base) {
  return guarded("bundle", [&] {
    const SurfaceComplex& c = *base;
    std::multimap<std::pair<int, int>, int> by_faces;
    for (int e = 0; e < c.edge_count(); ++e) {
      const int a = c.edge_halfedge(e) / 3, b = c.twin(c.edge_halfedge(e)) / 3;
      by_faces.emplace(std::minmax(a, b), e);
    }
    std::vector<EdgeTransitions> edges(c.edge_count());
    std::vector<std::array<bool, 2>> seen(c.edge_count(), {false, false});
    const Json records = j.contains("transitions") ? j.at("transitions") : Json::array();
    if (!records.is_array()) throw Error(ErrorCode::ParseError, "\"transitions\" must be a list");
    for (const Json& r : records) {
      const int from = int_at(r, "from_face"), to = int_at(r, "to_face");
      int e = -1;
      if (r.contains("edge")) {
        e = int_at(r, "edge");
        if (e < 0 || e >= c.edge_count()) throw Error(ErrorCode::InvalidInput, "edge id out of range");
      } else {
        auto [lo, hi] = by_faces.equal_range(std::minmax(from, to));
        if (lo == hi)
          throw Error(ErrorCode::InvalidInput,
                      "faces " + std::to_string(from) + " and " + std::to_string(to) + " are not adjacent");
        if (std::next(lo) != hi) throw Error(ErrorCode::InvalidInput, "faces share several edges; add \"edge\"");
        e = lo->second;
      }
      const int h = c.edge_halfedge(e);
      Transition t{r.value("reflect", false), Turn(r.contains("turn") ? rational_at(r.at("turn")) : Rational(0))};
      if (h / 3 == from && c.twin(h) / 3 == to) {
      } else if (c.twin(h) / 3 == from && h / 3 == to) {
        t = t.inverse();
      } else {
        throw Error(ErrorCode::InvalidInput, "record faces do not match edge " + std::to_string(e));
      }
      std::vector<int> slots = {0, 1};
      if (r.contains("vertex")) {
        const int v = int_at(r, "vertex");
        if (v == c.source(h))
          slots = {0};
        else if (v == c.target(h))
          slots = {1};
        else
          throw Error(ErrorCode::InvalidInput, "vertex " + std::to_string(v) + " is not an endpoint of the shared edge");
      }
      for (int s : slots) {
        if (seen[e][s]) throw Error(ErrorCode::InvalidInput, "duplicate transition record for edge " + std::to_string(e));
        seen[e][s] = true;
        edges[e][s] = t;
      }
    }
    return BundleCocycle(std::move(base), std::move(edges));
  });
}

LineCocycle parse_line_bundle(const Json& j, const CircleComplex& base) {
  return guarded("bundle", [&] {
    std::vector<int> signs(base.vertex_count(), 1);
    if (j.contains("signs"))
      for (const Json& r : j.at("signs")) {
        const int v = int_at(r, "vertex");
        if (v < 0 || v >= base.vertex_count()) throw Error(ErrorCode::InvalidInput, "sign vertex out of range");
        signs[v] = int_at(r, "sign");
      }
    return LineCocycle(base, std::move(signs));
  });
}

Json bundle_json(const BundleCocycle& b) {
  const SurfaceComplex& c = b.base();
  Json records = Json::array();
  for (int e = 0; e < c.edge_count(); ++e) {
    const int h = c.edge_halfedge(e);
    const auto& t = b.edges()[e];
    auto record = [&](const Transition& x, std::optional<int> vertex) {
      Json r;
      r["from_face"] = h / 3;
      r["to_face"] = c.twin(h) / 3;
      if (!c.simplicial()) r["edge"] = e;
      if (vertex) r["vertex"] = *vertex;
      r["turn"] = x.turn.str();
      r["reflect"] = x.reflect;
      records.push_back(std::move(r));
    };
    if (t[0] == t[1]) {
      if (t[0] != Transition{}) record(t[0], std::nullopt);
    } else {
      record(t[0], c.source(h));
      record(t[1], c.target(h));
    }
  }
  Json j;
  j["transitions"] = std::move(records);
  return j;
}

Json bundle_json(const LineCocycle& b) {
  Json signs = Json::array();
  for (int v = 0; v < b.base().vertex_count(); ++v)
    if (b.sign(v) != 1) signs.push_back({{"vertex", v}, {"sign", b.sign(v)}});
  Json j;
  j["signs"] = std::move(signs);
  return j;
}

std::string mode_name(IndexMode mode) { return mode == IndexMode::Integer ? "integer" : "mod2"; }

IndexMode parse_mode(const std::string& name) {
  if (name == "integer") return IndexMode::Integer;
  if (name == "mod2") return IndexMode::Mod2;
  throw Error(ErrorCode::InvalidInput, "unknown mode '" + name + "'");
}

std::string policy_name(MatchingPolicy p) {
  switch (p) {
    case MatchingPolicy::Explicit: return "explicit";
    case MatchingPolicy::NearestAngle: return "nearest";
    case MatchingPolicy::ByMagnitude: return "magnitude";
  }
  return "explicit";
}

MatchingPolicy parse_policy(const std::string& name) {
  if (name == "explicit") return MatchingPolicy::Explicit;
  if (name == "nearest") return MatchingPolicy::NearestAngle;
  if (name == "magnitude") return MatchingPolicy::ByMagnitude;
  throw Error(ErrorCode::ParseError, "unknown policy '" + name + "'");
}

namespace {

MatchingPolicy policy_of(const Json& j) {
  if (j.contains("policy")) return parse_policy(j.at("policy").get<std::string>());
  return j.contains("matchings") ? MatchingPolicy::Explicit : MatchingPolicy::NearestAngle;
}

const Json& values_of(const Json& j, int id) {
  if (!j.contains("values") || !j.at("values").is_object()) throw Error(ErrorCode::ParseError, "field without values");
  const std::string key = std::to_string(id);
  if (!j.at("values").contains(key)) throw Error(ErrorCode::SizeMismatch, "no values for id " + key);
  return j.at("values").at(key);
}

void check_header(const Json& j, int rank) {
  if (j.contains("rank") && int_at(j, "rank") != rank)
    throw Error(ErrorCode::InvalidInput, "field rank does not match the mesh dimension");
}

void check_n(const Json& j, int n) {
  if (j.contains("n") && int_at(j, "n") != n)
    throw Error(ErrorCode::SizeMismatch, "declared n disagrees with the value lists");
}

}  // namespace

NField parse_field(const Json& j, std::shared_ptr<const BundleCocycle> bundle) {
  return guarded("field", [&] {
    check_header(j, 2);
    const int nf = bundle->base().face_count();
    std::vector<ValueSet> values(nf);
    for (int f = 0; f < nf; ++f)
      for (const Json& v : values_of(j, f)) {
        if (!v.contains("angle")) throw Error(ErrorCode::ParseError, "value without \"angle\"");
        values[f].push_back({TurnClass(Turn(rational_at(v.at("angle")))),
                             v.contains("mag") ? rational_at(v.at("mag")) : Rational(1)});
      }
    std::vector<ExplicitMatching> matchings;
    if (j.contains("matchings"))
      for (const Json& m : j.at("matchings")) matchings.push_back({int_at(m, "from_face"), int_at(m, "to_face"), perm_at(m)});
    NField f = NField::build(std::move(bundle), std::move(values), policy_of(j), matchings);
    check_n(j, f.n());
    return f;
  });
}

NField parse_line_field(const Json& j, std::shared_ptr<const LineCocycle> bundle) {
  return guarded("field", [&] {
    check_header(j, 1);
    const int ne = bundle->base().edge_count();
    std::vector<std::vector<Rational>> values(ne);
    for (int e = 0; e < ne; ++e)
      for (const Json& v : values_of(j, e)) values[e].push_back(rational_at(v));
    std::vector<ExplicitMatching> matchings;
    if (j.contains("matchings"))
      for (const Json& m : j.at("matchings")) matchings.push_back({int_at(m, "vertex"), -1, perm_at(m)});
    NField f = NField::build_line(std::move(bundle), std::move(values), policy_of(j), matchings);
    check_n(j, f.n());
    return f;
  });
}

Json field_json(const NField& f) {
  Json j;
  j["n"] = f.n();
  j["rank"] = f.rank();
  Json values = Json::object();
  Json matchings = Json::array();
  if (f.rank() == 2) {
    const SurfaceComplex& c = f.bundle().base();
    for (int face = 0; face < c.face_count(); ++face) {
      Json list = Json::array();
      for (const FieldValue& v : f.values()[face])
        list.push_back({{"angle", v.angle.str()}, {"mag", format_rational(v.magnitude)}});
      values[std::to_string(face)] = std::move(list);
    }
    for (int e = 0; e < c.edge_count(); ++e) {
      const int h = c.edge_halfedge(e);
      matchings.push_back({{"from_face", h / 3}, {"to_face", c.twin(h) / 3}, {"perm", f.forward(e)}});
      if (inverse(f.forward(e)) != f.backward(e))
        matchings.push_back({{"from_face", c.twin(h) / 3}, {"to_face", h / 3}, {"perm", f.backward(e)}});
    }
  } else {
    const CircleComplex& c = f.line().base();
    for (int e = 0; e < c.edge_count(); ++e) {
      Json list = Json::array();
      for (const Rational& x : f.line_values()[e]) list.push_back(format_rational(x));
      values[std::to_string(e)] = std::move(list);
    }
    for (int v = 0; v < c.vertex_count(); ++v) matchings.push_back({{"vertex", v}, {"perm", f.forward(v)}});
  }
  j["values"] = std::move(values);
  j["matchings"] = std::move(matchings);
  j["policy"] = policy_name(f.policy());
  return j;
}

Json report_json(const VerificationVerdict& v) {
  Json j;
  j["mode"] = mode_name(v.mode);
  j["n"] = v.n;
  Json rows = Json::array();
  for (const LocalIndexReport& r : v.table)
    rows.push_back({{"v", r.vertex}, {"cycles", r.cycles}, {"index", r.index}, {"regular", r.regular}});
  j["vertices"] = std::move(rows);
  j["sum"] = v.lhs;
  j["expected"] = v.rhs;
  j["pass"] = v.pass;
  if (!v.inconsistent_matchings.empty()) j["inconsistent_matchings"] = v.inconsistent_matchings;
  return j;
}

Json resolution_mesh_json(const BranchedResolution& r) {
  Json j;
  if (r.surface) {
    j = mesh_json(*r.surface);
    Json projection = Json::array();
    for (const ProjectionEntry& p : r.projection)
      projection.push_back({{"tilde_face", p.tilde_face}, {"base_face", p.base_face}, {"sheet", p.sheet}});
    j["projection"] = std::move(projection);
    Json cones = Json::array();
    for (const ConeVertex& c : r.cone_vertices)
      cones.push_back({{"tilde_vertex", c.tilde_vertex}, {"base_vertex", c.base_vertex}, {"cycle_length", c.cycle_length}});
    j["cone_vertices"] = std::move(cones);
    return j;
  }
  Json circles = Json::array();
  for (const ResolvedCircle& c : r.circles) {
    Json cj = mesh_json(c.complex);
    Json projection = Json::array();
    for (const ProjectionEntry& p : c.projection)
      projection.push_back({{"tilde_edge", p.tilde_face}, {"base_edge", p.base_face}, {"sheet", p.sheet}});
    cj["projection"] = std::move(projection);
    cj["base_vertex"] = c.base_vertex;
    circles.push_back(std::move(cj));
  }
  j["dim"] = 1;
  j["circles"] = std::move(circles);
  return j;
}

Json resolution_report_json(const ResolutionReport& r) {
  Json j;
  j["covering"] = r.covering;
  if (!r.covering_witnesses.empty()) j["covering_witnesses"] = r.covering_witnesses;
  j["orientation_lifts"] = r.orientation_lifts;
  j["chi_tilde"] = r.chi_tilde;
  j["chi_expected"] = r.chi_expected;
  j["chi_ok"] = r.chi_ok;
  if (r.euler_tilde) j["euler_tilde"] = *r.euler_tilde;
  if (r.euler_expected) j["euler_expected"] = *r.euler_expected;
  if (r.w1_tilde) j["w1_tilde"] = *r.w1_tilde;
  if (r.w1_expected) j["w1_expected"] = *r.w1_expected;
  j["euler_ok"] = r.euler_ok;
  j["index_mode"] = r.mod2_indices ? "mod2" : "integer";
  Json rows = Json::array();
  for (const IndexMatchRow& row : r.index_rows)
    rows.push_back({{"v", row.base_vertex}, {"index", row.base_index}, {"lifted_sum", row.lifted_sum}, {"ok", row.ok}});
  j["index_rows"] = std::move(rows);
  j["index_ok"] = r.index_ok;
  j["pass"] = r.pass;
  return j;
}

StructuredCircleMap parse_circle_map(const Json& j) {
  return guarded("map", [&] {
    if (j.contains("lens")) {
      const Json& l = j.at("lens");
      return lens_map(int_at(l, "n"), int_at(l, "d"), l.contains("k") ? int_at(l, "k") : 0);
    }
    if (!j.contains("components")) throw Error(ErrorCode::ParseError, "map needs \"components\" or \"lens\"");
    std::vector<CircleComponent> comps;
    for (const Json& c : j.at("components")) {
      std::vector<TurnClass> samples;
      if (!c.contains("loop")) throw Error(ErrorCode::ParseError, "component without \"loop\"");
      for (const Json& s : c.at("loop")) samples.emplace_back(Turn(rational_at(s)));
      if (samples.empty()) throw Error(ErrorCode::InvalidInput, "empty loop");
      comps.push_back({int_at(c, "r"), SampledLoop(std::move(samples))});
    }
    return StructuredCircleMap(std::move(comps));
  });
}

Json circle_map_json(const StructuredCircleMap& m) {
  Json comps = Json::array();
  for (const CircleComponent& c : m.components()) {
    Json loop = Json::array();
    for (const TurnClass& t : c.loop.samples()) loop.push_back(t.str());
    comps.push_back({{"r", c.r}, {"loop", std::move(loop)}});
  }
  Json j;
  j["components"] = std::move(comps);
  return j;
}

Json degree_json(const StructuredCircleMap& m) {
  const std::int64_t d = degree_circle(m);
  Json j;
  j["degree"] = d;
  j["components"] = m.components().size();
  j["lefschetz"] = lefschetz(d, m.n(), 2);
  return j;
}

}  // namespace nph
