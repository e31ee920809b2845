#include "nph/ops.hpp"

#include "nph/error.hpp"
#include "nph/generators.hpp"

namespace nph {

Document load_document(const Json& mesh, const Json& bundle, const Json& field) {
  Document d;
  d.mesh = parse_mesh(mesh);
  if (d.mesh.dim == 2) {
    auto b = std::make_shared<const BundleCocycle>(parse_bundle(bundle, d.mesh.surface));
    d.field = std::make_shared<const NField>(parse_field(field, b));
  } else {
    auto b = std::make_shared<const LineCocycle>(parse_line_bundle(bundle, *d.mesh.circle));
    d.field = std::make_shared<const NField>(parse_line_field(field, b));
  }
  return d;
}

IndexMode select_mode(const std::string& name, const NField& f) {
  return name == "auto" ? default_mode(f) : parse_mode(name);
}

VerificationVerdict verify_document(const Document& d, const std::string& mode, unsigned threads) {
  return verify_theorem(*d.field, select_mode(mode, *d.field), threads);
}

ResolveOutput resolve_document(const Document& d) {
  const BranchedResolution r = resolve(*d.field);
  const ResolutionReport rep = verify_resolution(r);
  ResolveOutput out;
  out.files["mesh.json"] = resolution_mesh_json(r);
  if (r.surface) {
    out.files["bundle.json"] = bundle_json(*r.bundle);
    out.files["field.json"] = field_json(*r.section);
  }
  out.files["report.json"] = resolution_report_json(rep);
  out.pass = rep.pass;
  return out;
}

namespace {

int positive(std::optional<int> v, int fallback, const char* what) {
  const int x = v.value_or(fallback);
  if (x < 1) throw Error(ErrorCode::InvalidParams, std::string(what) + " must be positive");
  return x;
}

std::map<std::string, Json> triple(Json mesh, Json bundle, const NField& field) {
  return {{"mesh.json", std::move(mesh)}, {"bundle.json", std::move(bundle)}, {"field.json", field_json(field)}};
}

}  // namespace

std::map<std::string, Json> generate(const std::string& g, const GenParams& p) {
  if (g == "lens-circle") return {{"map.json", circle_map_json(lens_map(positive(p.n, 2, "n"), p.d.value_or(1)))}};
  if (g == "random-nfield" && is_circle_base(p.base)) {
    const int n = positive(p.n, 2, "n");
    CircleComplex c(8);
    std::vector<int> signs(8, 1);
    if (p.base == "mobius") signs[0] = -1;
    auto b = std::make_shared<const LineCocycle>(c, signs);
    return triple(mesh_json(c), bundle_json(*b), random_line_field(b, n, p.seed));
  }

  const bool known = g == "sphere-line-field" || g == "quotient-n" || g == "scaled-sections" || g == "random-nfield" ||
                     g == "tangent-like" || g == "vortex-sections";
  if (!known) throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + g + "'");

  std::string base = p.base;
  if (base.empty()) base = (g == "scaled-sections" || g == "vortex-sections") ? "torus" : "octahedron";
  if (g == "sphere-line-field") base = "octahedron";
  auto c = std::make_shared<const SurfaceComplex>(base_by_name(base));
  auto b = std::make_shared<const BundleCocycle>(tangent_like(c));
  std::optional<NField> f;
  if (g == "sphere-line-field")
    f = quotient_field(b, 2);
  else if (g == "quotient-n")
    f = quotient_field(b, positive(p.n, 2, "n"));
  else if (g == "scaled-sections")
    f = scaled_sections(b, positive(p.n, 3, "n"));
  else if (g == "random-nfield")
    f = random_nfield(b, positive(p.n, 2, "n"), p.seed);
  else if (g == "vortex-sections") {
    const int v = p.vertex.value_or(0);
    if (v < 0 || v >= c->vertex_count()) throw Error(ErrorCode::InvalidParams, "vertex out of range");
    f = vortex_sections(b, v, p.z.value_or(1));
  } else
    f = constant_field(b);
  return triple(mesh_json(*c), bundle_json(*b), *f);
}

}  // namespace nph
