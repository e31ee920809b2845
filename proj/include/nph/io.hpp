#pragma once

// JSON file formats. Rationals are always quoted strings; output objects keep
// insertion order so that files are byte-stable.

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "nph/cover.hpp"
#include "nph/degree.hpp"
#include "nph/index.hpp"
#include "nph/nfield.hpp"

namespace nph {

using Json = nlohmann::ordered_json;

// Throws IoError / ParseError.
Json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
std::string dump(const Json& j);

struct Mesh {
  int dim = 2;
  std::shared_ptr<const SurfaceComplex> surface;
  std::optional<CircleComplex> circle;
};

Mesh parse_mesh(const Json& j);
Json mesh_json(const SurfaceComplex& c);
Json mesh_json(const CircleComplex& c);

BundleCocycle parse_bundle(const Json& j, std::shared_ptr<const SurfaceComplex> base);
LineCocycle parse_line_bundle(const Json& j, const CircleComplex& base);
Json bundle_json(const BundleCocycle& b);
Json bundle_json(const LineCocycle& b);

NField parse_field(const Json& j, std::shared_ptr<const BundleCocycle> bundle);
NField parse_line_field(const Json& j, std::shared_ptr<const LineCocycle> bundle);
Json field_json(const NField& f);

std::string mode_name(IndexMode mode);
IndexMode parse_mode(const std::string& name);
std::string policy_name(MatchingPolicy p);
MatchingPolicy parse_policy(const std::string& name);

Json report_json(const VerificationVerdict& v);
Json resolution_mesh_json(const BranchedResolution& r);
Json resolution_report_json(const ResolutionReport& r);

// Accepts {"components": [...]} or {"lens": {"n": n, "d": d}}.
StructuredCircleMap parse_circle_map(const Json& j);
Json circle_map_json(const StructuredCircleMap& m);
Json degree_json(const StructuredCircleMap& m);

}  // namespace nph
