#pragma once

// Whole-document operations on the JSON formats, shared by the command line
// tool and the Python module.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "nph/io.hpp"

namespace nph {

struct Document {
  Mesh mesh;
  std::shared_ptr<const NField> field;
};

// An empty bundle object means the trivial bundle.
Document load_document(const Json& mesh, const Json& bundle, const Json& field);

// "integer", "mod2" or "auto" (the default mode of the field).
IndexMode select_mode(const std::string& name, const NField& f);

VerificationVerdict verify_document(const Document& d, const std::string& mode, unsigned threads);

struct ResolveOutput {
  std::map<std::string, Json> files;  // mesh.json, report.json, and for surfaces bundle.json, field.json
  bool pass = false;
};
ResolveOutput resolve_document(const Document& d);

struct GenParams {
  std::string base;
  std::optional<int> n, d, z, vertex;
  std::uint64_t seed = 0;
};

// File name -> contents. Throws UnknownGenerator or InvalidParams.
std::map<std::string, Json> generate(const std::string& name, const GenParams& p);

}  // namespace nph
