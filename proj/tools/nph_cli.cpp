#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nph/error.hpp"
#include "nph/ops.hpp"
#include "nph/svg.hpp"

namespace fs = std::filesystem;
using namespace nph;

namespace {

struct Options {
  std::string mesh, bundle, field, mode = "auto", out, svg;
  std::uint64_t seed = 0;
  std::string generator, base;
  std::optional<int> n, d, z, vertex;
};

unsigned thread_cap() {
  const char* env = std::getenv("NPH_THREADS");
  if (!env || !*env) return 0;
  try {
    return static_cast<unsigned>(std::stoul(env));
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidInput, std::string("NPH_THREADS is not a number: ") + env);
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text;
  else
    write_text(path, text);
}

Document load(const Options& o) {
  if (o.mesh.empty() || o.field.empty()) throw Error(ErrorCode::InvalidInput, "--mesh and --field are required");
  const Json mesh = read_json(o.mesh);
  const Json bundle = o.bundle.empty() ? Json::object() : read_json(o.bundle);
  return load_document(mesh, bundle, read_json(o.field));
}

int cmd_verify(const Options& o, bool strict) {
  const Document l = load(o);
  const VerificationVerdict v = verify_document(l, o.mode, thread_cap());
  emit(o.out, dump(report_json(v)));
  if (!o.svg.empty()) {
    if (l.mesh.dim != 2) throw Error(ErrorCode::InvalidInput, "pictures are drawn for surfaces only");
    write_text(o.svg, emit_svg(*l.mesh.surface, l.field.get(), &v));
  }
  return strict && !v.pass ? 2 : 0;
}

int cmd_resolve(const Options& o) {
  const ResolveOutput r = resolve_document(load(o));
  if (o.out.empty())
    std::cout << dump(r.files.at("report.json"));
  else
    for (const auto& [name, j] : r.files) write_text(fs::path(o.out) / name, dump(j));
  return r.pass ? 0 : 2;
}

int cmd_degree(const Options& o) {
  if (o.field.empty()) throw Error(ErrorCode::InvalidInput, "--field (a structured map file) is required");
  emit(o.out, dump(degree_json(parse_circle_map(read_json(o.field)))));
  return 0;
}

int cmd_gen(const Options& o) {
  const fs::path dir(o.out.empty() ? "." : o.out);
  for (const auto& [name, j] : generate(o.generator, {o.base, o.n, o.d, o.z, o.vertex, o.seed}))
    write_text(dir / name, dump(j));
  return 0;
}

void fail(const std::string& code, const std::string& detail) {
  Json j;
  j["error"] = code;
  j["detail"] = detail;
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-valued section indices and index-sum checks"};
  app.require_subcommand(1);
  Options o;

  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("--mesh", o.mesh, "mesh JSON");
    sub->add_option("--bundle", o.bundle, "bundle JSON (default: trivial)");
    sub->add_option("--field", o.field, "field JSON");
    sub->add_option("--mode", o.mode, "integer | mod2 | auto")->check(CLI::IsMember({"integer", "mod2", "auto"}));
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--out", o.out, "output path");
  };
  auto* verify = app.add_subcommand("verify", "check the index sum against the bundle invariant");
  add_inputs(verify);
  verify->add_option("--svg", o.svg, "write a picture");
  auto* index = app.add_subcommand("index", "per-vertex index table");
  add_inputs(index);
  index->add_option("--svg", o.svg, "write a picture");
  auto* res = app.add_subcommand("resolve", "build and check the branched cover");
  add_inputs(res);
  auto* degree = app.add_subcommand("degree", "degree of a structured circle map");
  degree->add_option("--field,--map", o.field, "structured map JSON");
  degree->add_option("--out", o.out, "output path");
  auto* gen = app.add_subcommand("gen", "write example inputs");
  gen->add_option("name", o.generator, "generator name")->required();
  gen->add_option("--base", o.base, "base surface");
  gen->add_option("--n", o.n, "number of values");
  gen->add_option("--d", o.d, "lens degree");
  gen->add_option("--z", o.z, "vortex index target");
  gen->add_option("--vertex", o.vertex, "vortex vertex");
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--out", o.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    fail("UsageError", e.what());
    return 1;
  }

  try {
    if (*verify) return cmd_verify(o, true);
    if (*index) return cmd_verify(o, false);
    if (*res) return cmd_resolve(o);
    if (*degree) return cmd_degree(o);
    return cmd_gen(o);
  } catch (const Error& e) {
    fail(std::string(to_string(e.code())), e.detail());
  } catch (const std::exception& e) {
    fail("InternalError", e.what());
  }
  return 1;
}
