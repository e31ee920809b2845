#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "nph/degree.hpp"
#include "nph/error.hpp"
#include "nph/ops.hpp"
#include "nph/svg.hpp"

namespace py = pybind11;
using namespace nph;

namespace {

Json parse(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

Document load(const std::string& mesh, const std::string& field, const std::string& bundle) {
  const Json m = parse(mesh, "mesh");
  const Json b = bundle.empty() ? Json::object() : parse(bundle, "bundle");
  return load_document(m, b, parse(field, "field"));
}

std::string verify(const std::string& mesh, const std::string& field, const std::string& bundle,
                   const std::string& mode, unsigned threads) {
  const Document d = load(mesh, field, bundle);
  VerificationVerdict v;
  {
    py::gil_scoped_release release;
    v = verify_document(d, mode, threads);
  }
  return report_json(v).dump();
}

py::dict resolve_files(const std::string& mesh, const std::string& field, const std::string& bundle) {
  const ResolveOutput r = resolve_document(load(mesh, field, bundle));
  py::dict out;
  for (const auto& [name, j] : r.files) out[py::str(name)] = j.dump();
  return out;
}

std::string degree(const std::string& map) {
  return degree_json(parse_circle_map(parse(map, "map"))).dump();
}

std::string lens(int n, int d, int k) { return circle_map_json(lens_map(n, d, k)).dump(); }

py::dict gen(const std::string& name, const std::string& base, std::optional<int> n, std::optional<int> d,
             std::optional<int> z, std::optional<int> vertex, std::uint64_t seed) {
  py::dict out;
  for (const auto& [file, j] : generate(name, {base, n, d, z, vertex, seed})) out[py::str(file)] = j.dump();
  return out;
}

std::int64_t winding_of(const std::vector<std::string>& samples) {
  std::vector<TurnClass> s;
  for (const std::string& x : samples) s.push_back(TurnClass::parse(x));
  return winding(SampledLoop(std::move(s)));
}

std::string svg(const std::string& mesh, const std::string& field, const std::string& bundle,
                const std::string& mode) {
  const Document d = load(mesh, field, bundle);
  if (d.mesh.dim != 2) throw Error(ErrorCode::InvalidInput, "pictures are drawn for surfaces only");
  const VerificationVerdict v = verify_document(d, mode, 1);
  return emit_svg(*d.mesh.surface, d.field.get(), &v);
}

}  // namespace

PYBIND11_MODULE(_nph, m) {
  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(to_string(e.code())), e.detail());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("verify", &verify, py::arg("mesh"), py::arg("field"), py::arg("bundle") = "", py::arg("mode") = "auto",
        py::arg("threads") = 1u);
  m.def("resolve", &resolve_files, py::arg("mesh"), py::arg("field"), py::arg("bundle") = "");
  m.def("degree", &degree, py::arg("map"));
  m.def("lens_map", &lens, py::arg("n"), py::arg("d"), py::arg("samples_per_sector") = 0);
  m.def("generate", &gen, py::arg("name"), py::arg("base") = "", py::arg("n") = py::none(),
        py::arg("d") = py::none(), py::arg("z") = py::none(), py::arg("vertex") = py::none(), py::arg("seed") = 0);
  m.def("winding", &winding_of, py::arg("samples"));
  m.def("svg", &svg, py::arg("mesh"), py::arg("field"), py::arg("bundle") = "", py::arg("mode") = "auto");
}
