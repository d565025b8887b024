#include "tropcheck/analysis.hpp"
#include "tropcheck/clarke.hpp"
#include "tropcheck/json_io.hpp"
#include "tropcheck/parser.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tropcheck;

namespace {

// Parsed map together with its decomposition, computed on first use.
class MapHandle {
 public:
  explicit MapHandle(TropicalMap f) : f_(std::move(f)) {}

  const TropicalMap& map() const { return f_; }

  const Decomposition& pieces() {
    if (!d_) d_ = enumerate_pieces(f_);
    return *d_;
  }

 private:
  TropicalMap f_;
  std::optional<Decomposition> d_;
};

Vector to_point(const std::vector<std::string>& coords) {
  Vector x;
  for (const auto& c : coords) x.push_back(parse_rational(c));
  return x;
}

MapHandle parse(const std::string& text, const std::map<std::string, std::string>& params) {
  ParseOptions options;
  for (const auto& [k, v] : params) options.params[k] = parse_rational(v);
  return MapHandle(parse_map(text, options));
}

}  // namespace

PYBIND11_MODULE(_tropcheck, m) {
  m.doc() = "Exact analysis of tropical rational maps (JSON-returning core bindings).";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NotInvertible>(m, "NotInvertible", PyExc_ValueError);

  py::class_<MapHandle>(m, "Map")
      .def_property_readonly("name", [](const MapHandle& h) { return h.map().name; })
      .def_property_readonly("variables", [](const MapHandle& h) { return h.map().variables; })
      .def_property_readonly("dim", [](const MapHandle& h) { return h.map().dim(); })
      .def_property_readonly("outputs", [](const MapHandle& h) { return h.map().outputs(); })
      .def("source", [](const MapHandle& h) { return print_map(h.map()); })
      .def("eval", [](const MapHandle& h, const std::vector<std::string>& x) {
        return to_json(eval_expr(h.map(), to_point(x))).dump();
      })
      .def("pieces", [](MapHandle& h) { return to_json(h.pieces()).dump(); })
      .def("preimage", [](MapHandle& h, const std::vector<std::string>& y) {
        return to_json(preimage(h.pieces(), to_point(y))).dump();
      })
      .def("clarke", [](MapHandle& h, const std::vector<std::string>& x) {
        return to_json(clarke_at(h.pieces(), to_point(x))).dump();
      })
      .def(
          "analyze",
          [](MapHandle& h, std::uint64_t seed, int retries) {
            return to_json(decide_isomorphism(h.map(), h.pieces(), {seed, retries})).dump();
          },
          py::arg("seed") = 0, py::arg("retries") = 32);

  m.def("parse_map", &parse, py::arg("text"), py::arg("params") = std::map<std::string, std::string>{});
}
