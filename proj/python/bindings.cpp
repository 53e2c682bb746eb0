#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "veronese/cli.hpp"

namespace py = pybind11;
using namespace veronese;

namespace {

std::optional<Field> maybe_field(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return Field::parse(*text);
}

// Returns (exit code, payload JSON text, optional plain text).
py::tuple wrap(const CommandResult& r) {
  return py::make_tuple(r.exit_code(), r.payload.dump(), r.text ? py::object(py::str(*r.text)) : py::none());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of veronese_kit";
  m.attr("SCHEMA") = kSchemaVersion;

  m.def("eqs", [](int d, int n, bool text) { return wrap(cmd_eqs(d, n, text ? EqsFormat::BracketText : EqsFormat::Json)); },
        py::arg("d"), py::arg("n"), py::arg("text") = false);
  m.def("eval", [](const std::string& config, std::optional<std::string> field) {
    return wrap(cmd_eval(config, maybe_field(field)));
  }, py::arg("config"), py::arg("field") = py::none());
  m.def("gale", [](const std::string& config, std::optional<std::string> field) {
    return wrap(cmd_gale(config, maybe_field(field)));
  }, py::arg("config"), py::arg("field") = py::none());
  m.def("sample", [](const std::string& kind, int d, int n, std::uint64_t seed, const std::string& field, long long height,
                     std::vector<int> degrees, std::vector<int> points, const std::string& topology, int on_first) {
    SampleOptions o;
    o.kind = kind;
    o.d = d;
    o.n = n;
    o.seed = seed;
    o.field = Field::parse(field);
    o.height = height;
    o.degrees = std::move(degrees);
    o.points_per_component = std::move(points);
    o.topology = topology == "star" ? ChainTopology::Star : ChainTopology::Chain;
    o.on_first = on_first;
    return wrap(cmd_sample(o));
  }, py::arg("kind"), py::arg("d"), py::arg("n"), py::arg("seed") = 0, py::arg("field") = "Fp:65521",
     py::arg("height") = 100, py::arg("degrees") = std::vector<int>{}, py::arg("points") = std::vector<int>{},
     py::arg("topology") = "chain", py::arg("on_first") = -1);
  m.def("transversal", [](const std::string& edges, int n, int k, std::optional<std::string> min_mode) {
    TransversalOptions o;
    o.n = n;
    o.k = k;
    o.min_only = edges.empty();
    if (min_mode) o.min_mode = *min_mode == "exact" ? SearchMode::Exact : SearchMode::Greedy;
    return wrap(cmd_transversal(edges, o));
  }, py::arg("edges") = "", py::arg("n") = 0, py::arg("k") = 0, py::arg("min") = py::none());
  m.def("dim", [](int d, int n, std::uint64_t seed, const std::string& field) {
    return wrap(cmd_dim(d, n, seed, Field::parse(field)));
  }, py::arg("d"), py::arg("n"), py::arg("seed") = 0, py::arg("field") = "Fp:65521");
  m.def("verify", [](const std::string& suite, std::uint64_t seed) {
    const Suite s = parse_suite(suite);
    CommandResult r;
    {
      py::gil_scoped_release release;
      r = cmd_verify(s, seed);
    }
    return wrap(r);
  }, py::arg("suite") = "All", py::arg("seed") = 0);

  py::register_exception<Error>(m, "VeroneseError", PyExc_ValueError);
}
