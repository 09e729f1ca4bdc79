#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfgraph/character.hpp"
#include "hopfgraph/hopf.hpp"
#include "hopfgraph/io.hpp"
#include "hopfgraph/matroid.hpp"
#include "hopfgraph/qsym.hpp"
#include "hopfgraph/tutte.hpp"
#include "hopfgraph/verify.hpp"

namespace py = pybind11;

namespace {

hopfgraph::Multigraph graph(const std::string& spec) { return hopfgraph::parse_graph(spec); }

}  // namespace

PYBIND11_MODULE(_hopfgraph, m) {
    m.doc() = "exact computations in the graph Hopf algebra";

    m.def("canonical_text", [](const std::string& spec) {
        return hopfgraph::format_text(hopfgraph::canonical_key(graph(spec)).to_multigraph());
    }, py::arg("graph"), "text form of the canonical representative");

    m.def("graph_json", [](const std::string& spec) { return hopfgraph::graph_to_json(graph(spec)); },
          py::arg("graph"));

    m.def("antipode_json", [](const std::string& spec) {
        return hopfgraph::graphsum_to_json(hopfgraph::antipode_flats(graph(spec)));
    }, py::arg("graph"), "antipode S(G) as a JSON graph sum");

    m.def("tutte_json", [](const std::string& spec) {
        return hopfgraph::bivar_to_json(hopfgraph::tutte(graph(spec)));
    }, py::arg("graph"));

    m.def("chromatic_json", [](const std::string& spec) {
        return hopfgraph::polyk_to_json(hopfgraph::chromatic(graph(spec)));
    }, py::arg("graph"));

    m.def("degree_chromatic_json", [](const std::string& spec, int mm) {
        return hopfgraph::polyk_to_json(hopfgraph::degree_chromatic(graph(spec), mm));
    }, py::arg("graph"), py::arg("m"));

    m.def("char_eval", [](const std::string& char_spec, const std::string& graph_spec) {
        return hopfgraph::parse_char_spec(char_spec)(graph(graph_spec)).str();
    }, py::arg("char"), py::arg("graph"), "character value as an exact rational string");

    m.def("char_power_eval",
          [](const std::string& char_spec, int64_t k, const std::string& graph_spec) {
              return hopfgraph::convolution_power_value(hopfgraph::parse_char_spec(char_spec), k,
                                                        graph(graph_spec))
                  .str();
          },
          py::arg("char"), py::arg("k"), py::arg("graph"));

    m.def("poly_in_k_json", [](const std::string& char_spec, const std::string& graph_spec) {
        return hopfgraph::polyk_to_json(
            hopfgraph::poly_in_k(hopfgraph::parse_char_spec(char_spec), graph(graph_spec)));
    }, py::arg("char"), py::arg("graph"));

    m.def("flats_count", [](const std::string& spec) {
        return hopfgraph::flats(graph(spec)).size();
    }, py::arg("graph"));

    m.def("acyclic_count", [](const std::string& spec) {
        return hopfgraph::count_acyclic_orientations(graph(spec));
    }, py::arg("graph"));

    m.def("verify_suite", [](const std::string& name, uint64_t seed) {
        hopfgraph::VerifyOptions opts;
        opts.seed = seed;
        hopfgraph::SuiteReport report = hopfgraph::run_suite(name, opts);
        py::list checks;
        for (const auto& check : report.checks) {
            py::dict d;
            d["label"] = check.label;
            d["pass"] = check.pass;
            d["detail"] = check.detail;
            checks.append(d);
        }
        py::dict out;
        out["suite"] = report.suite;
        out["passed"] = report.passed();
        out["checks"] = checks;
        return out;
    }, py::arg("name"), py::arg("seed") = hopfgraph::kDefaultSeed);

    m.def("suite_names", [] { return hopfgraph::suite_names(); });
}
