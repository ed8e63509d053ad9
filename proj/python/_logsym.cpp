#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "logsym/cli.hpp"
#include "logsym/error.hpp"
#include "logsym/logcohom.hpp"
#include "logsym/model.hpp"
#include "logsym/oracle.hpp"
#include "logsym/parse.hpp"
#include "logsym/poisson.hpp"

namespace py = pybind11;
using namespace logsym;

namespace {

py::list to_python(const BettiVector& v) {
    py::list out;
    for (const auto& d : v.dims()) out.append(py::int_(py::str(d.get_str())));
    return out;
}

OutputFormat parse_format(const std::string& format) {
    if (format == "json") return OutputFormat::Json;
    if (format == "table") return OutputFormat::Table;
    throw InputError("unknown format '" + format + "'; expected json or table");
}

} // namespace

PYBIND11_MODULE(_logsym, m) {
    m.doc() = "Cohomology of log symplectic manifolds with normal crossing divisors";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto input_error = py::register_exception<InputError>(m, "InputError", error.ptr());
    py::register_exception<ParseError>(m, "ParseError", input_error.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", error.ptr());

    py::class_<ModelSpec>(m, "Model")
        .def_static("load", &load_model, py::arg("path"))
        .def_static("parse", [](const std::string& text) { return parse_model(text); }, py::arg("text"))
        .def_readonly("name", &ModelSpec::name)
        .def_property_readonly("kind", [](const ModelSpec& s) { return to_string(s.kind); })
        .def_readonly("dimension", &ModelSpec::dimension)
        .def_property_readonly("coordinates", [](const ModelSpec& s) { return coordinate_names(s); })
        .def("to_json", &serialize_model)
        .def("__eq__", [](const ModelSpec& a, const ModelSpec& b) { return a == b; })
        .def("__repr__", [](const ModelSpec& s) { return "<Model " + s.name + " (" + to_string(s.kind) + ")>"; });

    m.def("commands", &command_names);

    m.def(
        "run",
        [](const std::string& command, const ModelSpec& spec, const std::string& format, std::optional<int> cutoff,
           std::optional<long> max_matrix, bool strict_jk, bool strict_components) {
            RunFlags flags;
            flags.format = parse_format(format);
            flags.cutoff = cutoff;
            flags.max_matrix = max_matrix;
            flags.strict_jk = strict_jk;
            flags.strict_components = strict_components;
            const CommandOutput out = run_command(command, spec, flags);
            return py::make_tuple(out.exit_code, flags.format == OutputFormat::Json ? out.json : out.table);
        },
        py::arg("command"), py::arg("model"), py::arg("format") = "json", py::arg("cutoff") = py::none(),
        py::arg("max_matrix") = py::none(), py::arg("strict_jk") = false, py::arg("strict_components") = false,
        "Runs a CLI command; returns (exit_code, output).");

    m.def(
        "b_cohomology", [](const ModelSpec& spec) { return to_python(b_cohomology(build_arrangement(spec))); },
        py::arg("model"));

    m.def(
        "torus_b_cohomology",
        [](int n, const std::vector<int>& divisor) { return to_python(b_cohomology(torus_model(n, divisor))); },
        py::arg("n"), py::arg("divisor"));

    m.def(
        "enumerate_index_sets",
        [](int k, int ell, int p_max, bool strict_jk) {
            py::list out;
            for (const auto& c : enumerate_index_sets(k, ell, p_max, PoissonOptions{strict_jk})) {
                py::dict d;
                d["I"] = c.I;
                d["J"] = c.J;
                d["K"] = c.K;
                d["L"] = c.L;
                d["m"] = c.m;
                out.append(d);
            }
            return out;
        },
        py::arg("k"), py::arg("ell"), py::arg("p_max"), py::arg("strict_jk") = false);

    m.def(
        "de_rham_betti_oracle",
        [](int n, int cutoff, long max_columns) {
            OracleOptions options;
            options.max_columns = max_columns;
            return to_python(de_rham_betti_oracle(n, cutoff, options));
        },
        py::arg("n"), py::arg("cutoff"), py::arg("max_columns") = OracleOptions{}.max_columns);

    m.def(
        "truncated_lichnerowicz",
        [](const std::string& pi, const std::vector<std::string>& coordinates, int p, int cutoff, long max_columns) {
            OracleOptions options;
            options.max_columns = max_columns;
            const LichnerowiczEstimate e =
                truncated_lichnerowicz(parse_multivector(pi, coordinates), p, cutoff, options);
            py::dict d;
            d["degree"] = e.degree;
            d["cutoff"] = e.cutoff;
            d["kernel_dim"] = e.kernel_dim;
            d["image_rank"] = e.image_rank;
            d["dim_estimate"] = e.dim_estimate;
            d["previous_estimate"] = e.previous_estimate;
            d["stabilized"] = e.stabilized;
            d["columns"] = e.columns;
            return d;
        },
        py::arg("pi"), py::arg("coordinates"), py::arg("p"), py::arg("cutoff"),
        py::arg("max_columns") = OracleOptions{}.max_columns);
}
