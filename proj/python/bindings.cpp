#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "ncspectrum/api.hpp"

namespace py = pybind11;
using ncs::api::json;

namespace {

json parse(const std::string& text) { return json::parse(text); }

std::optional<json> parse_optional(const std::optional<std::string>& text) {
    if (!text) return std::nullopt;
    return json::parse(*text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact K_0 and ideal-lattice computations; JSON strings in, JSON strings out.";

    py::register_exception<ncs::io::ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def(
        "k0",
        [](const std::string& algebra, const std::string& method, std::size_t stabilize,
           const std::optional<std::string>& spec, bool nonunital) {
            return ncs::api::k0(parse(algebra), method, stabilize, parse_optional(spec), nonunital).dump();
        },
        py::arg("algebra"), py::arg("method") = "standard", py::arg("stabilize") = 2, py::arg("spec") = py::none(),
        py::arg("nonunital") = false);
    m.def(
        "verify_theorem1",
        [](const std::string& algebra, const std::optional<std::string>& hom, const std::optional<std::string>& spec,
           std::size_t stabilize, std::size_t random_homs, std::uint64_t seed) {
            return ncs::api::verify_theorem1(parse(algebra), parse_optional(hom), parse_optional(spec), stabilize,
                                             random_homs, seed)
                .dump();
        },
        py::arg("algebra"), py::arg("hom") = py::none(), py::arg("spec") = py::none(), py::arg("stabilize") = 2,
        py::arg("random_homs") = 0, py::arg("seed") = 0);
    m.def("colimit", [](const std::string& d) { return ncs::api::colimit(parse(d)).dump(); }, py::arg("diagram"));
    m.def("limit", [](const std::string& d) { return ncs::api::limit(parse(d)).dump(); }, py::arg("diagram"));
    m.def(
        "subdiagram",
        [](const std::string& a, const std::optional<std::string>& spec) {
            return ncs::api::subdiagram(parse(a), parse_optional(spec)).dump();
        },
        py::arg("algebra"), py::arg("spec") = py::none());
    m.def(
        "ideals",
        [](const std::string& a, const std::optional<std::string>& spec) {
            return ncs::api::ideals(parse(a), parse_optional(spec)).dump();
        },
        py::arg("algebra"), py::arg("spec") = py::none());
    m.def("partial_ideal_check", [](const std::string& f) { return ncs::api::partial_ideal_check(parse(f)).dump(); },
          py::arg("file"));
    m.def("snf", [](const std::string& matrix) { return ncs::api::snf(parse(matrix)).dump(); }, py::arg("matrix"));
}
