#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "foamho/phi.hpp"
#include "foamho/table_cases.hpp"

namespace py = pybind11;
using namespace foamho;

namespace {

Backend backend_from(const std::string& name) {
    if (name == "aps") return Backend::APS;
    if (name == "foam") return Backend::Foam;
    throw std::invalid_argument("backend must be 'aps' or 'foam'");
}

py::list homology_rows(const std::string& text, const std::string& backend, int cap) {
    Diagram d = parse_diagram(text);
    Cube cube(d, cap);
    py::list rows;
    for (auto& [g, h] : nonzero_homology(assemble_complex(cube, backend_from(backend)))) {
        py::dict row;
        row["i"] = g.i;
        row["j"] = g.j;
        row["s"] = s_string(g.s);
        row["free_rank"] = h.free_rank;
        py::list torsion;
        for (const Int& t : h.torsion) torsion.append(py::int_(py::str(t.str())));
        row["torsion"] = torsion;
        rows.append(row);
    }
    return rows;
}

py::list chain_group_rows(const std::string& text, const std::string& backend, int cap) {
    Diagram d = parse_diagram(text);
    Cube cube(d, cap);
    py::list rows;
    GradedComplex c = assemble_complex(cube, backend_from(backend));
    for (auto& [g, basis] : c.basis) {
        py::dict row;
        row["i"] = g.i;
        row["j"] = g.j;
        row["s"] = s_string(g.s);
        row["dim"] = basis.size();
        rows.append(row);
    }
    return rows;
}

py::dict verify_all(const std::string& text, int cap) {
    Diagram d = parse_diagram(text);
    Cube cube(d, cap);
    py::dict out;
    out["d_squared_aps"] = verify_d_squared(assemble_complex(cube, Backend::APS)).ok;
    out["d_squared_foam"] = verify_d_squared(assemble_complex(cube, Backend::Foam)).ok;
    out["grading"] = verify_grading_preservation(cube).ok;
    out["chain_map"] = verify_chain_map(cube).ok;
    return out;
}

py::list table_rows() {
    py::list rows;
    for (const TableRowResult& r : run_table_cases()) {
        py::dict row;
        row["row"] = r.row;
        row["label"] = r.label;
        row["aps"] = r.aps;
        row["foam"] = r.foam;
        row["match"] = r.match;
        rows.append(row);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Triply-graded homology of link diagrams on surfaces";
    m.def("homology", &homology_rows, py::arg("text"), py::arg("backend") = "aps",
          py::arg("cap") = 16,
          "Homology table of a diagram given as .dg text; one dict per nonzero "
          "grading.");
    m.def("chain_groups", &chain_group_rows, py::arg("text"),
          py::arg("backend") = "aps", py::arg("cap") = 16);
    m.def("verify", &verify_all, py::arg("text"), py::arg("cap") = 16,
          "d^2=0 (both backends), grading and chain-map checks.");
    m.def("table_cases", &table_rows, "The 21 merge/split cases, both backends.");
    m.def(
        "roundtrip",
        [](const std::string& text) { return serialize_diagram(parse_diagram(text)); },
        py::arg("text"), "Parse and reserialize a diagram (validation).");

    py::register_exception<ParseError>(m, "DiagramParseError");
    py::register_exception<CapExceeded>(m, "CapExceededError");
    py::register_exception<InternalError>(m, "InternalInvariantError");
}
