#include <currentlab/cli.hpp>
#include <currentlab/dual.hpp>
#include <currentlab/errors.hpp>
#include <currentlab/finsler.hpp>
#include <currentlab/holonomy.hpp>
#include <currentlab/io.hpp>
#include <currentlab/mobius.hpp>
#include <currentlab/periodic.hpp>
#include <currentlab/tropical.hpp>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace currentlab;

namespace {

// Accepts int, str, or fractions.Fraction.
Rational to_rational(const py::handle& obj) { return parse_rational(py::str(obj)); }

py::object to_fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(to_string(r));
}

BoundaryPoint point(const py::handle& obj) { return BoundaryPoint(to_rational(obj)); }

DiscreteCurrent from_triples(const std::vector<std::tuple<py::object, py::object, py::object>>& chords) {
    std::vector<std::pair<Chord, Rational>> entries;
    for (const auto& [src, dst, w] : chords) entries.push_back({Chord(point(src), point(dst)), to_rational(w)});
    return DiscreteCurrent(entries);
}

Json parse(const std::string& text) { return parse_json_text(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computations with geodesic currents on the disk.";

    auto base = py::register_exception<CurrentlabError>(m, "CurrentlabError");
#define REGISTER(Name) py::register_exception<Name>(m, #Name, base);
    REGISTER(ParseError)
    REGISTER(ValidationError)
    REGISTER(GenericPositionError)
    REGISTER(EmptyCurrentError)
    REGISTER(MassRangeError)
    REGISTER(NotLowerSubmeasureError)
    REGISTER(ComplexityBudgetError)
    REGISTER(ContractError)
    REGISTER(NotLaminationError)
    REGISTER(FixedPointError)
    REGISTER(NotHyperbolicError)
    REGISTER(DiagonalError)
    REGISTER(RoundingCollisionError)
    REGISTER(DegenerateConfigurationError)
    REGISTER(IOError)
#undef REGISTER

    py::class_<DiscreteCurrent>(m, "Current")
        .def(py::init(&from_triples), py::arg("chords"),
             "Chords as (src, dst, weight) triples; angles are turns in [0, 1).")
        .def_static("from_json", [](const std::string& text) { return current_from_json(parse(text)).mu; })
        .def("to_json", [](const DiscreteCurrent& mu) { return current_to_json(mu).dump(); })
        .def("__len__", &DiscreteCurrent::size)
        .def("chords",
             [](const DiscreteCurrent& mu) {
                 py::list out;
                 for (size_t i = 0; i < mu.size(); ++i)
                     out.append(py::make_tuple(to_fraction(mu.chord(i).src().angle()),
                                               to_fraction(mu.chord(i).dst().angle()), to_fraction(mu.weight(i))));
                 return out;
             })
        .def_property_readonly("total_mass", [](const DiscreteCurrent& mu) { return to_fraction(mu.total_mass()); })
        .def("is_symmetric", &is_symmetric)
        .def("is_lamination", &is_lamination)
        .def("box_measure", [](const DiscreteCurrent& mu, py::object x1, py::object x2, py::object y1, py::object y2) {
            return to_fraction(box_measure(mu, Box(point(x1), point(x2), point(y1), point(y2))));
        });

    m.def(
        "cross_ratio",
        [](const DiscreteCurrent& mu, py::object mass, py::object x1, py::object x2, py::object y1, py::object y2) {
            HolonomyContext ctx(mu, to_rational(mass));
            return to_fraction(cross_ratio(ctx, point(x1), point(x2), point(y1), point(y2)));
        },
        py::arg("current"), py::arg("mass"), py::arg("x1"), py::arg("x2"), py::arg("y1"), py::arg("y2"));
    m.def(
        "triple_ratio",
        [](const DiscreteCurrent& mu, py::object mass, py::object x, py::object y, py::object z) {
            HolonomyContext ctx(mu, to_rational(mass));
            return to_fraction(triple_ratio(ctx, point(x), point(y), point(z)));
        },
        py::arg("current"), py::arg("mass"), py::arg("x"), py::arg("y"), py::arg("z"));
    m.def(
        "certify_rank",
        [](const DiscreteCurrent& mu, int n, py::object mass) {
            HolonomyContext ctx(mu, to_rational(mass));
            return certify_tropical_rank(ctx, n).certified;
        },
        py::arg("current"), py::arg("n"), py::arg("mass"));
    m.def(
        "dual_complex",
        [](const DiscreteCurrent& mu, py::object mass) {
            HolonomyContext ctx(mu, to_rational(mass));
            auto cx = enumerate_complex(ctx);
            py::list distances;
            for (const auto& a : cx.vertices) {
                py::list row;
                for (const auto& b : cx.vertices) row.append(to_fraction(metric_d(ctx, a, b)));
                distances.append(row);
            }
            py::dict out;
            out["vertices"] = cx.vertices.size();
            out["edges"] = cx.edges;
            out["faces"] = cx.faces.size();
            out["dimension"] = cx.dimension;
            out["distances"] = distances;
            return out;
        },
        py::arg("current"), py::arg("mass"),
        "Vertex count, edges, face count, dimension and the vertex distance matrix.");

    m.def(
        "translation_length",
        [](const std::string& periodic_json, long power) {
            return to_fraction(translation_length(periodic_from_json(parse(periodic_json)), power));
        },
        py::arg("periodic_json"), py::arg("m") = 1);

    m.def(
        "verify_abc",
        [](std::array<double, 4> a, std::array<double, 4> b) {
            auto c = verify_abc(MobiusMap(a[0], a[1], a[2], a[3]), MobiusMap(b[0], b[1], b[2], b[3]));
            return py::make_tuple(c.lhs, c.rhs);
        },
        py::arg("a"), py::arg("b"), "Both sides of the abc identity for a pair of hyperbolic maps.");

    m.def("finsler_distance", &distance, py::arg("p"), py::arg("q"));
    m.def("corridor_cross_ratio", &corridor_cross_ratio, py::arg("length"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line tool in process; returns (exit, stdout, stderr).");
}
