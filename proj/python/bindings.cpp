#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>
#include <vector>

#include "slcs/checker.hpp"
#include "slcs/closure.hpp"
#include "slcs/errors.hpp"
#include "slcs/image.hpp"
#include "slcs/model.hpp"
#include "slcs/parser.hpp"
#include "slcs/script.hpp"

namespace py = pybind11;
using namespace slcs;

namespace {

std::vector<PointId> ids(const PointSet& s) { return s.members(); }

PointSet to_set(const ClosureModel& m, const std::vector<PointId>& points) {
    return PointSet::from_members(m.point_count(), points);
}

UnknownAtomPolicy policy(const std::string& name) {
    if (name == "error") return UnknownAtomPolicy::Error;
    if (name == "empty") return UnknownAtomPolicy::Empty;
    throw std::invalid_argument("unknown_atoms must be 'error' or 'empty'");
}

Formula as_formula(const py::object& f) {
    if (py::isinstance<py::str>(f)) return parse_formula(f.cast<std::string>());
    return f.cast<Formula>();
}

using SetOp = PointSet (*)(const SpaceGraph&, const PointSet&);

} // namespace

PYBIND11_MODULE(_slcs, m) {
    m.doc() = "Spatial model checking over closure models and images";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<LoadError>(m, "LoadError", error.ptr());
    py::register_exception<SemanticError>(m, "SemanticError", error.ptr());
    py::register_exception<UniverseMismatch>(m, "UniverseMismatch", error.ptr());

    py::class_<Formula>(m, "Formula")
        .def_property_readonly("op", [](const Formula& f) {
            static const char* names[] = {"atom", "top", "not", "and", "near", "until", "bot", "or",
                                          "interior", "boundary", "iboundary", "cboundary", "reach",
                                          "global", "future"};
            return std::string(names[static_cast<int>(f.op())]);
        })
        .def_property_readonly("letter", &Formula::letter)
        .def_property_readonly("children", [](const Formula& f) {
            std::vector<Formula> out;
            if (arity(f.op()) >= 1) out.push_back(f.lhs());
            if (arity(f.op()) == 2) out.push_back(f.rhs());
            return out;
        })
        .def("__eq__", &Formula::operator==)
        .def("__str__", [](const Formula& f) { return to_string(f); })
        .def("__repr__", [](const Formula& f) { return "Formula(" + to_string(f) + ")"; });

    m.def("parse", &parse_formula, py::arg("text"));
    m.def("desugar", &desugar, py::arg("formula"));
    m.def("formula_size", &formula_size, py::arg("formula"));
    m.def("is_core", &is_core, py::arg("formula"));

    py::class_<ClosureModel>(m, "Model")
        .def_property_readonly("point_count", &ClosureModel::point_count)
        .def_property_readonly("edge_count", [](const ClosureModel& cm) { return cm.space().edge_count(); })
        .def_property_readonly("names", &ClosureModel::names)
        .def_property_readonly("edges", [](const ClosureModel& cm) { return cm.space().edges(); })
        .def_property_readonly("letters", [](const ClosureModel& cm) {
            std::vector<std::string> out;
            for (const auto& [letter, set] : cm.valuation()) out.push_back(letter);
            return out;
        })
        .def("valuation", [](const ClosureModel& cm, const std::string& letter) {
            const PointSet* s = cm.letter(letter);
            if (s == nullptr) throw py::key_error(letter);
            return ids(*s);
        })
        .def("find", [](const ClosureModel& cm, const std::string& name) { return cm.find(name); })
        .def("to_json", &save_model)
        .def("__eq__", &ClosureModel::operator==);

    m.def(
        "model_from_edges",
        [](std::size_t n, const std::vector<Edge>& edges, const std::map<std::string, std::vector<PointId>>& v) {
            return model_from_edges(n, edges, v);
        },
        py::arg("n"), py::arg("edges"),
        py::arg("valuation") = std::map<std::string, std::vector<PointId>>{});
    m.def("load_model", &load_model, py::arg("json_text"));

    m.def(
        "check",
        [](const ClosureModel& cm, const py::object& f, const std::string& unknown_atoms) {
            const Formula formula = as_formula(f);
            CheckOptions options;
            options.unknown_atoms = policy(unknown_atoms);
            CheckOutcome out;
            {
                py::gil_scoped_release release;
                out = check(cm, formula, options);
            }
            return ids(out.satisfying);
        },
        py::arg("model"), py::arg("formula"), py::arg("unknown_atoms") = "error",
        "Ids of the points satisfying the formula (text or Formula).");
    m.def(
        "check_stats",
        [](const ClosureModel& cm, const py::object& f) {
            const CheckStats s = check(cm, as_formula(f)).stats;
            py::dict d;
            d["subformulas_evaluated"] = s.subformulas_evaluated;
            d["points_visited"] = s.points_visited;
            d["edges_traversed"] = s.edges_traversed;
            d["until_calls"] = s.until_calls;
            d["wall_seconds"] = std::chrono::duration<double>(s.wall_time).count();
            return d;
        },
        py::arg("model"), py::arg("formula"));
    m.def(
        "result_json",
        [](const ClosureModel& cm, const std::string& text, const std::vector<PointId>& points) {
            return save_result({text, to_set(cm, points)}, cm);
        },
        py::arg("model"), py::arg("formula_text"), py::arg("points"));

    auto bind_set_op = [&m](const char* name, SetOp op) {
        m.def(
            name,
            [op](const ClosureModel& cm, const std::vector<PointId>& points) {
                return ids(op(cm.space(), to_set(cm, points)));
            },
            py::arg("model"), py::arg("points"));
    };
    bind_set_op("closure", [](const SpaceGraph& g, const PointSet& a) { return closure(g, a); });
    bind_set_op("interior", [](const SpaceGraph& g, const PointSet& a) { return interior(g, a); });
    bind_set_op("boundary", &boundary);
    bind_set_op("boundary_minus", &boundary_minus);
    bind_set_op("boundary_plus", [](const SpaceGraph& g, const PointSet& a) { return boundary_plus(g, a); });
    m.def("is_idempotent", [](const ClosureModel& cm) { return is_idempotent(cm.space()); }, py::arg("model"));
    m.def(
        "minimal_neighbourhood",
        [](const ClosureModel& cm, PointId x) { return ids(minimal_neighbourhood(cm.space(), x)); },
        py::arg("model"), py::arg("point"));

    py::class_<RasterImage>(m, "Image")
        .def(py::init([](std::size_t w, std::size_t h, const py::bytes& rgb) {
                 const std::string data = rgb;
                 return RasterImage(w, h, std::vector<std::uint8_t>(data.begin(), data.end()));
             }),
             py::arg("width"), py::arg("height"), py::arg("rgb"))
        .def_property_readonly("width", &RasterImage::width)
        .def_property_readonly("height", &RasterImage::height)
        .def("pixel", [](const RasterImage& img, std::size_t x, std::size_t y) {
            if (x >= img.width() || y >= img.height()) throw py::index_error("pixel out of range");
            const Rgb c = img.at(x, y);
            return py::make_tuple(c.r, c.g, c.b);
        })
        .def("tobytes", [](const RasterImage& img) {
            const auto& b = img.bytes();
            return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
        })
        .def("__eq__", &RasterImage::operator==);

    m.def("read_image", &read_image, py::arg("path"));
    m.def("write_image", &write_image, py::arg("image"), py::arg("path"));
    m.def(
        "image_to_model",
        [](const RasterImage& img, int adjacency, const std::map<std::string, std::string>& letters) {
            std::map<std::string, ColorPredicate> preds;
            for (const auto& [letter, atom] : letters) {
                const Formula f = parse_formula(atom);
                auto p = f.op() == Op::Atom ? parse_color_atom(f.letter()) : std::nullopt;
                if (!p) throw std::invalid_argument("'" + atom + "' is not a color(...) range");
                preds.emplace(letter, *p);
            }
            if (adjacency != 4 && adjacency != 8) throw std::invalid_argument("adjacency must be 4 or 8");
            return image_to_model(img, adjacency == 8 ? Adjacency::Eight : Adjacency::Four, preds);
        },
        py::arg("image"), py::arg("adjacency") = 4,
        py::arg("letters") = std::map<std::string, std::string>{});
    m.def(
        "run_script",
        [](const RasterImage& img, const std::string& script, int adjacency, const std::string& unknown_atoms) {
            if (adjacency != 4 && adjacency != 8) throw std::invalid_argument("adjacency must be 4 or 8");
            ScriptOptions options;
            options.adjacency = adjacency == 8 ? Adjacency::Eight : Adjacency::Four;
            options.check.unknown_atoms = policy(unknown_atoms);
            const Script parsed = parse_script(script);
            py::gil_scoped_release release;
            return run_script(img, parsed, options).image;
        },
        py::arg("image"), py::arg("script"), py::arg("adjacency") = 4, py::arg("unknown_atoms") = "error");
}
