#include "skewnorm/cli.hpp"
#include "skewnorm/cns.hpp"
#include "skewnorm/error.hpp"
#include "skewnorm/eval.hpp"
#include "skewnorm/normalize.hpp"
#include "skewnorm/text.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace skewnorm;

namespace {

std::vector<std::string> strings(const std::vector<Scalar> &v)
{
    std::vector<std::string> out;
    for (const auto &s : v) out.push_back(s.to_string());
    return out;
}

std::size_t target_index(const OreRing &ring, const std::optional<std::string> &var)
{
    if (!var) {
        if (ring.size() == 0) fail(ErrorCode::UsageError, "the ring has no variables");
        return ring.size() - 1;
    }
    if (auto idx = ring.index_of(*var)) return *idx;
    fail(ErrorCode::UnknownVariable, "unknown variable '" + *var + "'");
}

// pybind11 holders cannot point to const, so rings cross the boundary as
// shared_ptr<OreRing>. Nothing on the Python side mutates them.
using PyRing = std::shared_ptr<OreRing>;

PyRing to_py(const RingPtr &r) { return std::const_pointer_cast<OreRing>(r); }

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact arithmetic and normalization in skew polynomial rings";

    // Messages start with the error code name, e.g. "NotARoot: 1".
    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<OreRing, PyRing>(m, "Ring")
        .def_static(
            "from_json",
            [](const std::string &text, int samples, std::uint64_t seed) {
                nlohmann::json j;
                try {
                    j = nlohmann::json::parse(text);
                } catch (const nlohmann::json::exception &e) {
                    fail(ErrorCode::ConfigError, e.what());
                }
                return to_py(ring_from_json(j, CheckOptions{samples, seed}));
            },
            py::arg("text"), py::arg("samples") = kDefaultSamples, py::arg("seed") = kDefaultSeed)
        .def_static(
            "from_file",
            [](const std::string &path, int samples, std::uint64_t seed) {
                return to_py(ring_from_file(path, CheckOptions{samples, seed}));
            },
            py::arg("path"), py::arg("samples") = kDefaultSamples, py::arg("seed") = kDefaultSeed)
        .def_property_readonly("kind", [](const OreRing &r) { return std::string(ring_kind_name(r.kind())); })
        .def_property_readonly("variables",
                               [](const OreRing &r) {
                                   std::vector<std::string> names;
                                   for (const auto &v : r.variables()) names.push_back(v.name);
                                   return names;
                               })
        .def_property_readonly("certified", [](const OreRing &r) { return r.certificate().ok(); })
        .def("to_json", [](const OreRing &r) { return r.to_json().dump(); })
        .def("parse", [](const PyRing &r, const std::string &src) { return parse_expr(src, r); });

    py::class_<SkewPoly>(m, "Poly")
        .def(py::init([](const PyRing &r, const std::string &src) { return parse_expr(src, r); }))
        .def_property_readonly("ring", [](const SkewPoly &f) { return to_py(f.ring()); })
        .def("__str__", [](const SkewPoly &f) { return to_string(f); })
        .def("__repr__", [](const SkewPoly &f) { return "Poly('" + to_string(f) + "')"; })
        .def("to_json", [](const SkewPoly &f) { return to_json(f).dump(); })
        .def("is_zero", &SkewPoly::is_zero)
        .def("total_degree",
             [](const SkewPoly &f) -> std::optional<std::uint64_t> {
                 const Degree d = total_degree(f);
                 if (d.is_minus_infinity()) return std::nullopt;
                 return d.value();
             })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def("__pow__", [](const SkewPoly &f, unsigned k) { return power(f, k); })
        .def("__eq__", [](const SkewPoly &f, const SkewPoly &g) { return f.same_terms(g); });

    m.def(
        "evaluate",
        [](const SkewPoly &f, const std::vector<SkewPoly> &elements) {
            const RingPtr &ring = f.ring();
            if (elements.size() != ring->size()) fail(ErrorCode::ArityMismatch, "one element per variable expected");
            std::vector<Twist> twists;
            for (const auto &v : ring->variables()) twists.push_back({v.aut, v.der});
            const AutomorphicTuple t = make_tuple(elements.empty() ? ring : elements.front().ring(), elements, twists,
                                                  ring->check_options());
            return evaluate(f, t);
        },
        py::arg("f"), py::arg("elements"), "Evaluate f at elements carrying the twists of f's ring.");

    m.def(
        "is_automorphic",
        [](const SkewPoly &s, std::size_t var) {
            const Variable &v = s.ring()->variable(var);
            return is_automorphic(s, v.aut, v.der, s.ring()->check_options());
        },
        py::arg("s"), py::arg("var"), "Does s satisfy the commutation rule of variable `var`?");

    m.def(
        "monicize",
        [](const SkewPoly &f, std::optional<std::string> var) {
            const MonicizeResult r = monicize(f, target_index(*f.ring(), var));
            py::dict d;
            d["shifts"] = strings(r.substitution.shifts);
            d["scale"] = r.substitution.scale.to_string();
            d["leading_form"] = to_string(r.substitution.leading_form);
            d["specializations"] = r.substitution.specializations;
            d["g"] = r.g;
            return d;
        },
        py::arg("f"), py::arg("var") = py::none());

    m.def(
        "cns_witness",
        [](const SkewPoly &f, const std::vector<std::vector<std::string>> &sets) {
            std::vector<EvaluationSet> es;
            for (const auto &s : sets) {
                std::vector<Scalar> elems;
                for (const auto &t : s) elems.push_back(parse_scalar(t, f.ring()->kind()));
                es.push_back(EvaluationSet::make(std::move(elems)));
            }
            const Witness w = cns_witness(f, es);
            py::dict d;
            d["point"] = strings(w.point);
            d["value"] = w.value.to_string();
            d["scanned"] = w.scanned;
            return d;
        },
        py::arg("f"), py::arg("sets"));

    m.def(
        "formal_substitute",
        [](const SkewPoly &f, const std::vector<std::string> &point) {
            std::vector<Scalar> p;
            for (const auto &t : point) p.push_back(parse_scalar(t, f.ring()->kind()));
            return formal_substitute(f, p).to_string();
        },
        py::arg("f"), py::arg("point"));

    m.def(
        "gm_check",
        [](const SkewPoly &f, const std::vector<std::string> &roots) {
            std::vector<Scalar> rs;
            for (const auto &t : roots) rs.push_back(parse_scalar(t, f.ring()->kind()));
            const RootClassReport r = gordon_motzkin_check(f, rs);
            py::list classes;
            for (const auto &c : r.classes) classes.append(strings(c.members));
            py::dict d;
            d["degree"] = r.degree;
            d["classes"] = classes;
            return d;
        },
        py::arg("f"), py::arg("roots"));

    m.def(
        "normalize_json",
        [](const PyRing &ring, const std::vector<SkewPoly> &relations) {
            const NormalizationResult r = normalize(ring, relations);
            if (!r.replay()) fail(ErrorCode::InvariantViolated, "replay failed");
            return r.to_json().dump();
        },
        py::arg("ring"), py::arg("relations"));

    m.def(
        "replay_report",
        [](const std::string &report) { return replay_report(nlohmann::json::parse(report)); },
        py::arg("report"));

    m.def(
        "reduce",
        [](const SkewPoly &e, const SkewPoly &relation, std::optional<std::string> var) {
            const MonicRelation rel = MonicRelation::from_poly(relation, target_index(*relation.ring(), var));
            const Division d = reduce_by_monic(e, rel);
            return py::make_tuple(d.quotient, d.remainder);
        },
        py::arg("e"), py::arg("relation"), py::arg("var") = py::none());

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            const CliResult r = run_cli(args);
            return py::make_tuple(r.exit_code, r.out, r.err);
        },
        py::arg("args"));
}
