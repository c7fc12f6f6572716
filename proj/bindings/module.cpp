#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diamondlab/geninv.hpp"
#include "diamondlab/orders.hpp"
#include "diamondlab/preservers.hpp"
#include "diamondlab/structure.hpp"
#include "diamondlab/suites.hpp"

namespace py = pybind11;
using namespace dlab;

namespace {

Tol make_tol(double atol, double rtol, double rank_rel) {
    Tol t;
    t.atol = atol;
    t.rtol = rtol;
    t.rank_rel = rank_rel;
    return t;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        default: return "inapplicable";
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Generalized inverses, matrix partial orders, and diamond-order "
              "preserver analysis";

    py::class_<Tol>(m, "Tol")
        .def(py::init(&make_tol), py::arg("atol") = 1e-9, py::arg("rtol") = 1e-9,
             py::arg("rank_rel") = 1e-12)
        .def_readwrite("atol", &Tol::atol)
        .def_readwrite("rtol", &Tol::rtol)
        .def_readwrite("rank_rel", &Tol::rank_rel);

    py::class_<OrderReport>(m, "OrderReport")
        .def_property_readonly("kind", [](const OrderReport& r) { return to_string(r.kind); })
        .def_property_readonly("verdict",
                               [](const OrderReport& r) { return verdict_name(r.verdict); })
        .def_readonly("residuals", &OrderReport::residuals)
        .def_readonly("witnesses", &OrderReport::witnesses)
        .def("holds", &OrderReport::holds);

    m.def("pinv", &pinv, py::arg("a"), py::arg("tol") = Tol{},
          "Moore-Penrose inverse via singular value decomposition");
    m.def("group_inverse",
          [](const CMat& a, const Tol& tol) { return group_inverse(a, tol); }, py::arg("a"),
          py::arg("tol") = Tol{},
          "Group inverse, or None when rank(a^2) != rank(a)");
    m.def("inner_inverse", &inner_inverse, py::arg("b"), py::arg("v"), py::arg("tol") = Tol{},
          "Inner inverse b† + v - b†bvbb† parameterized by v");
    m.def("matrix_rank", [](const CMat& a, const Tol& tol) { return rank(a, tol); },
          py::arg("a"), py::arg("tol") = Tol{});

    m.def(
        "check_order",
        [](const std::string& kind, const CMat& a, const CMat& b, const Tol& tol) {
            const auto k = order_kind_from_string(kind);
            if (!k) throw std::invalid_argument("unknown order kind: " + kind);
            return check_order(*k, a, b, tol);
        },
        py::arg("kind"), py::arg("a"), py::arg("b"), py::arg("tol") = Tol{},
        "kind in {space, diamond, star, left-star, right-star, minus, sharp}");
    m.def("minus_witness", &minus_witness, py::arg("a"), py::arg("b"), py::arg("tol") = Tol{});
    m.def("orthogonal", &orthogonal, py::arg("a"), py::arg("b"), py::arg("tol") = Tol{});
    m.def("gen_diamond_pair", &gen_diamond_pair, py::arg("n"), py::arg("seed"));
    m.def("gen_star_pair", &gen_star_pair, py::arg("n"), py::arg("seed"));

    m.def(
        "sample",
        [](const std::string& kind, Eigen::Index n, std::uint64_t seed, Eigen::Index r) {
            SampleKind k;
            if (kind == "ginibre") k = SampleKind::Ginibre;
            else if (kind == "unitary") k = SampleKind::Unitary;
            else if (kind == "projection") k = SampleKind::Projection;
            else if (kind == "partial_isometry") k = SampleKind::PartialIsometry;
            else if (kind == "fixed_rank") k = SampleKind::FixedRank;
            else if (kind == "hermitian") k = SampleKind::Hermitian;
            else throw std::invalid_argument("unknown sample kind: " + kind);
            return sample(k, n, seed, r);
        },
        py::arg("kind"), py::arg("n"), py::arg("seed"), py::arg("r") = -1);

    m.def(
        "minimal_below",
        [](const CMat& a, const Tol& tol, std::uint64_t seed) {
            const RankOne u = minimal_below(a, tol, seed);
            return u.dense();
        },
        py::arg("a"), py::arg("tol") = Tol{}, py::arg("seed") = 0,
        "A rank-one element diamond-below a");
    m.def("is_minimal_diamond", &is_minimal_diamond, py::arg("u"), py::arg("tol") = Tol{});
    m.def(
        "is_maximal_diamond",
        [](const CMat& a, const Tol& tol, std::uint64_t seed) {
            const MaximalityReport r = is_maximal_diamond(a, tol, seed);
            return py::make_tuple(r.maximal, r.strictly_above);
        },
        py::arg("a"), py::arg("tol") = Tol{}, py::arg("seed") = 1,
        "(maximal, strictly_above_or_None)");
    m.def("projection_characterization", &projection_characterization, py::arg("p"),
          py::arg("q"), py::arg("tol") = Tol{});
    m.def(
        "invertibility_probe",
        [](const CMat& a, const Tol& tol) {
            const ProbeReport r = invertibility_probe(a, tol);
            return py::make_tuple(r.invertible, r.first_failure);
        },
        py::arg("a"), py::arg("tol") = Tol{}, "(invertible, first_failing_probe)");

    py::class_<LinearMap>(m, "LinearMap")
        .def_readonly("dim", &LinearMap::dim)
        .def_readonly("super", &LinearMap::super)
        .def_static("identity", &LinearMap::identity, py::arg("n"));

    m.def("make_canonical", &make_canonical, py::arg("lam"), py::arg("u"), py::arg("v"),
          py::arg("transpose"), py::arg("tol") = Tol{},
          "The map x -> lam U x V (or lam U x^T V)");
    m.def("apply_map", &apply, py::arg("t"), py::arg("a"));
    m.def(
        "preserves_diamond",
        [](const LinearMap& t, int pairs, std::uint64_t seed, const Tol& tol, bool both) {
            const PreserverVerdict v = preserves_diamond(t, pairs, seed, tol, both);
            return py::make_tuple(v.forward_ok, v.backward_ok, v.counterexample);
        },
        py::arg("t"), py::arg("pairs") = 200, py::arg("seed") = 17, py::arg("tol") = Tol{},
        py::arg("both_directions") = true,
        "(forward_ok, backward_ok_or_None, counterexample_or_None)");
    m.def(
        "decompose_preserver",
        [](const LinearMap& t, const Tol& tol) {
            const DecompositionReport r = decompose_preserver(t, tol);
            py::dict d;
            d["lambda"] = r.lambda;
            d["scale"] = r.scale;
            d["flavor"] = to_string(r.flavor);
            d["unitary_part"] = r.unitary_part;
            d["left_unitary"] = r.left_unitary;
            d["right_unitary"] = r.right_unitary;
            d["residuals"] = r.residuals;
            return d;
        },
        py::arg("t"), py::arg("tol") = Tol{});

    m.def(
        "run_suites",
        [](const std::string& name, std::uint64_t seed, int pairs) {
            SuiteConfig cfg;
            cfg.seed = seed;
            cfg.pairs = pairs;
            py::list out;
            for (const SuiteResult& r : run_suites(name, cfg)) {
                py::dict d;
                d["suite"] = r.suite;
                d["check"] = r.check;
                d["checked"] = r.checked;
                d["violations"] = r.violations;
                out.append(d);
            }
            return out;
        },
        py::arg("name"), py::arg("seed") = 0, py::arg("pairs") = 100);
}
