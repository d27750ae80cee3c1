#include "trizp/conditions.hpp"
#include "trizp/errors.hpp"
#include "trizp/funcmap.hpp"
#include "trizp/ringcore.hpp"
#include "trizp/theorems.hpp"
#include "trizp/trimodule.hpp"
#include "trizp/zmlinalg.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace trizp;

namespace {

Element elem(const FiniteRing& r, const Vec& v) { return r.element(v); }

py::int_ to_pyint(const BigCount& n) { return py::int_(py::str(n.str())); }

py::list generator_rows(const SolutionModule& s) {
    py::list out;
    for (std::size_t i = 0; i < s.generators().rows(); ++i) out.append(s.generators().row_vec(i));
    return out;
}

std::vector<Vec> members(const SolutionModule& s, std::uint64_t bound) {
    std::vector<Vec> out;
    for_each_member(s, bound, [&](const Vec& v) { out.push_back(v); });
    return out;
}

ConditionSpec spec(const std::string& name) { return ConditionSpec::parse(name); }

SolveOptions solve_opts(std::uint64_t bound, unsigned workers) {
    SolveOptions o;
    o.enumeration_bound = bound;
    o.workers = workers;
    return o;
}

py::list checks_list(const CheckRecord& rec) {
    py::list out;
    for (const auto& c : rec.checks) out.append(py::make_tuple(c.name, c.passed, c.witness));
    return out;
}

py::dict report_dict(const VerificationReport& rep) {
    py::dict modules;
    for (const auto& m : rep.modules) modules[py::str(m.name)] = m.module;
    py::dict d;
    d["name"] = rep.name;
    d["ring"] = rep.ring_label;
    d["passed"] = rep.passed();
    d["modules"] = modules;
    d["checks"] = checks_list(rep.checks);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Additive maps on finite triangular rings over Z/m";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<EvenModulusError>(m, "EvenModulusError", error);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", error);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error);
    py::register_exception<ModulusMismatch>(m, "ModulusMismatch", error);
    py::register_exception<RingMismatch>(m, "RingMismatch", error);
    py::register_exception<EnumerationBoundExceeded>(m, "EnumerationBoundExceeded", error);
    py::register_exception<NotAssociative>(m, "NotAssociative", error);
    py::register_exception<NoUnity>(m, "NoUnity", error);
    py::register_exception<NotUnitalModule>(m, "NotUnitalModule", error);
    py::register_exception<NotFaithful>(m, "NotFaithful", error);
    py::register_exception<NotASolution>(m, "NotASolution", error);
    py::register_exception<PreconditionViolated>(m, "PreconditionViolated", error);
    py::register_exception<DeltaNotJordanDerivation>(m, "DeltaNotJordanDerivation", error);
    py::register_exception<TheoremViolated>(m, "TheoremViolated", error);

    m.attr("DEFAULT_BOUND") = default_enumeration_bound;
    m.attr("CONDITION_KINDS") = [] {
        std::vector<std::string> names;
        for (const auto& s : ConditionSpec::all()) names.emplace_back(s.name());
        return names;
    }();

    py::class_<SolutionModule>(m, "SolutionModule")
        .def_property_readonly("ambient_dim", &SolutionModule::ambient_dim)
        .def_property_readonly("modulus", [](const SolutionModule& s) { return s.modulus().value(); })
        .def_property_readonly("cardinality", [](const SolutionModule& s) { return to_pyint(s.cardinality()); })
        .def_property_readonly("generators", &generator_rows)
        .def("__contains__", [](const SolutionModule& s, const Vec& v) { return member(v, s); })
        .def("issubset", [](const SolutionModule& a, const SolutionModule& b) { return module_subset(a, b); })
        .def("members", &members, py::arg("bound") = default_enumeration_bound)
        .def(py::self == py::self)
        .def("__repr__", [](const SolutionModule& s) {
            return "<SolutionModule dim=" + std::to_string(s.ambient_dim()) + " card=" + s.cardinality_string() + ">";
        });

    m.def("kernel", [](Residue mod, const std::vector<Vec>& rows, std::size_t cols) {
        return kernel(MatrixZm(Modulus(mod), cols, rows));
    }, py::arg("modulus"), py::arg("rows"), py::arg("cols"));
    m.def("howell_form", [](Residue mod, const std::vector<Vec>& rows, std::size_t cols) {
        return howell_form(MatrixZm(Modulus(mod), cols, rows)).to_rows();
    }, py::arg("modulus"), py::arg("rows"), py::arg("cols"));

    py::class_<FiniteRing>(m, "FiniteRing")
        .def(py::init([](Residue mod, std::size_t rank, StructureConstants sc, Vec unity, std::string label) {
                 return FiniteRing::make(Modulus(mod), rank, std::move(sc), std::move(unity), std::move(label));
             }),
             py::arg("modulus"), py::arg("rank"), py::arg("structure_constants"), py::arg("unity"),
             py::arg("label") = "R")
        .def_property_readonly("modulus", [](const FiniteRing& r) { return r.modulus().value(); })
        .def_property_readonly("rank", &FiniteRing::rank)
        .def_property_readonly("label", &FiniteRing::label)
        .def_property_readonly("order", &FiniteRing::order)
        .def_property_readonly("structure_constants", &FiniteRing::structure_constants)
        .def("zero", [](const FiniteRing& r) { return r.zero().coords; })
        .def("one", [](const FiniteRing& r) { return r.one().coords; })
        .def("basis", [](const FiniteRing& r, std::size_t i) { return r.basis(i).coords; })
        .def("add", [](const FiniteRing& r, const Vec& a, const Vec& b) { return r.add(elem(r, a), elem(r, b)).coords; })
        .def("sub", [](const FiniteRing& r, const Vec& a, const Vec& b) { return r.sub(elem(r, a), elem(r, b)).coords; })
        .def("mul", [](const FiniteRing& r, const Vec& a, const Vec& b) { return r.mul(elem(r, a), elem(r, b)).coords; })
        .def("elements", [](const FiniteRing& r, std::uint64_t bound) {
            std::vector<Vec> out;
            for (const auto& e : all_elements(r, bound)) out.push_back(e.coords);
            return out;
        }, py::arg("bound") = default_enumeration_bound)
        .def("is_central", [](const FiniteRing& r, const Vec& c) { return is_central(r, elem(r, c)); })
        .def("is_idempotent", [](const FiniteRing& r, const Vec& e) { return is_idempotent(r, elem(r, e)); })
        .def("center", [](const FiniteRing& r) { return center(r); })
        .def("same_structure", &FiniteRing::same_structure)
        .def("__repr__", [](const FiniteRing& r) { return "<FiniteRing " + r.label() + ">"; });

    m.def("ring_zm", [](Residue mod) { return ring_zm(Modulus(mod)); }, py::arg("modulus"));
    m.def("ring_matrices", [](Residue mod, std::size_t n) { return ring_matrices(Modulus(mod), n); },
          py::arg("modulus"), py::arg("n"));
    m.def("ring_upper_triangular", [](Residue mod, std::size_t n) { return ring_upper_triangular(Modulus(mod), n); },
          py::arg("modulus"), py::arg("n"));
    m.def("ring_product", &ring_product);

    py::class_<Bimodule>(m, "Bimodule")
        .def_static("regular", &Bimodule::regular)
        .def_static("scalar_columns", [](Residue mod, std::size_t n) { return Bimodule::scalar_columns(Modulus(mod), n); })
        .def_static("matrix_block", [](Residue mod, std::size_t n, std::size_t p) {
            return Bimodule::matrix_block(Modulus(mod), n, p);
        })
        .def_static("zero", &Bimodule::zero)
        .def_static("make", [](const FiniteRing& l, const FiniteRing& r, std::size_t rank,
                               std::vector<std::vector<Vec>> la, std::vector<std::vector<Vec>> ra, std::string label) {
            return Bimodule::make(l, r, rank, std::move(la), std::move(ra), std::move(label));
        }, py::arg("left_ring"), py::arg("right_ring"), py::arg("rank"), py::arg("left_action"),
           py::arg("right_action"), py::arg("label") = "M")
        .def_property_readonly("rank", &Bimodule::rank)
        .def_property_readonly("label", &Bimodule::label)
        .def_property_readonly("left_ring", &Bimodule::left_ring)
        .def_property_readonly("right_ring", &Bimodule::right_ring);

    m.def("check_faithful", [](const Bimodule& b) {
        const auto f = check_faithful(b);
        const char* side = f.kind == Faithfulness::Kind::ok ? "ok"
                           : f.kind == Faithfulness::Kind::left_witness ? "left" : "right";
        return py::make_tuple(side, f.witness ? py::cast(f.witness->coords) : py::none());
    });

    py::class_<TriangularRing>(m, "TriangularRing")
        .def_readonly("ring", &TriangularRing::ring)
        .def_property_readonly("p", [](const TriangularRing& t) { return t.p.coords; })
        .def_property_readonly("q", [](const TriangularRing& t) { return t.q.coords; })
        .def_property_readonly("blocks", [](const TriangularRing& t) {
            auto b = [](const BlockRange& r) { return py::make_tuple(r.begin, r.size); };
            return py::make_tuple(b(t.r_block), b(t.m_block), b(t.s_block));
        })
        .def("peirce", [](const TriangularRing& t, const Vec& x) {
            const auto p = peirce(elem(t.ring, x), t);
            return py::make_tuple(p.pxp.coords, p.pxq.coords, p.qxq.coords);
        });

    m.def("make_triangular", &make_triangular, py::arg("r"), py::arg("m"), py::arg("s"));
    m.def("trivial_extension", [](const FiniteRing& a, std::optional<Bimodule> b) {
        return b ? trivial_extension(a, *b) : trivial_extension(a);
    }, py::arg("ring"), py::arg("bimodule") = py::none());

    py::class_<AdditiveMap>(m, "AdditiveMap")
        .def(py::init([](const FiniteRing& r, const Vec& entries) { return AdditiveMap::from_vec(r, entries); }),
             py::arg("ring"), py::arg("entries"))
        .def_static("zero", &AdditiveMap::zero)
        .def_static("identity", &AdditiveMap::identity)
        .def_property_readonly("ring", &AdditiveMap::ring)
        .def("entries", &AdditiveMap::to_vec)
        .def("__call__", [](const AdditiveMap& f, const Vec& x) { return f(elem(f.ring(), x)).coords; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self == py::self)
        .def("__repr__", [](const AdditiveMap& f) { return "<AdditiveMap " + format_map(f) + ">"; });

    m.def("left_mult", [](const FiniteRing& r, const Vec& c) { return left_mult(r, elem(r, c)); });
    m.def("right_mult", [](const FiniteRing& r, const Vec& c) { return right_mult(r, elem(r, c)); });
    m.def("inner_derivation", [](const FiniteRing& r, const Vec& w) { return inner_derivation(r, elem(r, w)); });

    m.def("is_centralizer", &is_centralizer);
    m.def("is_jordan_centralizer", &is_jordan_centralizer);
    m.def("is_derivation", &is_derivation);
    m.def("is_jordan_derivation", &is_jordan_derivation);
    m.def("is_generalized_derivation", &is_generalized_derivation);
    m.def("is_generalized_jordan_derivation", &is_generalized_jordan_derivation);
    m.def("is_jgd_via", &is_jgd_via, py::arg("tau"), py::arg("delta"));
    m.def("is_jordan_generalized_derivation", &is_jordan_generalized_derivation);

    m.def("solve", [](const std::string& kind, const FiniteRing& r, std::uint64_t bound, unsigned workers) {
        return solve(spec(kind), r, solve_opts(bound, workers));
    }, py::arg("kind"), py::arg("ring"), py::arg("bound") = default_enumeration_bound, py::arg("workers") = 1);
    m.def("solve_joint", [](const std::string& dk, const std::string& pk, const FiniteRing& r, std::uint64_t bound,
                            unsigned workers) {
        return solve_joint(spec(dk), spec(pk), r, solve_opts(bound, workers));
    }, py::arg("delta_kind"), py::arg("pair_kind"), py::arg("ring"), py::arg("bound") = default_enumeration_bound,
       py::arg("workers") = 1);
    m.def("decode_maps", &decode_maps);
    m.def("decode_joint", [](const Vec& v, const FiniteRing& r) { return decode_joint(v, r); });
    m.def("find_violation", [](const std::string& kind, const AdditiveMap& f, std::optional<AdditiveMap> delta,
                               std::uint64_t bound) -> py::object {
        SolveOptions o;
        o.enumeration_bound = bound;
        const auto v = find_violation(spec(kind), f, delta ? &*delta : nullptr, o);
        if (!v) return py::none();
        return py::make_tuple(v->x.coords, v->y.coords, v->residual.coords);
    }, py::arg("kind"), py::arg("f"), py::arg("delta") = py::none(), py::arg("bound") = default_enumeration_bound);

    m.def("centralizer_module", &centralizer_module);
    m.def("certify_centralizer", [](const AdditiveMap& phi, const TriangularRing& t) {
        const auto c = certify_centralizer(phi, t);
        return py::make_tuple(c.c.coords, c.valid());
    });
    m.def("peirce_diagnostics_centralizer", [](const AdditiveMap& phi, const TriangularRing& t) {
        return checks_list(peirce_diagnostics_centralizer(phi, t));
    });
    m.def("peirce_diagnostics_delta", [](const AdditiveMap& delta, const TriangularRing& t) {
        return checks_list(peirce_diagnostics_delta(delta, t));
    });
    m.def("decompose_tau", [](const AdditiveMap& tau, const AdditiveMap& delta, const TriangularRing& t) {
        const auto dec = decompose_tau(tau, delta, t);
        py::dict d;
        d["d"] = dec.d;
        d["phi"] = dec.phi;
        d["w"] = dec.w.coords;
        d["delta_one"] = dec.delta_one.coords;
        d["tau_one"] = dec.tau_one.coords;
        d["checks"] = checks_list(dec.checks);
        return d;
    }, py::arg("tau"), py::arg("delta"), py::arg("t"));
    m.def("verify_theorem_3_1", [](const TriangularRing& t) { return report_dict(verify_theorem_3_1(t)); });
    m.def("verify_theorem_4_1", [](const TriangularRing& t) { return report_dict(verify_theorem_4_1(t)); });
    m.def("verify_corollaries", [](const TriangularRing& t) { return report_dict(verify_corollaries(t)); });
}
