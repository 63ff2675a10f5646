// Python bindings for the main operations: rings and polynomials, Rees
// algebra presentations, Diff-closures, singular loci, coefficient
// algebras, lambda, and the monomial-curve probes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reesdiff/algebra_io.hpp"
#include "reesdiff/diff_closure.hpp"
#include "reesdiff/parse.hpp"
#include "reesdiff/probe.hpp"
#include "reesdiff/sing.hpp"
#include "reesdiff/transforms.hpp"

namespace py = pybind11;
using namespace reesdiff;

namespace {

FieldElem elem_from_int(const RingPtr& ring, long long v) {
    return FieldElem::from_integer(ring->field(), v);
}

PointK point_from_ints(const RingPtr& ring, const std::vector<long long>& coords) {
    if (coords.size() != ring->nvars())
        throw std::invalid_argument("point dimension mismatch");
    PointK p;
    for (auto c : coords) p.push_back(elem_from_int(ring, c));
    return p;
}

ClosureOptions options_from(const std::string& variant, std::uint32_t h,
                            const std::vector<std::size_t>& log_vars, bool prune) {
    ClosureOptions opts;
    if (variant == "absolute") {
        opts = ClosureOptions::absolute();
    } else if (variant == "relative") {
        opts = ClosureOptions::relative(h);
    } else if (variant == "log") {
        opts = ClosureOptions::logarithmic(log_vars);
    } else if (variant == "orderfree") {
        opts = ClosureOptions::order_free();
    } else {
        throw std::invalid_argument("variant must be absolute|relative|log|orderfree");
    }
    opts.prune = prune;
    return opts;
}

PieceMode mode_from(const std::string& mode) {
    if (mode == "exact") return PieceMode::Exact;
    if (mode == "saturated") return PieceMode::Saturated;
    throw std::invalid_argument("mode must be exact|saturated");
}

py::dict probe_dict(const ProbeVerdict& v) {
    py::dict d;
    d["refuted"] = v.refuted;
    d["degenerate"] = v.degenerate_count;
    if (v.witness) {
        py::dict w;
        w["trial"] = v.witness->index;
        w["a"] = v.witness->a;
        w["b"] = v.witness->b;
        w["coeffs"] = v.witness->coeffs;
        w["lambda_left"] = v.witness->lambda_left.str();
        w["lambda_right"] = v.witness->lambda_right.str();
        d["witness"] = w;
    }
    return d;
}

ReesAlgebra algebra_from(const RingPtr& ring,
                         const std::vector<std::pair<std::string, std::uint32_t>>& gens) {
    std::vector<WeightedGen> ws;
    for (const auto& [text, w] : gens) ws.push_back({parse_poly(text, ring), w});
    return ReesAlgebra(ring, std::move(ws));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rees algebras, Hasse-derivative Diff-closures, singular loci, "
              "and integral-closure probes over Q and F_p";

    py::register_exception<ParseError>(m, "PolyParseError");
    py::register_exception<AlgebraFileError>(m, "AlgebraFileError");

    py::class_<PolyRing, std::shared_ptr<PolyRing>>(m, "Ring")
        .def(py::init([](std::uint32_t characteristic, std::vector<std::string> vars) {
                 return std::make_shared<PolyRing>(FieldSpec(characteristic),
                                                   std::move(vars));
             }),
             py::arg("characteristic"), py::arg("vars"))
        .def_property_readonly("characteristic",
                               [](const PolyRing& r) { return r.field().characteristic; })
        .def_property_readonly("vars", &PolyRing::vars)
        .def("__repr__", &PolyRing::str)
        .def("__eq__", [](const PolyRing& a, const PolyRing& b) { return a == b; });

    py::class_<Poly>(m, "Poly")
        .def(py::init([](const RingPtr& ring, const std::string& text) {
                 return parse_poly(text, ring);
             }),
             py::arg("ring"), py::arg("text"))
        .def_property_readonly("ring", &Poly::ring)
        .def("is_zero", &Poly::is_zero)
        .def("total_degree", &Poly::total_degree)
        .def("order_at_origin", &Poly::order_at_origin)
        .def("hasse", [](const Poly& f, ExpVec alpha) { return hasse_derivative(f, alpha); },
             py::arg("alpha"))
        .def("log_hasse",
             [](const Poly& f, ExpVec alpha) { return log_hasse_derivative(f, alpha); },
             py::arg("alpha"))
        .def("order_at",
             [](const Poly& f, const std::vector<long long>& pt) {
                 std::int64_t o = order_at(f, point_from_ints(f.ring(), pt));
                 return o == kOrderInfinity ? py::object(py::none())
                                            : py::object(py::int_(o));
             },
             py::arg("point"))
        .def("substitute",
             [](const Poly& f, const RingPtr& target, const std::vector<Poly>& images) {
                 return substitute(f, target, images);
             },
             py::arg("target"), py::arg("images"))
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("__neg__", [](const Poly& a) { return -a; })
        .def("__pow__", [](const Poly& a, std::uint32_t e) { return a.pow(e); })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__repr__", [](const Poly& f) { return render_poly(f); });

    py::class_<ReesAlgebra>(m, "Algebra")
        .def(py::init(&algebra_from), py::arg("ring"), py::arg("gens"))
        .def_property_readonly("ring", &ReesAlgebra::ring)
        .def("gens",
             [](const ReesAlgebra& g) {
                 std::vector<std::pair<std::string, std::uint32_t>> out;
                 for (const auto& wg : g.gens())
                     out.emplace_back(render_poly(wg.g), wg.weight);
                 return out;
             })
        .def("render", [](const ReesAlgebra& g) { return render_algebra_file(g); })
        .def("saturate", [](const ReesAlgebra& g) { return saturate_weights(g); })
        .def("veronese", [](const ReesAlgebra& g, std::uint32_t m) { return veronese(g, m); },
             py::arg("m"))
        .def("graded_piece",
             [](const ReesAlgebra& g, std::uint32_t n, const std::string& mode) {
                 std::vector<std::string> out;
                 for (const auto& p : graded_piece(g, n, mode_from(mode)).gens)
                     out.push_back(render_poly(p));
                 return out;
             },
             py::arg("n"), py::arg("mode") = "exact")
        .def("piece_member",
             [](const ReesAlgebra& g, const std::string& f, std::uint32_t n,
                const std::string& mode) {
                 return piece_member(parse_poly(f, g.ring()), g, n, mode_from(mode));
             },
             py::arg("poly"), py::arg("n"), py::arg("mode") = "exact")
        .def("diff_close",
             [](const ReesAlgebra& g, const std::string& variant, std::uint32_t h,
                const std::vector<std::size_t>& log_vars, bool prune) {
                 return diff_close(g, options_from(variant, h, log_vars, prune));
             },
             py::arg("variant") = "absolute", py::arg("h") = 0,
             py::arg("log_vars") = std::vector<std::size_t>{}, py::arg("prune") = false)
        .def("is_diff_closed",
             [](const ReesAlgebra& g, const std::string& variant, std::uint32_t h,
                const std::vector<std::size_t>& log_vars) {
                 return is_diff_closed(g, options_from(variant, h, log_vars, false));
             },
             py::arg("variant") = "absolute", py::arg("h") = 0,
             py::arg("log_vars") = std::vector<std::size_t>{})
        .def("in_sing",
             [](const ReesAlgebra& g, const std::vector<long long>& pt) {
                 return in_sing(g, point_from_ints(g.ring(), pt));
             },
             py::arg("point"))
        .def("sing_points",
             [](const ReesAlgebra& g) {
                 std::vector<std::vector<std::int64_t>> out;
                 for (const auto& p : sing_points(g)) {
                     std::vector<std::int64_t> q;
                     for (const auto& c : p) q.push_back(c.residue());
                     out.push_back(std::move(q));
                 }
                 return out;
             })
        .def("lambda_value",
             [](const ReesAlgebra& g) { return lambda_invariant(g).str(); })
        .def("integral_member",
             [](const ReesAlgebra& g, std::uint64_t n, std::uint64_t m) {
                 return integral_member_1d(n, m, g);
             },
             py::arg("n"), py::arg("m"))
        .def("coefficient_algebra",
             [](const ReesAlgebra& g, std::uint32_t h, const std::string& recipe) {
                 CoeffRecipe rec;
                 if (recipe == "f1p")
                     rec = CoeffRecipe::F1Prime;
                 else if (recipe == "f1")
                     rec = CoeffRecipe::F1;
                 else
                     throw std::invalid_argument("recipe must be f1p|f1");
                 return coefficient_algebra(g, Split{h}, rec).algebra;
             },
             py::arg("h"), py::arg("recipe") = "f1p")
        .def("restrict",
             [](const ReesAlgebra& g, std::uint32_t h) {
                 return total_transform(g, restriction_map(g.ring(), h));
             },
             py::arg("h"))
        .def("curve_pullback",
             [](const ReesAlgebra& g, std::uint32_t a, std::uint32_t b,
                const std::vector<long long>& coeffs) {
                 MonomialCurve c{a, b, {}};
                 for (auto v : coeffs) c.coeffs.push_back(elem_from_int(g.ring(), v));
                 return curve_pullback(g, c);
             },
             py::arg("a"), py::arg("b"), py::arg("coeffs"))
        .def("__eq__", [](const ReesAlgebra& a, const ReesAlgebra& b) { return a == b; })
        .def("__repr__", [](const ReesAlgebra& g) { return render_algebra_file(g); });

    m.def("parse_algebra_file",
          [](const std::string& text) {
              AlgebraFile f = parse_algebra_file(text);
              py::object split = f.split ? py::object(py::int_(f.split->h))
                                         : py::object(py::none());
              return py::make_tuple(f.algebra, split);
          },
          py::arg("text"), "Parse an algebra description; returns (Algebra, split_h)");

    m.def("equal_closure_probe",
          [](const ReesAlgebra& a, const ReesAlgebra& b, std::uint32_t trials,
             std::uint64_t seed) {
              return probe_dict(equal_closure_probe(a, b, trials, seed));
          },
          py::arg("a"), py::arg("b"), py::arg("trials") = 20, py::arg("seed") = 0);

    m.def("main_theorem_check",
          [](const ReesAlgebra& g1, const ReesAlgebra& g2, const std::string& cert,
             std::uint32_t veronese_m, std::uint32_t trials, std::uint64_t seed,
             std::uint32_t bound, py::object split_h) {
              FinitePair pair{g1, g2, CertKind::Saturation, veronese_m};
              if (cert == "sat")
                  pair.cert = CertKind::Saturation;
              else if (cert == "veronese")
                  pair.cert = CertKind::Veronese;
              else if (cert == "witness")
                  pair.cert = CertKind::IntegralWitness;
              else
                  throw std::invalid_argument("cert must be sat|veronese|witness");
              std::optional<Split> split;
              if (!split_h.is_none()) split = Split{split_h.cast<std::uint32_t>()};
              MainCheckReport rep = main_theorem_check(pair, trials, seed, bound, split);
              py::dict d;
              d["consistent"] = rep.consistent();
              d["probe"] = probe_dict(rep.probe);
              d["containment_ok"] = rep.containment_ok;
              if (rep.coeff_lambda) {
                  d["coeff_lambda_left"] = rep.coeff_lambda->first.str();
                  d["coeff_lambda_right"] = rep.coeff_lambda->second.str();
              }
              return d;
          },
          py::arg("g1"), py::arg("g2"), py::arg("cert"), py::arg("veronese_m") = 0,
          py::arg("trials") = 20, py::arg("seed") = 0, py::arg("bound") = 3,
          py::arg("split_h") = py::none());
}
