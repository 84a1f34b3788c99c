#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "c32/gl2.hpp"
#include "c32/invariants.hpp"
#include "c32/trace_word.hpp"
#include "c32/xi_pipeline.hpp"
#include "commands.hpp"

namespace py = pybind11;
using namespace c32;

namespace {

py::object to_fraction(const Rational& r)
{
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(r.numerator().get_str())), py::int_(py::str(r.denominator().get_str())));
}

py::dict decomposition_dict(const Decomposition& d)
{
    py::dict out;
    for (const auto& [p, m] : d.multiplicities()) {
        out[py::make_tuple(p.first, p.second)] = m;
    }
    return out;
}

py::dict series_dict(const TruncatedSeries& s)
{
    py::dict out;
    for (const auto& [key, c] : s.coeffs()) {
        out[py::make_tuple(key.first, key.second)] = to_fraction(c);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact computations with the invariants of two 3x3 matrices";

    py::class_<MultiPoly>(m, "Poly")
        .def(py::init<long>(), py::arg("constant") = 0)
        .def_static("parse", &MultiPoly::parse)
        .def("__str__", &MultiPoly::to_string)
        .def("__repr__", [](const MultiPoly& p) { return "Poly('" + p.to_string() + "')"; })
        .def("is_zero", &MultiPoly::is_zero)
        .def("degree", &MultiPoly::degree)
        .def("__len__", &MultiPoly::size)
        .def("diff", [](const MultiPoly& p, const std::string& var) {
            const auto v = var_by_name(var);
            if (!v) {
                throw py::value_error("unknown variable " + var);
            }
            return diff(p, *v);
        })
        .def("__pow__", [](const MultiPoly& p, unsigned e) { return pow(p, e); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self);

    m.def("necklaces", [](std::size_t k) {
        std::vector<std::string> out;
        for (const auto& w : enumerate_basis(k)) {
            out.push_back(w.letters());
        }
        return out;
    });

    m.def("trace", [](const std::string& word) { return InvariantContext().tr(word); },
          "Trace of a word in X, Y with x diagonal traceless and y generic traceless.");

    m.def(
        "relation_residual",
        [](bool generic_x) {
            const InvariantContext ctx = generic_x ? InvariantContext::generic() : InvariantContext();
            return relation_polynomial(ctx, published_xi());
        },
        py::arg("generic_x") = false);

    m.def("verify_trace_expansions", [] {
        const auto r = verify_trace_expansions(InvariantContext());
        return r.residual_xxyy.is_zero() && r.residual_xxyyxy.is_zero();
    });

    m.def("highest_weight_vectors", [](unsigned dx, unsigned dy) {
        std::vector<std::string> out;
        for (const auto& b : hwv_solve(dx, dy).basis) {
            out.push_back(b.to_string());
        }
        return out;
    });

    m.def(
        "solve_xi",
        [](bool discover) {
            const auto r = xi_pipeline(InvariantContext(), discover);
            py::dict xi;
            for (std::size_t i = 0; i < kFamilySize; ++i) {
                xi[py::str(xi_labels()[i])] = to_fraction(r.xi[i]);
            }
            return py::make_tuple(xi, r.transcript);
        },
        py::arg("discover") = false, "Returns ({label: Fraction}, transcript lines).");

    m.def("hilbert_series", [](unsigned bound) { return series_dict(c32_series(bound)); },
          py::arg("max_degree") = kDefaultSeriesBound);
    m.def("series_identity_holds", [](unsigned bound) { return verify_series_identity(bound).series_equal; },
          py::arg("max_degree") = kDefaultSeriesBound);

    m.def("decompose_trace_space", [](unsigned k) {
        return decomposition_dict(extract_multiplicities(trace_space_series(k, k)));
    });
    m.def("decompose_s", [](unsigned bound) { return decomposition_dict(extract_multiplicities(s_algebra_series(bound))); },
          py::arg("max_degree") = 12);
    m.def("lr_tensor", [](std::pair<unsigned, unsigned> p, std::pair<unsigned, unsigned> q) {
        return decomposition_dict(lr_tensor(Partition2(p.first, p.second), Partition2(q.first, q.second)));
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"c32inv"};
        for (const auto& a : args) {
            argv.push_back(a.c_str());
        }
        std::string out;
        std::string err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out, err);
    });

    py::register_exception<PipelineError>(m, "PipelineError", PyExc_RuntimeError);
}
