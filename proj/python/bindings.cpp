#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "specrange/combinat.hpp"
#include "specrange/error.hpp"
#include "specrange/json_io.hpp"
#include "specrange/linalg.hpp"
#include "specrange/numrange.hpp"
#include "specrange/polytools.hpp"
#include "specrange/psi.hpp"

namespace py = pybind11;
using namespace specrange;

namespace {

// Nested lists (rows) or a flat row-major list of n*n numbers.
Matrix to_matrix(const py::sequence& rows) {
    const auto len = static_cast<std::size_t>(py::len(rows));
    if (len == 0) throw InvalidArgument("matrix: empty input");
    if (py::isinstance<py::sequence>(rows[0]) && !py::isinstance<py::str>(rows[0])) {
        std::vector<Complex> e;
        for (const auto& r : rows) {
            const auto row = r.cast<std::vector<Complex>>();
            if (row.size() != len) throw InvalidArgument("matrix rows must all have length " + std::to_string(len));
            e.insert(e.end(), row.begin(), row.end());
        }
        return Matrix(len, std::move(e));
    }
    const auto flat = rows.cast<std::vector<Complex>>();
    std::size_t n = 0;
    while (n * n < flat.size()) ++n;
    if (n * n != flat.size()) throw InvalidArgument("matrix: flat input length is not a square");
    return Matrix(n, flat);
}

std::vector<std::vector<Complex>> to_rows(const Matrix& t) {
    std::vector<std::vector<Complex>> out(t.size(), std::vector<Complex>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) out[i][j] = t(i, j);
    return out;
}

py::object to_py(const io::ordered_json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

NormKind kind_of(const std::string& s) { return parse_norm_kind(s); }

SparseVector to_sparse(const std::vector<std::pair<std::size_t, Complex>>& pairs) { return SparseVector(pairs); }

}  // namespace

PYBIND11_MODULE(_specrange, m) {
    m.doc() = "Numerical ranges and spectral constants of matrices in l1, l2 and linf";
    m.attr("__version__") = "0.1.0";

    // Translators run newest first, so the base class goes in first.
    py::register_exception<Error>(m, "SpecrangeError", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

    m.def("jordan", [](std::size_t n) { return to_rows(Matrix::jordan(n)); }, py::arg("n"));
    m.def(
        "induced_norm", [](const py::sequence& t, const std::string& norm) { return induced_norm(to_matrix(t), kind_of(norm)); },
        py::arg("matrix"), py::arg("norm") = "l1");
    m.def(
        "eigenvalues", [](const py::sequence& t) { return eigenvalues(to_matrix(t)).eigenvalues; }, py::arg("matrix"));
    m.def(
        "support_radius",
        [](const py::sequence& t, double theta, const std::string& norm, const std::string& method, double tol) {
            return support_radius(to_matrix(t), theta, kind_of(norm), tol, parse_support_method(method));
        },
        py::arg("matrix"), py::arg("theta"), py::arg("norm") = "l1", py::arg("method") = "closed_form",
        py::arg("tol") = 1e-7);
    m.def(
        "range_polygon",
        [](const py::sequence& t, const std::string& norm, std::size_t grid, const std::string& method) {
            return to_py(io::to_json(range_polygon(to_matrix(t), kind_of(norm), grid, parse_support_method(method))));
        },
        py::arg("matrix"), py::arg("norm") = "l1", py::arg("grid") = kDefaultGrid, py::arg("method") = "closed_form");
    m.def(
        "gershgorin_hull_l1",
        [](const py::sequence& t, std::size_t grid) { return to_py(io::to_json(gershgorin_hull_l1(to_matrix(t), grid))); },
        py::arg("matrix"), py::arg("grid") = kDefaultGrid);
    m.def(
        "numerical_radius",
        [](const py::sequence& t, const std::string& norm, std::size_t grid) {
            return numerical_radius(to_matrix(t), kind_of(norm), grid);
        },
        py::arg("matrix"), py::arg("norm") = "l1", py::arg("grid") = kDefaultGrid);
    m.def(
        "psi_lower_bound",
        [](const py::sequence& t, const std::string& norm, int degree, int budget, std::uint64_t seed) {
            return to_py(io::to_json(psi_lower_bound(to_matrix(t), kind_of(norm), degree, budget, seed)));
        },
        py::arg("matrix"), py::arg("norm") = "l1", py::arg("degree") = 12, py::arg("budget") = 500,
        py::arg("seed") = 0);
    m.def(
        "rudin_shapiro",
        [](int k) {
            auto [p, q] = rudin_shapiro(k);
            return std::make_pair(p.signs, q.signs);
        },
        py::arg("k"));
    m.def(
        "sup_on_circle",
        [](const std::vector<Complex>& coeffs, double r, std::size_t samples) {
            const auto s = sup_on_circle(Polynomial(coeffs), r, samples);
            return std::make_pair(s.sampled.value, s.certified.value);
        },
        py::arg("coeffs"), py::arg("r") = 1.0, py::arg("samples") = 4096);
    m.def("schreier_norm", [](const std::vector<std::pair<std::size_t, Complex>>& pairs) {
        return schreier_norm(to_sparse(pairs));
    }, py::arg("pairs"));
    m.def(
        "cut_shift_experiment",
        [](std::size_t n, std::uint64_t seed) { return to_py(io::to_json(cut_shift_experiment(n, seed))); },
        py::arg("n"), py::arg("seed") = 0);
    m.def(
        "jordan_experiment",
        [](std::size_t n, const std::string& norm, std::uint64_t seed) {
            return to_py(io::to_json(jordan_experiment(n, kind_of(norm), seed)));
        },
        py::arg("n"), py::arg("norm") = "l1", py::arg("seed") = 0);
    m.def("cos_example", [] { return to_py(io::to_json(cos_example())); });
}
