#pragma once

// JSON forms shared by the CLI and the Python module.
//
//   Matrix        {"n": 2, "entries": [[re, im], ...]}        row-major
//   Polynomial    {"coeffs": [[re, im], ...]}
//   SparseVector  {"pairs": [[index, [re, im]], ...]}
//   Region        {"angles", "radii", "vertices", "norm", "method"}
//
// Parse errors throw InvalidArgument naming the offending field.

#include <string>

#include "json.hpp"
#include "specrange/combinat.hpp"
#include "specrange/linalg.hpp"
#include "specrange/numrange.hpp"
#include "specrange/polytools.hpp"
#include "specrange/psi.hpp"

namespace specrange::io {

using nlohmann::ordered_json;

ordered_json complex_to_json(Complex z);
Complex complex_from_json(const ordered_json& j, const std::string& field);

ordered_json to_json(const Matrix& t);
Matrix matrix_from_json(const ordered_json& j);

ordered_json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const ordered_json& j);

ordered_json to_json(const SparseVector& x);
SparseVector sparse_vector_from_json(const ordered_json& j);

ordered_json to_json(const ConvexRegion& r);
ordered_json to_json(const SupBound& b);
ordered_json to_json(const SignPolynomial& s);
ordered_json to_json(const PsiEstimate& e);
ordered_json to_json(const ExperimentReport& r);

/// Parse text, reporting syntax errors as InvalidArgument.
ordered_json parse(const std::string& text, const std::string& what);
/// Read and parse a file.
ordered_json load_file(const std::string& path);

}  // namespace specrange::io
