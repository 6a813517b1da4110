#include "specrange/json_io.hpp"

#include <fstream>
#include <sstream>

#include "specrange/error.hpp"

namespace specrange::io {

namespace {

const ordered_json& field(const ordered_json& j, const char* name, const std::string& where) {
    if (!j.is_object()) throw InvalidArgument(where + ": expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) throw InvalidArgument(where + ": missing field '" + name + "'");
    return *it;
}

double number(const ordered_json& j, const std::string& where) {
    if (!j.is_number()) throw InvalidArgument("field '" + where + "': expected a number");
    return j.get<double>();
}

}  // namespace

ordered_json complex_to_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

Complex complex_from_json(const ordered_json& j, const std::string& where) {
    if (j.is_number()) return {number(j, where), 0.0};
    if (!j.is_array() || j.size() != 2)
        throw InvalidArgument("field '" + where + "': expected [re, im]");
    const Complex z{number(j[0], where), number(j[1], where)};
    if (!is_finite(z)) throw InvalidArgument("field '" + where + "': non-finite value");
    return z;
}

ordered_json to_json(const Matrix& t) {
    ordered_json e = ordered_json::array();
    for (const auto& z : t.entries()) e.push_back(complex_to_json(z));
    return {{"n", t.size()}, {"entries", e}};
}

Matrix matrix_from_json(const ordered_json& j) {
    const auto& nj = field(j, "n", "matrix");
    if (!nj.is_number_integer() || nj.get<long long>() < 1)
        throw InvalidArgument("field 'n': expected a positive integer");
    const auto n = nj.get<std::size_t>();
    if (n > kMaxDimension) throw InvalidArgument("field 'n': dimension exceeds " + std::to_string(kMaxDimension));
    const auto& e = field(j, "entries", "matrix");
    if (!e.is_array()) throw InvalidArgument("field 'entries': expected an array");
    if (e.size() != n * n)
        throw InvalidArgument("field 'entries': expected " + std::to_string(n * n) + " entries, got " +
                              std::to_string(e.size()));
    std::vector<Complex> v;
    v.reserve(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) v.push_back(complex_from_json(e[i], "entries[" + std::to_string(i) + "]"));
    return Matrix(n, std::move(v));
}

ordered_json to_json(const Polynomial& p) {
    ordered_json c = ordered_json::array();
    for (const auto& z : p.coeffs()) c.push_back(complex_to_json(z));
    return {{"coeffs", c}};
}

Polynomial polynomial_from_json(const ordered_json& j) {
    const auto& c = field(j, "coeffs", "polynomial");
    if (!c.is_array() || c.empty()) throw InvalidArgument("field 'coeffs': expected a nonempty array");
    std::vector<Complex> v;
    for (std::size_t i = 0; i < c.size(); ++i) v.push_back(complex_from_json(c[i], "coeffs[" + std::to_string(i) + "]"));
    return Polynomial(std::move(v));
}

ordered_json to_json(const SparseVector& x) {
    ordered_json p = ordered_json::array();
    for (const auto& [i, v] : x.pairs()) p.push_back(ordered_json::array({i, complex_to_json(v)}));
    return {{"pairs", p}};
}

SparseVector sparse_vector_from_json(const ordered_json& j) {
    const auto& p = field(j, "pairs", "vector");
    if (!p.is_array()) throw InvalidArgument("field 'pairs': expected an array");
    std::vector<std::pair<std::size_t, Complex>> v;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const std::string where = "pairs[" + std::to_string(i) + "]";
        const auto& e = p[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || e[0].get<long long>() < 1)
            throw InvalidArgument("field '" + where + "': expected [positive index, [re, im]]");
        v.emplace_back(e[0].get<std::size_t>(), complex_from_json(e[1], where));
    }
    return SparseVector(std::move(v));
}

ordered_json to_json(const ConvexRegion& r) {
    ordered_json verts = ordered_json::array();
    for (const auto& v : r.vertices) verts.push_back(complex_to_json(v));
    return {{"angles", r.support.angles},
            {"radii", r.support.radii},
            {"vertices", verts},
            {"norm", std::string(to_string(r.support.norm_kind))},
            {"method", std::string(to_string(r.support.method))}};
}

ordered_json to_json(const SupBound& b) {
    return {{"value", b.value}, {"kind", std::string(to_string(b.kind))}, {"samples", b.samples}, {"inflation", b.inflation}};
}

ordered_json to_json(const SignPolynomial& s) {
    return {{"length", s.length()},
            {"construction", std::string(to_string(s.construction))},
            {"seed", s.seed},
            {"signs", s.signs}};
}

ordered_json to_json(const PsiEstimate& e) {
    ordered_json log = ordered_json::array();
    for (const auto& [name, v] : e.family_log) log.push_back({{"family", name}, {"best_ratio", v}});
    return {{"lower_bound", e.lower_bound},
            {"witness", to_json(e.witness)},
            {"normalized_witness", to_json(e.normalized_witness)},
            {"center", complex_to_json(e.center)},
            {"scale", e.scale},
            {"numerator", e.numerator},
            {"denominator", to_json(e.denominator)},
            {"family_log", log},
            {"evaluations", e.evaluations},
            {"seed", e.seed},
            {"region", to_json(e.region)}};
}

ordered_json to_json(const ExperimentReport& r) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    ordered_json metrics = ordered_json::object();
    for (const auto& [k, v] : r.metrics) metrics[k] = v;
    return {{"name", r.name},
            {"parameters", params},
            {"measured", r.measured},
            {"reference_bound", r.reference_bound},
            {"satisfied", r.satisfied},
            {"metrics", metrics},
            {"details", {{"columns", r.details.columns}, {"rows", r.details.rows}}}};
}

ordered_json parse(const std::string& text, const std::string& what) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(what + ": malformed JSON (" + e.what() + ")");
    }
}

ordered_json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

}  // namespace specrange::io
