// specrange: command-line front end.
//
// Exit codes: 0 success, 1 a verification report is unsatisfied, 2 input
// error, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "specrange/combinat.hpp"
#include "specrange/error.hpp"
#include "specrange/json_io.hpp"
#include "specrange/numrange.hpp"
#include "specrange/parallel.hpp"
#include "specrange/polytools.hpp"
#include "specrange/psi.hpp"
#include "specrange/rng.hpp"

using namespace specrange;
using io::ordered_json;

namespace {

struct Options {
    std::string matrix, vector, poly, norm = "l1", suite = "all", svg, csv, json, method = "closed_form";
    std::string experiment, schreier_vector;
    int grid = static_cast<int>(kDefaultGrid);
    int degree = 24;
    int budget = 2000;
    int k = 3;
    std::uint64_t seed = 0;
    std::size_t samples = 100;
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write '" + path + "'");
    out << text;
}

void emit(const Options& o, const ordered_json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (o.json.empty())
        std::cout << text;
    else
        write_text(o.json, text);
}

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << std::fixed << v;
    return os.str();
}

std::string region_svg(const ConvexRegion& r, const std::vector<Complex>& eig) {
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool first = true;
    auto grow = [&](Complex z) {
        if (first) {
            lo_x = hi_x = z.real();
            lo_y = hi_y = z.imag();
            first = false;
        }
        lo_x = std::min(lo_x, z.real());
        hi_x = std::max(hi_x, z.real());
        lo_y = std::min(lo_y, z.imag());
        hi_y = std::max(hi_y, z.imag());
    };
    for (const auto& v : r.vertices) grow(v);
    for (const auto& v : eig) grow(v);
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-6});
    const double pad = 0.1 * span;
    const double size = 480.0;
    const double scale = size / (span + 2 * pad);
    auto px = [&](Complex z) { return (z.real() - lo_x + pad) * scale; };
    auto py = [&](Complex z) { return (hi_y - z.imag() + pad) * scale; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num((hi_x - lo_x + 2 * pad) * scale)
       << "\" height=\"" << num((hi_y - lo_y + 2 * pad) * scale) << "\">\n";
    os << "  <polygon fill=\"#cfe0f3\" stroke=\"#1f4e79\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < r.vertices.size(); ++i)
        os << (i ? " " : "") << num(px(r.vertices[i])) << "," << num(py(r.vertices[i]));
    os << "\"/>\n";
    for (const auto& e : eig)
        os << "  <circle cx=\"" << num(px(e)) << "\" cy=\"" << num(py(e)) << "\" r=\"3\" fill=\"#c00000\"/>\n";
    os << "</svg>\n";
    return os.str();
}

ordered_json base_config(const std::string& command, const Options& o) {
    return {{"command", command}, {"seed", o.seed}, {"grid", o.grid}};
}

int cmd_range(const Options& o) {
    const Matrix t = io::matrix_from_json(io::load_file(o.matrix));
    const NormKind kind = parse_norm_kind(o.norm);
    const SupportMethod method = parse_support_method(o.method);
    if (o.grid < 8) throw InvalidArgument("field 'grid': must be at least 8");
    const auto region = range_polygon(t, kind, static_cast<std::size_t>(o.grid), method);
    const auto sigma = eigenvalues(t);
    auto cfg = base_config("range", o);
    cfg["matrix"] = o.matrix;
    cfg["norm"] = std::string(to_string(kind));
    cfg["method"] = std::string(to_string(method));
    ordered_json eig = ordered_json::array();
    for (const auto& z : sigma.eigenvalues) eig.push_back(io::complex_to_json(z));
    ordered_json doc{{"config", cfg},
                     {"region", io::to_json(region)},
                     {"eigenvalues", eig},
                     {"eigen_residual", sigma.residual},
                     {"numerical_radius", numerical_radius(t, kind, static_cast<std::size_t>(o.grid))}};
    if (!o.svg.empty()) write_text(o.svg, region_svg(region, sigma.eigenvalues));
    if (!o.csv.empty()) {
        std::ostringstream os;
        os << "theta,radius\n" << std::setprecision(17);
        for (std::size_t i = 0; i < region.support.angles.size(); ++i)
            os << region.support.angles[i] << "," << region.support.radii[i] << "\n";
        write_text(o.csv, os.str());
    }
    emit(o, doc);
    return 0;
}

int cmd_radius(const Options& o) {
    const Matrix t = io::matrix_from_json(io::load_file(o.matrix));
    const NormKind kind = parse_norm_kind(o.norm);
    if (o.grid < 8) throw InvalidArgument("field 'grid': must be at least 8");
    auto cfg = base_config("radius", o);
    cfg["matrix"] = o.matrix;
    cfg["norm"] = std::string(to_string(kind));
    emit(o, {{"config", cfg},
             {"numerical_radius", numerical_radius(t, kind, static_cast<std::size_t>(o.grid))},
             {"operator_norm", induced_norm(t, kind)}});
    return 0;
}

int cmd_psi(const Options& o) {
    const Matrix t = io::matrix_from_json(io::load_file(o.matrix));
    const NormKind kind = parse_norm_kind(o.norm);
    const auto est = psi_lower_bound(t, kind, o.degree, o.budget, o.seed);
    auto cfg = base_config("psi", o);
    cfg["matrix"] = o.matrix;
    cfg["norm"] = std::string(to_string(kind));
    cfg["degree"] = o.degree;
    cfg["budget"] = o.budget;
    ordered_json doc{{"config", cfg}, {"estimate", io::to_json(est)}};
    if (!o.poly.empty()) {
        const Polynomial p = io::polynomial_from_json(io::load_file(o.poly));
        cfg["poly"] = o.poly;
        doc["config"] = cfg;
        doc["poly_ratio"] = psi_ratio(t, p, kind, est.region);
    }
    emit(o, doc);
    return 0;
}

int cmd_shapiro(const Options& o) {
    const auto [p, q] = rudin_shapiro(o.k);
    auto cfg = base_config("shapiro", o);
    cfg["k"] = o.k;
    const std::size_t m = std::max<std::size_t>(4096, 64 * p.length());
    const double sp = sup_on_circle(p.polynomial(), 1.0, m).sampled.value;
    const double sq = sup_on_circle(q.polynomial(), 1.0, m).sampled.value;
    emit(o, {{"config", cfg},
             {"P", io::to_json(p)},
             {"Q", io::to_json(q)},
             {"sup_P", sp},
             {"sup_Q", sq},
             {"sqrt2_sqrt_length", std::sqrt(2.0 * static_cast<double>(p.length()))}});
    if (!o.csv.empty()) {
        std::ostringstream os;
        os << "k,P,Q\n";
        for (std::size_t i = 0; i < p.length(); ++i) os << i << "," << p.signs[i] << "," << q.signs[i] << "\n";
        write_text(o.csv, os.str());
    }
    return 0;
}

void print_table(const std::vector<ExperimentReport>& reports) {
    std::ostringstream os;
    os << std::left << std::setw(20) << "report" << std::setw(34) << "parameters" << std::right << std::setw(16)
       << "measured" << std::setw(16) << "reference" << "  status\n";
    for (const auto& r : reports) {
        std::string params;
        for (const auto& [k, v] : r.parameters) {
            if (k == "seed") continue;
            if (!params.empty()) params += " ";
            params += k + "=" + v;
        }
        if (params.size() > 32) params = params.substr(0, 31) + "~";
        os << std::left << std::setw(20) << r.name << std::setw(34) << params << std::right << std::setw(16)
           << std::setprecision(8) << r.measured << std::setw(16) << r.reference_bound << "  "
           << (r.satisfied ? "ok" : "FAIL") << "\n";
    }
    std::cerr << os.str();
}

std::vector<ExperimentReport> run_suite(const std::string& suite, const Options& o) {
    std::vector<ExperimentReport> out;
    const bool all = suite == "all";
    const auto want = [&](const char* name) { return all || suite == name; };
    const std::vector<std::string> known{"all", "jordan", "2x2", "cos", "hull", "bohr", "eps",
                                         "direct", "affine", "duality", "schreier"};
    if (std::find(known.begin(), known.end(), suite) == known.end())
        throw InvalidArgument("field 'suite': unknown suite '" + suite + "'");

    if (want("jordan"))
        for (NormKind kind : {NormKind::L1, NormKind::L2, NormKind::Linf})
            for (std::size_t n : {2, 4, 8, 16, 32, 64}) out.push_back(jordan_experiment(n, kind, o.seed));
    if (want("2x2")) out.push_back(two_by_two_l1_suite(o.samples, o.seed, true));
    if (want("cos")) out.push_back(cos_example());
    if (want("hull")) out.push_back(gershgorin_experiment(200, o.seed));
    SplitMix64 rng(derive_seed(o.seed, 0xB0));
    const Matrix sample = random_matrix(4, rng);
    if (want("hull") || want("eps"))
        for (NormKind kind : {NormKind::L1, NormKind::L2, NormKind::Linf})
            for (double eps : {0.25, 0.5, 1.0, 2.0}) out.push_back(epsilon_hull_check(sample, kind, eps, 100, o.seed));
    if (want("bohr"))
        for (NormKind kind : {NormKind::L1, NormKind::L2, NormKind::Linf})
            out.push_back(bohr_check(sample, kind, 100, o.seed));
    if (want("direct"))
        for (NormKind kind : {NormKind::L1, NormKind::Linf}) out.push_back(direct_sum_example(kind));
    if (want("affine")) {
        const Polynomial p = random_polynomial(6, rng);
        for (NormKind kind : {NormKind::L1, NormKind::L2, NormKind::Linf})
            out.push_back(affine_invariance_check(sample, kind, std::polar(1.5, 1.0), {0.3, -0.7}, p));
    }
    if (want("duality")) out.push_back(duality_experiment(20, o.seed));
    if (want("schreier"))
        for (std::size_t n : {3, 7, 15, 31}) out.push_back(cut_shift_experiment(n, o.seed));
    return out;
}

int cmd_verify(const Options& o) {
    const auto reports = run_suite(o.suite, o);
    auto cfg = base_config("verify", o);
    cfg["suite"] = o.suite;
    cfg["samples"] = o.samples;
    std::string lines = ordered_json{{"config", cfg}}.dump() + "\n";
    bool ok = true;
    for (const auto& r : reports) {
        lines += io::to_json(r).dump() + "\n";
        ok = ok && r.satisfied;
    }
    if (o.json.empty())
        std::cout << lines;
    else
        write_text(o.json, lines);
    if (!o.csv.empty()) {
        std::ostringstream os;
        os << std::setprecision(17) << "report,parameters,metric,value\n";
        for (const auto& r : reports) {
            std::string params;
            for (const auto& [k, v] : r.parameters) params += (params.empty() ? "" : ";") + k + "=" + v;
            for (const auto& [k, v] : r.metrics) os << r.name << ",\"" << params << "\"," << k << "," << v << "\n";
        }
        write_text(o.csv, os.str());
    }
    print_table(reports);
    return ok ? 0 : 1;
}

int cmd_schreier(const Options& o) {
    auto cfg = base_config("schreier", o);
    const std::string vec = !o.vector.empty() ? o.vector : o.schreier_vector;
    if (!o.experiment.empty()) {
        const auto eq = o.experiment.find('=');
        if (eq == std::string::npos || o.experiment.substr(0, eq) != "n")
            throw InvalidArgument("field 'experiment': expected n=<integer>");
        std::size_t n = 0;
        try {
            n = std::stoul(o.experiment.substr(eq + 1));
        } catch (const std::exception&) {
            throw InvalidArgument("field 'experiment': expected n=<integer>");
        }
        cfg["experiment"] = o.experiment;
        const auto rep = cut_shift_experiment(n, o.seed);
        emit(o, {{"config", cfg}, {"report", io::to_json(rep)}});
        return rep.satisfied ? 0 : 1;
    }
    if (vec.empty()) throw InvalidArgument("schreier: pass --norm <vector.json> or --experiment n=<k>");
    const SparseVector x = io::sparse_vector_from_json(io::load_file(vec));
    cfg["vector"] = vec;
    emit(o, {{"config", cfg},
             {"family", "schreier"},
             {"norm", family_norm(x, SpreadingFamily::schreier_family())},
             {"l1_norm", l1_norm(x)}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Algebraic numerical ranges and spectral-constant experiments"};
    app.require_subcommand(1);
    Options o;

    auto* range = app.add_subcommand("range", "Numerical range polygon as JSON, with optional SVG/CSV");
    range->add_option("--matrix", o.matrix, "Matrix JSON file")->required();
    range->add_option("--norm", o.norm, "l1, l2 or linf");
    range->add_option("--grid", o.grid, "Number of support angles");
    range->add_option("--method", o.method, "closed_form or limit_scheme");
    range->add_option("--svg", o.svg, "Write the polygon and eigenvalues as SVG");
    range->add_option("--csv", o.csv, "Write the support function as CSV");
    range->add_option("--json", o.json, "Write JSON here instead of stdout");

    auto* radius = app.add_subcommand("radius", "Numerical radius");
    radius->add_option("--matrix", o.matrix, "Matrix JSON file")->required();
    radius->add_option("--norm", o.norm, "l1, l2 or linf");
    radius->add_option("--grid", o.grid, "Number of support angles");
    radius->add_option("--json", o.json, "Write JSON here instead of stdout");

    auto* psi = app.add_subcommand("psi", "Searched lower bound for the spectral constant");
    psi->add_option("--matrix", o.matrix, "Matrix JSON file")->required();
    psi->add_option("--norm", o.norm, "l1, l2 or linf");
    psi->add_option("--degree", o.degree, "Maximum witness degree");
    psi->add_option("--budget", o.budget, "Refinement evaluations");
    psi->add_option("--seed", o.seed, "Seed");
    psi->add_option("--poly", o.poly, "Also report the ratio of this polynomial");
    psi->add_option("--json", o.json, "Write JSON here instead of stdout");

    auto* verify = app.add_subcommand("verify", "Run experiment suites; JSON lines to stdout, table to stderr");
    verify->add_option("--suite", o.suite, "all, jordan, 2x2, cos, hull, bohr, eps, direct, affine, duality, schreier");
    verify->add_option("--seed", o.seed, "Seed");
    verify->add_option("--samples", o.samples, "Samples per family in the 2x2 suite");
    verify->add_option("--json", o.json, "Write JSON lines here instead of stdout");
    verify->add_option("--csv", o.csv, "Write all report metrics as CSV");

    auto* shapiro = app.add_subcommand("shapiro", "Rudin-Shapiro pair of length 2^k");
    shapiro->add_option("--k", o.k, "0 <= k <= 20");
    shapiro->add_option("--csv", o.csv, "Write coefficients as CSV");
    shapiro->add_option("--json", o.json, "Write JSON here instead of stdout");

    auto* schreier = app.add_subcommand("schreier", "Schreier norm of a vector, or the cut-shift experiment");
    schreier->add_option("--norm", o.schreier_vector, "Sparse vector JSON file");
    schreier->add_option("--vector", o.vector, "Sparse vector JSON file");
    schreier->add_option("--experiment", o.experiment, "n=<integer>");
    schreier->add_option("--seed", o.seed, "Seed");
    schreier->add_option("--json", o.json, "Write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*range) return cmd_range(o);
        if (*radius) return cmd_radius(o);
        if (*psi) return cmd_psi(o);
        if (*verify) return cmd_verify(o);
        if (*shapiro) return cmd_shapiro(o);
        if (*schreier) return cmd_schreier(o);
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
