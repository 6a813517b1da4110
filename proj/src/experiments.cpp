#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "specrange/error.hpp"
#include "specrange/parallel.hpp"
#include "specrange/psi.hpp"
#include "specrange/rng.hpp"

namespace specrange {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

std::string fmt(Complex z) { return "(" + fmt(z.real()) + "," + fmt(z.imag()) + ")"; }

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
    int k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

// Unit-circle sampling dense enough for the certified inflation to stay small.
std::size_t circle_grid(std::size_t degree) { return std::max<std::size_t>(4096, 64 * (degree + 1)); }

double circle_sup(const Polynomial& p, double r) {
    return sup_on_circle(p, r, circle_grid(p.degree())).sampled.value;
}

double circle_sup_certified(const Polynomial& p, double r) {
    return sup_on_circle(p, r, circle_grid(p.degree())).certified.value;
}

}  // namespace

double ExperimentReport::metric(const std::string& key) const {
    for (const auto& [k, v] : metrics)
        if (k == key) return v;
    throw InvalidArgument("report '" + name + "' has no metric '" + key + "'");
}

Matrix random_matrix(std::size_t n, SplitMix64& rng) {
    std::vector<Complex> e(n * n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& z : e) z = scale * rng.complex_gaussian();
    return Matrix(n, std::move(e));
}

Polynomial random_polynomial(std::size_t degree, SplitMix64& rng) {
    std::vector<Complex> c(degree + 1);
    for (auto& z : c) z = rng.complex_gaussian();
    return Polynomial(std::move(c));
}

Matrix shift_compression(std::size_t n, ShiftDirection dir) {
    if (n == 0) throw InvalidArgument("shift_compression: n must be positive");
    const Matrix j = Matrix::jordan(n);
    return dir == ShiftDirection::left ? j : transpose(j);
}

SignPolynomial flat_sign_polynomial(std::size_t length, std::uint64_t seed, int draws) {
    if (length == 0) throw InvalidArgument("flat_sign_polynomial: length must be positive");
    if (is_power_of_two(length)) return rudin_shapiro(log2_exact(length)).first;
    SignPolynomial best;
    double best_sup = std::numeric_limits<double>::infinity();
    for (int i = 0; i < std::max(1, draws); ++i) {
        auto s = random_signs(length, derive_seed(seed, static_cast<std::uint64_t>(i)));
        const double sup = circle_sup(s.polynomial(), 1.0);
        if (sup < best_sup) {
            best_sup = sup;
            best = std::move(s);
        }
    }
    return best;
}

ExperimentReport jordan_experiment(std::size_t n, NormKind kind, std::uint64_t seed) {
    if (n < 2) throw InvalidArgument("jordan_experiment: n must be at least 2");
    ExperimentReport rep;
    rep.name = "jordan";
    rep.parameters = {{"n", std::to_string(n)}, {"norm", std::string(to_string(kind))}, {"seed", std::to_string(seed)}};

    const auto f = flat_sign_polynomial(n, seed);
    const Polynomial p = f.polynomial();
    const Matrix j = Matrix::jordan(n);
    const double numer = induced_norm(poly_apply(p, j), kind);
    const double sup = circle_sup(p, 1.0);
    const double ratio = numer / sup;
    const double e = kind == NormKind::L2 ? 0.5 : 1.0;
    const double expected = std::pow(static_cast<double>(n), e) / sup;
    const double reference = std::pow(static_cast<double>(n), e - 0.5) / std::sqrt(6.0);

    rep.measured = ratio;
    rep.reference_bound = reference;
    bool ok = ratio >= expected - 1e-9;
    rep.details.columns = {"quantity", "value"};
    rep.details.rows = {{"construction", std::string(to_string(f.construction))},
                        {"norm_f(J_n)", fmt(numer)},
                        {"sup_circle", fmt(sup)},
                        {"ratio", fmt(ratio)},
                        {"n^e/sup", fmt(expected)},
                        {"reference_bound", fmt(reference)}};
    rep.metrics = {{"ratio", ratio}, {"numerator", numer}, {"sup", sup}, {"expected", expected}};

    if (kind == NormKind::L2) {
        constexpr double kCrouzeix = 1.0 + std::numbers::sqrt2;
        const auto region = numerical_range(j, NormKind::L2, kDefaultGrid);
        const double region_ratio = psi_ratio(j, p, NormKind::L2, region);
        const auto est = psi_lower_bound(j, NormKind::L2, static_cast<int>(std::min<std::size_t>(n - 1, 12)), 300, seed);
        ok = ok && region_ratio <= kCrouzeix + 1e-6 && est.lower_bound <= kCrouzeix + 1e-6;
        rep.details.rows.push_back({"ratio_vs_V(J_n)", fmt(region_ratio)});
        rep.details.rows.push_back({"searched_lower_bound", fmt(est.lower_bound)});
        rep.details.rows.push_back({"crouzeix_bound", fmt(kCrouzeix)});
        rep.metrics.emplace_back("region_ratio", region_ratio);
        rep.metrics.emplace_back("searched", est.lower_bound);
    }
    rep.satisfied = ok;
    return rep;
}

ExperimentReport direct_sum_example(NormKind p_kind, int degree, std::size_t m) {
    if (degree < 1) throw InvalidArgument("direct_sum_example: degree must be at least 1");
    if (m < 2) throw InvalidArgument("direct_sum_example: m must be at least 2");
    ExperimentReport rep;
    rep.name = "direct_sum";
    rep.parameters = {{"norm", std::string(to_string(p_kind))}, {"degree", std::to_string(degree)}, {"m", std::to_string(m)}};
    const double k23 = 2.0 * std::sqrt(3.0) / 3.0;
    const Matrix e{{0.0, 1.0}, {0.0, 0.0}};
    const auto half_shift = [](std::size_t size) { return 0.5 * Matrix::jordan(size); };

    // The searched set: z, monomials, and sign polynomials up to the degree.
    std::vector<std::pair<std::string, Polynomial>> polys;
    polys.emplace_back("z", Polynomial{0.0, 1.0});
    for (int k = 2; k <= degree; k *= 2) polys.emplace_back("z^" + std::to_string(k), Polynomial::monomial(k));
    for (int k = 1; (1 << k) <= degree + 1 && k <= 20; ++k) {
        polys.emplace_back("rs_P" + std::to_string(k), rudin_shapiro(k).first.polynomial());
        polys.emplace_back("rs_Q" + std::to_string(k), rudin_shapiro(k).second.polynomial());
    }

    const Matrix hj = half_shift(m);
    double worst = 0.0;
    rep.details.columns = {"f", "norm_f(E)", "norm_f(J/2)", "sup_disk", "ratio"};
    for (const auto& [name, f] : polys) {
        const double a = induced_norm(poly_apply(f, e), NormKind::L2);
        const double b = induced_norm(poly_apply(f, hj), p_kind);
        const double sup = circle_sup_certified(f, 1.0);
        const double r = std::max(a, b) / sup;
        worst = std::max(worst, r);
        rep.details.rows.push_back({name, fmt(a), fmt(b), fmt(sup), fmt(r)});
    }
    bool ok = worst <= k23 * (1.0 + 1e-9);

    // Growth against the half disk: f(2z) with f Rudin-Shapiro of length <= size.
    double prev = 0.0;
    bool monotone = true;
    for (std::size_t size : {std::size_t{8}, std::size_t{16}, std::size_t{32}, std::size_t{64}}) {
        const Matrix hs = half_shift(size);
        double best = 0.0;
        for (int k = 1; (std::size_t{1} << k) <= size && (1 << k) <= degree + 1; ++k) {
            const Polynomial g = rudin_shapiro(k).first.polynomial().compose_affine(2.0, 0.0);
            const double r = induced_norm(poly_apply(g, hs), p_kind) / circle_sup(g, 0.5);
            best = std::max(best, r);
        }
        monotone = monotone && best > prev;
        prev = best;
        rep.details.rows.push_back({"growth_m=" + std::to_string(size), "", "", "", fmt(best)});
        rep.metrics.emplace_back("growth_" + std::to_string(size), best);
    }
    ok = ok && monotone;
    rep.measured = worst;
    rep.reference_bound = k23;
    rep.satisfied = ok;
    rep.metrics.insert(rep.metrics.begin(), {"worst_polynomially_bounded_ratio", worst});
    return rep;
}

namespace {

struct Draw {
    Matrix t;
    double condition = 0.0;
};

// S J_2 S^{-1} or S diag S^{-1} with det S = 1 and ||S||_1 ||S^{-1}||_1 <= 1e3,
// then a random shift and scale.
Draw draw_two_by_two(bool defective, SplitMix64& rng) {
    for (;;) {
        Matrix s{{rng.complex_gaussian(), rng.complex_gaussian()}, {rng.complex_gaussian(), rng.complex_gaussian()}};
        const Complex det = s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0);
        if (std::abs(det) < 1e-8) continue;
        s *= 1.0 / std::sqrt(det);
        Matrix si;
        try {
            si = inverse(s);
        } catch (const SingularMatrixError&) {
            continue;
        }
        const double cond = induced_norm(s, NormKind::L1) * induced_norm(si, NormKind::L1);
        const Complex shift = rng.complex_gaussian();
        const Complex scale = rng.complex_gaussian();
        Matrix core(2);
        if (defective) {
            core(0, 1) = 1.0;
        } else {
            core(0, 0) = rng.complex_gaussian();
            core(1, 1) = rng.complex_gaussian();
        }
        if (cond > 1e3) continue;
        Matrix t = scale * (s * core * si);
        t.add_identity(shift);
        return {std::move(t), cond};
    }
}

}  // namespace

ExperimentReport two_by_two_l1_suite(std::size_t samples, std::uint64_t seed, bool inject_cos) {
    if (samples < 1) throw InvalidArgument("two_by_two_l1_suite: samples must be positive");
    ExperimentReport rep;
    rep.name = "two_by_two_l1";
    rep.parameters = {{"samples", std::to_string(samples)}, {"seed", std::to_string(seed)},
                      {"degree", "24"}, {"budget", "2000"}, {"inject_cos", inject_cos ? "true" : "false"}};
    constexpr double kDefective = 2.0 + std::numbers::sqrt2;
    constexpr double kGeneral = 13.0;

    std::vector<Draw> draws;
    draws.reserve(2 * samples);
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) draws.push_back(draw_two_by_two(true, rng));
    for (std::size_t i = 0; i < samples; ++i) draws.push_back(draw_two_by_two(false, rng));

    std::vector<double> est(draws.size());
    parallel_for(draws.size(), [&](std::size_t i) {
        est[i] = psi_lower_bound(draws[i].t, NormKind::L1, 24, 2000, derive_seed(seed, i)).lower_bound;
    });

    double max_def = 0.0, max_diag = 0.0;
    std::size_t viol_def = 0, viol_all = 0;
    for (std::size_t i = 0; i < est.size(); ++i) {
        const bool defective = i < samples;
        if (defective) {
            max_def = std::max(max_def, est[i]);
            if (est[i] > kDefective + 1e-6) ++viol_def;
        } else {
            max_diag = std::max(max_diag, est[i]);
        }
        if (est[i] > kGeneral + 1e-6) ++viol_all;
    }
    double overall = std::max(max_def, max_diag);
    bool ok = viol_def == 0 && viol_all == 0;

    rep.details.columns = {"family", "count", "max_estimate", "bound", "violations"};
    rep.details.rows.push_back({"defective", std::to_string(samples), fmt(max_def), fmt(kDefective), std::to_string(viol_def)});
    rep.details.rows.push_back({"diagonalizable", std::to_string(samples), fmt(max_diag), fmt(kGeneral),
                                std::to_string(viol_all)});
    rep.metrics = {{"max_defective", max_def}, {"max_diagonalizable", max_diag}};
    if (inject_cos) {
        const Matrix t{{2.0, 1.0}, {0.0, 0.0}};
        const double c = psi_lower_bound(t, NormKind::L1, 24, 2000, seed).lower_bound;
        overall = std::max(overall, c);
        ok = ok && c <= kGeneral + 1e-6 && overall >= 1.1;
        rep.details.rows.push_back({"injected [[2,1],[0,0]]", "1", fmt(c), fmt(kGeneral), c > kGeneral + 1e-6 ? "1" : "0"});
        rep.metrics.emplace_back("injected", c);
    }
    rep.metrics.emplace_back("max_estimate", overall);
    rep.measured = overall;
    rep.reference_bound = kGeneral;
    rep.satisfied = ok;
    return rep;
}

ExperimentReport cos_example() {
    ExperimentReport rep;
    rep.name = "cos";
    rep.parameters = {{"matrix", "[[2,1],[0,0]]"}, {"norm", "l1"}, {"taylor_degree", "24"}, {"taylor_radius", "3"}};
    const Matrix t{{2.0, 1.0}, {0.0, 0.0}};
    // For a matrix with eigenvalues 0 and 2, f(T) = (f(2) - f(0)) / 2 T + f(0) I.
    Matrix ft = ((std::cos(2.0) - 1.0) / 2.0) * t;
    ft.add_identity(1.0);
    const double numer = induced_norm(ft, NormKind::L1);
    const auto region = gershgorin_hull_l1(t, kDefaultGrid);
    const auto tc = taylor_cos(24, 3.0);
    const auto sup = sup_on_region(tc.poly, region);
    const double bound = sup.sampled.value + tc.remainder;
    const double ratio = numer / bound;
    const double cosh1 = std::sqrt(1.0 + std::sinh(1.0) * std::sinh(1.0));
    rep.measured = ratio;
    rep.reference_bound = 1.1;
    rep.satisfied = numer > 1.708 && bound <= 1.55 && ratio > 1.1;
    rep.details.columns = {"quantity", "value", "threshold"};
    rep.details.rows = {{"norm_cos(T)_1", fmt(numer), "> 1.708"},
                        {"sup_V(T)_|cos|", fmt(bound), "<= 1.55"},
                        {"sqrt(1+sinh(1)^2)", fmt(cosh1), ""},
                        {"ratio", fmt(ratio), "> 1.1"}};
    rep.metrics = {{"numerator", numer},
                   {"sup_bound", bound},
                   {"sup_certified", sup.certified.value + tc.remainder},
                   {"taylor_remainder", tc.remainder},
                   {"ratio", ratio}};
    return rep;
}

ExperimentReport epsilon_hull_check(const Matrix& t, NormKind kind, double eps, std::size_t trials,
                                    std::uint64_t seed) {
    if (!(eps > 0.0)) throw InvalidArgument("epsilon_hull_check: eps must be positive");
    ExperimentReport rep;
    rep.name = "epsilon_hull";
    rep.parameters = {{"n", std::to_string(t.size())}, {"norm", std::string(to_string(kind))}, {"eps", fmt(eps)},
                      {"trials", std::to_string(trials)}, {"seed", std::to_string(seed)}};
    const auto v = numerical_range(t, kind, kDefaultGrid);
    const double d = region_diameter(v);
    const auto hull = epsilon_hull(v, eps * d);
    const double norm_t = induced_norm(t, kind);
    const double c1 = 1.0 + 1.0 / (2.0 * eps);
    const double c2 = (1.0 + eps) / std::sqrt(eps * (2.0 + eps));
    SplitMix64 rng(seed);
    double worst1 = 0.0, worst2 = 0.0;
    std::size_t fails = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const auto deg = 1 + rng.below(16);
        const Polynomial p = random_polynomial(deg, rng);
        const double lhs = induced_norm(poly_apply(p, t), kind);
        const double s1 = sup_on_region(p, hull).certified.value;
        const double s2 = norm_t > 0.0 ? circle_sup_certified(p, (1.0 + eps) * norm_t) : std::abs(p(0.0));
        const double r1 = lhs / (c1 * s1);
        const double r2 = lhs / (c2 * s2);
        worst1 = std::max(worst1, r1);
        worst2 = std::max(worst2, r2);
        if (r1 > 1.0 + 1e-6 || r2 > 1.0 + 1e-6) ++fails;
    }
    rep.measured = std::max(worst1, worst2);
    rep.reference_bound = 1.0;
    rep.satisfied = fails == 0;
    rep.details.columns = {"inequality", "constant", "worst_lhs/rhs"};
    rep.details.rows = {{"hull", fmt(c1), fmt(worst1)}, {"disk", fmt(c2), fmt(worst2)}};
    rep.metrics = {{"worst_hull", worst1}, {"worst_disk", worst2}, {"failures", static_cast<double>(fails)}};
    return rep;
}

ExperimentReport bohr_check(const Matrix& t, NormKind kind, std::size_t trials, std::uint64_t seed) {
    ExperimentReport rep;
    rep.name = "bohr";
    rep.parameters = {{"n", std::to_string(t.size())}, {"norm", std::string(to_string(kind))},
                      {"trials", std::to_string(trials)}, {"seed", std::to_string(seed)}};
    const double r = 3.0 * induced_norm(t, kind);
    SplitMix64 rng(seed);
    double worst = 0.0;
    std::size_t fails = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const auto deg = 1 + rng.below(16);
        const Polynomial p = random_polynomial(deg, rng);
        const double lhs = induced_norm(poly_apply(p, t), kind);
        const double sup = r > 0.0 ? circle_sup_certified(p, r) : std::abs(p(0.0));
        const double q = lhs / sup;
        worst = std::max(worst, q);
        if (q > 1.0 + 1e-6) ++fails;
    }
    rep.measured = worst;
    rep.reference_bound = 1.0;
    rep.satisfied = fails == 0;
    rep.details.columns = {"radius", "worst_lhs/rhs", "failures"};
    rep.details.rows = {{fmt(r), fmt(worst), std::to_string(fails)}};
    rep.metrics = {{"worst", worst}, {"failures", static_cast<double>(fails)}};
    return rep;
}

ExperimentReport affine_invariance_check(const Matrix& t, NormKind kind, Complex alpha, Complex beta,
                                         const Polynomial& p) {
    if (alpha == Complex{0.0}) throw InvalidArgument("affine_invariance_check: alpha must be nonzero");
    ExperimentReport rep;
    rep.name = "affine_invariance";
    rep.parameters = {{"n", std::to_string(t.size())}, {"norm", std::string(to_string(kind))},
                      {"alpha", fmt(alpha)}, {"beta", fmt(beta)}, {"degree", std::to_string(p.degree())}};
    const ConvexRegion v = numerical_range(t, kind, kDefaultGrid);
    Matrix s = alpha * t;
    s.add_identity(beta);
    // Rotating the grid by arg(alpha) keeps the two polygons in exact correspondence.
    const ConvexRegion vs = numerical_range(s, kind, kDefaultGrid, std::arg(alpha));
    const double lhs = psi_ratio(t, p.compose_affine(alpha, beta), kind, v);
    const double rhs = psi_ratio(s, p, kind, vs);
    const double rel = std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs));
    rep.measured = rel;
    rep.reference_bound = 1e-8;
    rep.satisfied = rel <= 1e-8;
    rep.details.columns = {"side", "ratio"};
    rep.details.rows = {{"T, p(alpha z + beta)", fmt(lhs)}, {"alpha T + beta I, p", fmt(rhs)}};
    rep.metrics = {{"ratio_original", lhs}, {"ratio_transformed", rhs}, {"relative_difference", rel}};
    return rep;
}

ExperimentReport gershgorin_experiment(std::size_t samples, std::uint64_t seed, std::size_t m) {
    ExperimentReport rep;
    rep.name = "gershgorin_hull";
    rep.parameters = {{"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}, {"grid", std::to_string(m)}};
    std::vector<Matrix> mats;
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) mats.push_back(random_matrix(2 + rng.below(7), rng));
    std::vector<double> rel(samples);
    parallel_for(samples, [&](std::size_t i) {
        const double norm = induced_norm(mats[i], NormKind::L1);
        const auto hull = gershgorin_hull_l1(mats[i], m);
        const auto lim = range_polygon(mats[i], NormKind::L1, m, SupportMethod::limit_scheme, 0.0, 1e-7 * (1.0 + norm));
        rel[i] = hausdorff(hull, lim) / (1.0 + norm);
    });
    const double worst = samples ? *std::max_element(rel.begin(), rel.end()) : 0.0;
    rep.measured = worst;
    rep.reference_bound = 1e-6;
    rep.satisfied = worst <= 1e-6;
    rep.details.columns = {"samples", "worst_hausdorff/(1+norm)"};
    rep.details.rows = {{std::to_string(samples), fmt(worst)}};
    rep.metrics = {{"worst_relative_hausdorff", worst}};
    return rep;
}

ExperimentReport duality_experiment(std::size_t samples, std::uint64_t seed) {
    ExperimentReport rep;
    rep.name = "duality";
    rep.parameters = {{"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}, {"degree", "8"}, {"budget", "200"}};
    std::vector<Matrix> mats;
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) mats.push_back(random_matrix(2 + rng.below(5), rng));
    std::vector<std::size_t> radius_mismatch(samples, 0);
    std::vector<double> psi_rel(samples, 0.0), psi_rel_l2(samples, 0.0);
    parallel_for(samples, [&](std::size_t i) {
        const Matrix& t = mats[i];
        const Matrix tt = transpose(t);
        for (double th : uniform_angles(64))
            if (support_radius(t, th, NormKind::L1) != support_radius(tt, th, NormKind::Linf)) ++radius_mismatch[i];
        const auto seed_i = derive_seed(seed, i);
        const double a = psi_lower_bound(t, NormKind::L1, 8, 200, seed_i).lower_bound;
        const double b = psi_lower_bound(tt, NormKind::Linf, 8, 200, seed_i).lower_bound;
        psi_rel[i] = std::abs(a - b) / std::max(a, b);
        const double c = psi_lower_bound(t, NormKind::L2, 8, 200, seed_i).lower_bound;
        const double d = psi_lower_bound(tt, NormKind::L2, 8, 200, seed_i).lower_bound;
        psi_rel_l2[i] = std::abs(c - d) / std::max(c, d);
    });
    std::size_t mismatches = 0;
    for (auto k : radius_mismatch) mismatches += k;
    const double worst = samples ? *std::max_element(psi_rel.begin(), psi_rel.end()) : 0.0;
    const double worst2 = samples ? *std::max_element(psi_rel_l2.begin(), psi_rel_l2.end()) : 0.0;
    rep.measured = std::max(worst, worst2);
    rep.reference_bound = 1e-8;
    rep.satisfied = mismatches == 0 && worst <= 1e-8 && worst2 <= 1e-8;
    rep.details.columns = {"check", "value"};
    rep.details.rows = {{"support_radius_mismatches", std::to_string(mismatches)},
                        {"psi_l1_vs_linf_max_rel", fmt(worst)},
                        {"psi_l2_vs_l2_max_rel", fmt(worst2)}};
    rep.metrics = {{"radius_mismatches", static_cast<double>(mismatches)},
                   {"psi_l1_linf_rel", worst},
                   {"psi_l2_rel", worst2}};
    return rep;
}

}  // namespace specrange
