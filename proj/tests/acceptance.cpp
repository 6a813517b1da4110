// Acceptance checks AC1-AC9. Prints one PASS/FAIL line per criterion.
//
//   acceptance <path-to-specrange-cli> [AC1 AC4 ...]

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "specrange/combinat.hpp"
#include "specrange/error.hpp"
#include "specrange/linalg.hpp"
#include "specrange/numrange.hpp"
#include "specrange/polytools.hpp"
#include "specrange/psi.hpp"
#include "specrange/rng.hpp"

using namespace specrange;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr NormKind kKinds[] = {NormKind::L1, NormKind::L2, NormKind::Linf};

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::string num(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

std::string cli_path;

// Gershgorin hull against the limit scheme, plus the closed form for L1.
Outcome ac1() {
    SplitMix64 rng(derive_seed(1, 0));
    double worst = 0.0;
    std::size_t fails = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 2 + rng.below(7);
        const Matrix t = std::exp(rng.gaussian()) * random_matrix(n, rng);
        const double norm = induced_norm(t, NormKind::L1);
        const auto g = gershgorin_hull_l1(t, 720);
        const auto closed = range_polygon(t, NormKind::L1, 720);
        const auto limit = range_polygon(t, NormKind::L1, 720, SupportMethod::limit_scheme);
        const double rel = std::max(hausdorff(g, closed), hausdorff(g, limit)) / (1.0 + norm);
        worst = std::max(worst, rel);
        if (rel > 1e-6) ++fails;
    }
    return {fails == 0, "200 matrices, worst Hausdorff/(1+||T||_1) = " + num(worst) + ", threshold 1e-6"};
}

Outcome ac2() {
    const Matrix t{{2.0, 1.0}, {0.0, 0.0}};
    // cos(T) from the eigen decomposition: [[cos 2, (cos 2 - 1)/2], [0, 1]].
    const double c2 = std::cos(2.0);
    const double exact = std::max(std::abs(c2), std::abs(c2 - 1.0) / 2.0 + 1.0);
    const auto rep = cos_example();
    const double numer = rep.metric("numerator");

    // Entire function, so the sup over the region sits on its boundary.
    const auto region = gershgorin_hull_l1(t, kDefaultGrid);
    double direct = 0.0;
    for (const auto& z : boundary_samples(region, 64)) direct = std::max(direct, std::abs(std::cos(z)));
    const double bound = rep.metric("sup_bound");
    const bool ok = std::abs(numer - (1.0 + std::abs(c2 - 1.0) / 2.0)) <= 1e-12 && std::abs(numer - exact) <= 1e-12 &&
                    numer > 1.708 && bound <= 1.55 && direct <= 1.55 && numer / bound > 1.1 && numer / direct > 1.1 &&
                    std::abs(bound - direct) <= 1e-6;
    return {ok, "||cos T||_1 = " + num(numer) + ", sup bound = " + num(bound) + " (direct " + num(direct) +
                    "), ratio = " + num(numer / bound)};
}

Outcome ac3() {
    const auto rep = two_by_two_l1_suite(500, 0);
    const double def = rep.metric("max_defective"), all = rep.metric("max_estimate");
    const bool ok = def <= 2.0 + std::numbers::sqrt2 + 1e-6 && all <= 13.0 + 1e-6;
    return {ok, "max defective = " + num(def) + " (<= 2+sqrt2), max overall = " + num(all) + " (<= 13)"};
}

Outcome ac4() {
    Outcome out;
    for (int k = 1; k <= 6; ++k) {
        const std::size_t n = std::size_t{1} << k;
        const Polynomial p = rudin_shapiro(k).first.polynomial();
        const double numer = induced_norm(poly_apply(p, Matrix::jordan(n)), NormKind::L1);
        // V(J_n) is the closed unit disk in the l1 algebra.
        const double sup = sup_on_circle(p, 1.0, std::max<std::size_t>(4096, 64 * (n + 1))).sampled.value;
        const double ratio = numer / sup;
        const double lower = std::sqrt(static_cast<double>(n) / 2.0);
        const bool ok = ratio >= lower - 1e-9 && ratio >= std::sqrt(static_cast<double>(n) / 6.0);
        const auto rep = jordan_experiment(n, NormKind::L1);
        out.ok = out.ok && ok && rep.satisfied && rep.metric("ratio") >= lower - 1e-9;
        out.detail += "n=" + std::to_string(n) + ":" + num(ratio) + " ";
    }
    out.detail += "(each >= sqrt(n/2))";
    return out;
}

Outcome ac5() {
    Outcome out;
    const double cap = 1.0 + std::numbers::sqrt2 + 1e-6;
    double worst = 0.0;
    for (int k = 1; k <= 6; ++k) {
        const std::size_t n = std::size_t{1} << k;
        const Matrix j = Matrix::jordan(n);
        const auto est = psi_lower_bound(j, NormKind::L2, static_cast<int>(std::min<std::size_t>(n - 1, 12)), 300);
        const Polynomial p = rudin_shapiro(k).first.polynomial();
        const double rs = psi_ratio(j, p, NormKind::L2, range_polygon(j, NormKind::L2));
        worst = std::max({worst, est.lower_bound, rs});
        out.detail += "n=" + std::to_string(n) + ":" + num(est.lower_bound) + " ";
        if (est.lower_bound > cap || rs > cap) out.ok = false;
    }
    out.detail += "(max " + num(worst) + " <= 1+sqrt2)";
    return out;
}

// Euclidean distance from lambda to the polygon (0 inside).
double polygon_distance(const ConvexRegion& a, Complex lambda) {
    if (region_contains(a, lambda)) return 0.0;
    const auto& v = a.vertices;
    double best = std::abs(lambda - v[0]);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Complex p = v[i], q = v[(i + 1) % v.size()];
        const Complex e = q - p;
        const double len2 = std::norm(e);
        const double u = len2 > 0.0 ? std::clamp(((lambda - p) * std::conj(e)).real() / len2, 0.0, 1.0) : 0.0;
        best = std::min(best, std::abs(lambda - (p + u * e)));
    }
    return best;
}

// Property suite over random (T, p, lambda) triples.
Outcome ac6() {
    SplitMix64 rng(derive_seed(6, 0));
    std::array<std::size_t, 7> viol{};
    std::size_t resolvent_cases = 0;
    const char* names[] = {"spectrum", "nu<=||T||", "||T||<=c*nu", "resolvent", "hausdorff", "bohr", "eps_hull"};
    for (int trial = 0; trial < 500; ++trial) {
        const NormKind kind = kKinds[trial % 3];
        const std::size_t n = 1 + rng.below(6);
        const Matrix t = std::exp(rng.gaussian()) * random_matrix(n, rng);
        const Polynomial p = random_polynomial(rng.below(13), rng);
        const double norm = induced_norm(t, kind);
        const double scale = 1.0 + norm;
        const Complex lambda = std::polar(3.0 * norm * rng.uniform() + rng.uniform(), 2 * kPi * rng.uniform());
        const auto v = range_polygon(t, kind);

        for (const auto& z : eigenvalues(t).eigenvalues)
            if (region_distance(v, z) > 1e-6) ++viol[0];

        const double nu = numerical_radius(t, kind);
        if (nu > norm * (1 + 1e-9)) ++viol[1];
        const double c = kind == NormKind::L2 ? 2.0 : std::numbers::e;
        if (norm > c * nu * (1 + 1e-9)) ++viol[2];

        const double d = polygon_distance(v, lambda);
        if (d > 1e-6 * scale) {
            ++resolvent_cases;
            if (resolvent_norm(t, lambda, kind) * d > 1.0 + 1e-6) ++viol[3];
        }

        Matrix e = random_matrix(n, rng);
        e *= std::exp(rng.gaussian() - 2.0);
        const Matrix s = t + e;
        if (hausdorff(range_polygon(s, kind), v) > induced_norm(e, kind) + 1e-9) ++viol[4];

        const double pt = induced_norm(poly_apply(p, t), kind);
        const std::size_t m = std::max<std::size_t>(4096, 64 * (p.degree() + 1));
        if (norm > 0.0 && pt > sup_on_circle(p, 3.0 * norm, m).sampled.value * (1 + 1e-9)) ++viol[5];

        const double diam = region_diameter(v);
        for (double eps : {0.25, 0.5, 1.0, 2.0}) {
            const double c1 = 1.0 + 1.0 / (2.0 * eps);
            const double c2 = (1.0 + eps) / std::sqrt(eps * (2.0 + eps));
            const double hull = sup_on_region(p, epsilon_hull(v, eps * diam)).sampled.value;
            const double disk = sup_on_circle(p, (1.0 + eps) * norm, m).sampled.value;
            if (pt > c1 * hull * (1 + 1e-9) || pt > c2 * disk * (1 + 1e-9)) ++viol[6];
        }
    }
    Outcome out;
    for (std::size_t i = 0; i < viol.size(); ++i) {
        out.ok = out.ok && viol[i] == 0;
        out.detail += std::string(names[i]) + "=" + std::to_string(viol[i]) + " ";
    }
    out.detail += "violations over 500 triples (" + std::to_string(resolvent_cases) + " resolvent cases)";
    return out;
}

Outcome ac7() {
    SplitMix64 rng(derive_seed(7, 0));
    std::size_t mismatches = 0;
    double worst = 0.0;
    const auto angles = uniform_angles(kDefaultGrid);
    for (int i = 0; i < 100; ++i) {
        const Matrix t = random_matrix(1 + rng.below(6), rng);
        const Matrix tt = transpose(t);
        for (double th : angles)
            if (support_radius(t, th, NormKind::L1) != support_radius(tt, th, NormKind::Linf)) ++mismatches;
        const std::uint64_t seed = derive_seed(7, static_cast<std::uint64_t>(i) + 1);
        const double a = psi_lower_bound(t, NormKind::L1, 8, 200, seed).lower_bound;
        const double b = psi_lower_bound(tt, NormKind::Linf, 8, 200, seed).lower_bound;
        worst = std::max(worst, std::abs(a - b));
    }
    return {mismatches == 0 && worst <= 1e-8,
            "radius mismatches = " + std::to_string(mismatches) + ", max |psi_L1(T) - psi_Linf(T^T)| = " + num(worst)};
}

// Exhaustive Schreier norms for every support S within {1..20} at once:
// best[S] = max(sum(S) if |S| <= min S, max_i best[S \ {i}]).
std::size_t schreier_dp_mismatches(const std::array<double, 20>& val, double* worst) {
    constexpr std::uint32_t kAll = 1U << 20;
    std::vector<double> best(kAll, 0.0), sum(kAll, 0.0);
    std::size_t bad = 0;
    for (std::uint32_t s = 1; s < kAll; ++s) {
        const int low = std::countr_zero(s);
        sum[s] = sum[s & (s - 1)] + val[static_cast<std::size_t>(low)];
        const auto card = static_cast<unsigned>(std::popcount(s));
        double b = card <= static_cast<unsigned>(low + 1) ? sum[s] : 0.0;
        for (std::uint32_t r = s; r; r &= r - 1) b = std::max(b, best[s & ~(r & -r)]);
        best[s] = b;
        if (card > 10) continue;
        std::vector<std::pair<std::size_t, Complex>> pairs;
        for (std::uint32_t r = s; r; r &= r - 1)
            pairs.emplace_back(static_cast<std::size_t>(std::countr_zero(r)) + 1, val[std::countr_zero(r)]);
        const double got = schreier_norm(SparseVector(std::move(pairs)));
        const double diff = std::abs(got - b);
        *worst = std::max(*worst, diff);
        if (diff > 1e-12 * (1.0 + b)) ++bad;
    }
    return bad;
}

Outcome ac8() {
    Outcome out;
    for (std::size_t n : {3, 7, 15, 31}) {
        const auto rep = cut_shift_experiment(n, 0);
        const double norm = rep.metric("norm");
        out.ok = out.ok && norm >= static_cast<double>(n) && rep.satisfied;
        out.detail += "n=" + std::to_string(n) + ":" + num(norm) + " ";
    }
    SplitMix64 rng(derive_seed(8, 0));
    std::size_t bad = 0;
    double worst = 0.0;
    for (int assignment = 0; assignment < 4; ++assignment) {
        std::array<double, 20> val{};
        // Small integers force ties; the others are generic.
        for (auto& x : val) x = assignment == 0 ? static_cast<double>(1 + rng.below(3)) : 0.01 + rng.uniform();
        bad += schreier_dp_mismatches(val, &worst);
    }
    out.ok = out.ok && bad == 0;
    out.detail += "| closed form vs exhaustive on all supports <= 10 in [1,20], 4 value sets: mismatches = " +
                  std::to_string(bad) + ", worst diff = " + num(worst);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome ac9() {
    if (cli_path.empty()) return {false, "no CLI path given"};
    const std::string a = "acceptance_verify_a.jsonl", b = "acceptance_verify_b.jsonl";
    int codes[2];
    for (int i = 0; i < 2; ++i) {
        const std::string cmd =
            "\"" + cli_path + "\" verify --suite all --seed 0 --json " + (i == 0 ? a : b) + " 2>/dev/null";
        codes[i] = std::system(cmd.c_str());
    }
    const std::string x = slurp(a), y = slurp(b);
    std::remove(a.c_str());
    std::remove(b.c_str());
    const bool ok = !x.empty() && x == y;
    return {ok, "two runs: " + std::to_string(x.size()) + " and " + std::to_string(y.size()) + " bytes, " +
                    (x == y ? "identical" : "different") + ", exit codes " + std::to_string(codes[0]) + "/" +
                    std::to_string(codes[1])};
}

struct Criterion {
    const char* id;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) cli_path = argv[1];
    std::vector<std::string> only(argv + std::min(argc, 2), argv + argc);

    const std::vector<Criterion> all = {
        {"AC1", 30, ac1},  {"AC2", 1, ac2},   {"AC3", 300, ac3}, {"AC4", 30, ac4},         {"AC5", 120, ac5},
        {"AC6", 120, ac6}, {"AC7", 60, ac7},  {"AC8", 60, ac8},  {"AC9", 1e300, ac9},
    };
    int failed = 0;
    for (const auto& c : all) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = o.ok && in_time;
        if (!pass) ++failed;
        std::printf("%s %s  %s  [%.2f s%s]\n", c.id, pass ? "PASS" : "FAIL", o.detail.c_str(), secs,
                    in_time ? "" : ", over the time limit");
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
