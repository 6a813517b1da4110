#include "specrange/polytools.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "specrange/error.hpp"
#include "specrange/rng.hpp"

namespace specrange {

std::string_view to_string(SignConstruction c) noexcept {
    return c == SignConstruction::rudin_shapiro ? "rudin_shapiro" : "random";
}

std::string_view to_string(SupKind k) noexcept {
    return k == SupKind::exact_sampled ? "exact_sampled" : "certified_upper";
}

Polynomial SignPolynomial::polynomial() const {
    std::vector<Complex> c(signs.begin(), signs.end());
    if (c.empty()) c.push_back(0.0);
    return Polynomial(std::move(c));
}

std::pair<SignPolynomial, SignPolynomial> rudin_shapiro(int k) {
    if (k < 0 || k > 20) throw InvalidArgument("rudin_shapiro: k must lie in [0, 20], got " + std::to_string(k));
    std::vector<int> p{1}, q{1};
    for (int step = 0; step < k; ++step) {
        std::vector<int> np = p, nq = p;
        np.insert(np.end(), q.begin(), q.end());
        for (int s : q) nq.push_back(-s);
        p = std::move(np);
        q = std::move(nq);
    }
    return {SignPolynomial{std::move(p), SignConstruction::rudin_shapiro, 0},
            SignPolynomial{std::move(q), SignConstruction::rudin_shapiro, 0}};
}

SignPolynomial random_signs(std::size_t length, std::uint64_t seed) {
    if (length == 0) throw InvalidArgument("random_signs: length must be positive");
    SplitMix64 rng(seed);
    SignPolynomial s{std::vector<int>(length), SignConstruction::random, seed};
    for (auto& v : s.signs) v = rng.coin() ? 1 : -1;
    return s;
}

SupPair sup_on_circle(const Polynomial& p, double r, std::size_t m) {
    if (!(r > 0.0) || !std::isfinite(r)) throw InvalidArgument("sup_on_circle: radius must be positive");
    const double deg = static_cast<double>(p.degree());
    if (!(static_cast<double>(m) > std::numbers::pi * deg))
        throw InvalidArgument("sup_on_circle: m = " + std::to_string(m) + " too small for degree " +
                              std::to_string(p.degree()));
    double best = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m);
        best = std::max(best, std::abs(p(std::polar(r, t))));
    }
    const double infl = 1.0 / (1.0 - std::numbers::pi * deg / static_cast<double>(m));
    return {{best, SupKind::exact_sampled, m, 1.0}, {best * infl, SupKind::certified_upper, m, infl}};
}

std::vector<Complex> boundary_samples(const ConvexRegion& a, std::size_t degree, double* spacing) {
    const auto& v = a.vertices;
    if (v.empty()) throw InvalidArgument("boundary_samples: region has no vertices");
    const double diam = region_diameter(a);
    double rmax = 0.0;
    for (const auto& z : v) rmax = std::max(rmax, std::abs(z));
    if (spacing) *spacing = 0.0;
    if (v.size() == 1 || diam <= 1e-12 * (1.0 + rmax)) return {v.front()};
    const double h = diam / (64.0 * static_cast<double>(std::max<std::size_t>(1, degree)));
    std::vector<Complex> pts;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Complex a0 = v[i];
        const Complex a1 = v[(i + 1) % v.size()];
        const double len = std::abs(a1 - a0);
        const auto k = static_cast<std::size_t>(std::max(1.0, std::ceil(len / h - 1e-9)));
        if (spacing) *spacing = std::max(*spacing, len / static_cast<double>(k));
        for (std::size_t j = 0; j < k; ++j) pts.push_back(a0 + (static_cast<double>(j) / static_cast<double>(k)) * (a1 - a0));
    }
    return pts;
}

SupPair sup_on_region(const Polynomial& p, const ConvexRegion& a, int resolution_degree) {
    const std::size_t deg = p.degree();
    std::size_t eff = deg;
    if (resolution_degree > 0) eff = std::max(eff, static_cast<std::size_t>(resolution_degree));
    double hmax = 0.0;
    const auto pts = boundary_samples(a, eff, &hmax);
    double best = 0.0;
    for (const auto& z : pts) best = std::max(best, std::abs(p(z)));
    if (pts.size() == 1) return {{best, SupKind::exact_sampled, 1, 1.0}, {best, SupKind::certified_upper, 1, 1.0}};
    double certified = best;
    if (deg > 0) {
        const double rho = region_diameter(a) / 100.0;
        double rmax = 0.0;
        for (const auto& z : a.vertices) rmax = std::max(rmax, std::abs(z));
        double brho = 0.0, pw = 1.0;
        for (const auto& c : p.coeffs()) {
            brho += std::abs(c) * pw;
            pw *= rmax + rho;
        }
        certified = best + 0.5 * hmax * static_cast<double>(deg) * brho / rho;
    }
    const double infl = best > 0.0 ? certified / best : 1.0;
    return {{best, SupKind::exact_sampled, pts.size(), 1.0},
            {certified, SupKind::certified_upper, pts.size(), infl}};
}

TaylorCos taylor_cos(int d, double r) {
    if (d < 2 || d % 2 != 0) throw InvalidArgument("taylor_cos: degree must be even and at least 2");
    if (!(r >= 0.0) || !std::isfinite(r)) throw InvalidArgument("taylor_cos: radius must be nonnegative");
    std::vector<Complex> c(static_cast<std::size_t>(d) + 1, 0.0);
    double term = 1.0;
    for (int k = 0; k <= d; k += 2) {
        c[static_cast<std::size_t>(k)] = term;
        term = -term / static_cast<double>((k + 1) * (k + 2));
    }
    double rem = 1.0;
    for (int k = 1; k <= d + 1; ++k) rem *= r / static_cast<double>(k);
    return {Polynomial(std::move(c)), rem};
}

}  // namespace specrange
