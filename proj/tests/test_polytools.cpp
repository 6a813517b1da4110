#include <cmath>
#include <numbers>

#include "doctest.h"
#include "specrange/error.hpp"
#include "specrange/polytools.hpp"
#include "specrange/psi.hpp"
#include "specrange/rng.hpp"

using namespace specrange;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent evaluation from the sign list.
Complex eval_signs(const std::vector<int>& s, Complex z) {
    Complex acc = 0.0, pw = 1.0;
    for (int c : s) {
        acc += static_cast<double>(c) * pw;
        pw *= z;
    }
    return acc;
}

// Dense sampling of |p| along the closed polygon boundary.
double dense_polygon_max(const Polynomial& p, const std::vector<Complex>& v, int per_edge) {
    double best = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Complex a = v[i], b = v[(i + 1) % v.size()];
        for (int k = 0; k <= per_edge; ++k) best = std::max(best, std::abs(p(a + (b - a) * (double(k) / per_edge))));
    }
    return best;
}

}  // namespace

TEST_CASE("Rudin-Shapiro low orders") {
    auto [p1, q1] = rudin_shapiro(1);
    CHECK(p1.signs == std::vector<int>{1, 1});
    CHECK(q1.signs == std::vector<int>{1, -1});
    auto [p2, q2] = rudin_shapiro(2);
    CHECK(p2.signs == std::vector<int>{1, 1, 1, -1});
    CHECK(q2.signs == std::vector<int>{1, 1, -1, 1});
    CHECK(rudin_shapiro(0).first.signs == std::vector<int>{1});
    CHECK_THROWS_AS(rudin_shapiro(21), InvalidArgument);
    CHECK_THROWS_AS(rudin_shapiro(-1), InvalidArgument);
}

TEST_CASE("Rudin-Shapiro pairs are complementary") {
    for (int k = 0; k <= 10; ++k) {
        auto [p, q] = rudin_shapiro(k);
        REQUIRE(p.length() == (std::size_t{1} << k));
        const double n = static_cast<double>(p.length());
        for (int s = 0; s < 97; ++s) {
            const Complex z = std::polar(1.0, 2 * kPi * s / 97.0);
            const double e = std::norm(eval_signs(p.signs, z)) + std::norm(eval_signs(q.signs, z));
            CHECK(e == doctest::Approx(2.0 * n).epsilon(1e-10));
        }
        const double sup = sup_on_circle(p.polynomial(), 1.0, 4096).sampled.value;
        CHECK(sup <= std::sqrt(2.0 * n) * (1 + 1e-12));
        CHECK(sup >= std::sqrt(n) * (1 - 1e-12));
    }
}

TEST_CASE("random signs are seeded") {
    const auto a = random_signs(50, 7), b = random_signs(50, 7), c = random_signs(50, 8);
    CHECK(a.signs == b.signs);
    CHECK(a.signs != c.signs);
    CHECK(a.construction == SignConstruction::random);
    for (int s : a.signs) CHECK((s == 1 || s == -1));
    CHECK_THROWS_AS(random_signs(0, 1), InvalidArgument);
}

TEST_CASE("flat sign polynomials") {
    CHECK(flat_sign_polynomial(16, 3).signs == rudin_shapiro(4).first.signs);
    const auto f = flat_sign_polynomial(13, 3);
    CHECK(f.length() == 13);
    CHECK(f.construction == SignConstruction::random);
    CHECK(flat_sign_polynomial(13, 3).signs == f.signs);
}

TEST_CASE("sup on circles") {
    const auto s = sup_on_circle(Polynomial::monomial(5), 2.0, 64);
    CHECK(s.sampled.value == doctest::Approx(32.0).epsilon(1e-14));
    CHECK(s.sampled.kind == SupKind::exact_sampled);
    CHECK(s.certified.kind == SupKind::certified_upper);
    CHECK(s.certified.value == doctest::Approx(32.0 / (1 - kPi * 5 / 64)).epsilon(1e-14));
    CHECK_THROWS_AS(sup_on_circle(Polynomial::monomial(5), 1.0, 15), InvalidArgument);
    CHECK_THROWS_AS(sup_on_circle(Polynomial::monomial(1), 0.0, 64), InvalidArgument);
}

TEST_CASE("certified circle sup dominates a dense oracle") {
    SplitMix64 rng(61);
    for (int i = 0; i < 20; ++i) {
        const Polynomial p = random_polynomial(1 + rng.below(20), rng);
        const double r = 0.5 + rng.uniform();
        const auto s = sup_on_circle(p, r, 8 * (p.degree() + 1));
        double dense = 0.0;
        for (int k = 0; k < 20000; ++k) dense = std::max(dense, std::abs(p(std::polar(r, 2 * kPi * k / 20000.0))));
        CHECK(s.sampled.value <= dense * (1 + 1e-12));
        CHECK(s.certified.value >= dense * (1 - 1e-12));
    }
}

TEST_CASE("boundary samples") {
    const auto sq = hull_of_points(std::vector<Complex>{0.0, 1.0, Complex{1.0, 1.0}, Complex{0.0, 1.0}}, 64);
    double h = 0.0;
    const auto pts = boundary_samples(sq, 4, &h);
    CHECK(h <= region_diameter(sq) / 256.0 + 1e-15);
    CHECK(pts.size() >= 4 * 180);
    for (const auto& z : pts) CHECK(region_contains(sq, z, 1e-12));

    const auto point = hull_of_points(std::vector<Complex>{Complex{2.0, 1.0}}, 16);
    const auto one = boundary_samples(point, 3);
    REQUIRE(one.size() == 1);
    CHECK(std::abs(one[0] - Complex{2.0, 1.0}) < 1e-12);
}

TEST_CASE("sup on regions") {
    const auto disk = disk_region({0.0, 1.0}, 256);
    const auto s = sup_on_region(Polynomial::monomial(3), disk);
    const double rmax = 1.0 / std::cos(kPi / 256);
    CHECK(s.sampled.value >= 1.0 - 1e-12);
    CHECK(s.sampled.value <= std::pow(rmax, 3) + 1e-12);
    CHECK(s.certified.value >= s.sampled.value);

    SplitMix64 rng(67);
    for (int i = 0; i < 10; ++i) {
        const Matrix t = random_matrix(3, rng);
        const auto region = range_polygon(t, NormKind::L2, 90);
        const Polynomial p = random_polynomial(1 + rng.below(10), rng);
        const auto b = sup_on_region(p, region);
        const double dense = dense_polygon_max(p, region.vertices, 4000);
        CHECK(b.sampled.value <= dense * (1 + 1e-9));
        CHECK(b.certified.value >= dense * (1 - 1e-12));
    }
}

TEST_CASE("sup on a point region is the value there") {
    const auto point = hull_of_points(std::vector<Complex>{Complex{0.5, 0.0}}, 16);
    const auto b = sup_on_region(Polynomial{1.0, 1.0, 1.0}, point);
    CHECK(b.sampled.value == doctest::Approx(1.75).epsilon(1e-12));
}

TEST_CASE("Taylor cos remainder bounds the true error") {
    CHECK_THROWS_AS(taylor_cos(3, 1.0), InvalidArgument);
    CHECK_THROWS_AS(taylor_cos(4, -1.0), InvalidArgument);
    const auto c2 = taylor_cos(2, 1.0);
    CHECK(c2.poly.trimmed() == Polynomial{1.0, 0.0, -0.5});
    SplitMix64 rng(71);
    for (int d : {4, 8, 16, 24}) {
        const double r = 3.0;
        const auto tc = taylor_cos(d, r);
        CHECK(tc.poly.degree() == static_cast<std::size_t>(d));
        for (int s = 0; s < 200; ++s) {
            const Complex z = std::polar(r * std::sqrt(rng.uniform()), 2 * kPi * rng.uniform());
            CHECK(std::abs(std::cos(z) - tc.poly(z)) <= tc.remainder + 1e-12);
        }
    }
    CHECK(taylor_cos(24, 3.0).remainder < 1e-10);
}
