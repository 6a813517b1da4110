#include <cmath>

#include "doctest.h"
#include "specrange/error.hpp"
#include "specrange/linalg.hpp"
#include "specrange/psi.hpp"
#include "specrange/rng.hpp"

using namespace specrange;

namespace {

// Plain triple loop, independent of Matrix::operator*.
Matrix naive_product(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

double frobenius(const Matrix& a) {
    double s = 0.0;
    for (const auto& z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

// 2x2 spectral norm from the closed form for the eigenvalues of A*A.
double spectral_norm_2x2(const Matrix& a) {
    const Matrix h = adjoint(a) * a;
    const double tr = (h(0, 0) + h(1, 1)).real();
    const double det = (h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0)).real();
    return std::sqrt(0.5 * (tr + std::sqrt(std::max(0.0, tr * tr - 4.0 * det))));
}

}  // namespace

TEST_CASE("matrix construction validates input") {
    CHECK_THROWS_AS(Matrix(2, std::vector<Complex>(3)), InvalidArgument);
    CHECK_THROWS_AS(Matrix(1, {Complex{NAN, 0.0}}), InvalidArgument);
    const Matrix t{{1.0, 2.0}, {3.0, 4.0}};
    CHECK(t(1, 0) == Complex{3.0});
    CHECK(transpose(Matrix::jordan(2)) == Matrix{{0.0, 0.0}, {1.0, 0.0}});
}

TEST_CASE("norm tags") {
    CHECK(parse_norm_kind("L1") == NormKind::L1);
    CHECK(parse_norm_kind("linf") == NormKind::Linf);
    CHECK_THROWS_AS(parse_norm_kind("l3"), InvalidArgument);
    CHECK(dual(NormKind::L1) == NormKind::Linf);
    CHECK(dual(NormKind::L2) == NormKind::L2);
}

TEST_CASE("induced norms on small examples") {
    for (std::size_t n : {2, 3, 7}) CHECK(induced_norm(Matrix::jordan(n), NormKind::L1) == 1.0);
    CHECK(induced_norm(Matrix{{2.0, 1.0}, {0.0, 0.0}}, NormKind::L1) == 2.0);
    CHECK(induced_norm(Matrix{{0.0, 1.0}, {0.0, 0.0}}, NormKind::L2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(induced_norm(Matrix::identity(5), NormKind::L2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spectral norm matches the 2x2 closed form") {
    SplitMix64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const Matrix a = random_matrix(2, rng);
        CHECK(spectral_norm(a) == doctest::Approx(spectral_norm_2x2(a)).epsilon(1e-10));
    }
}

TEST_CASE("spectral norm on clustered singular values") {
    // Singular values 1 and 1 - 1e-7 stall plain power iteration.
    const Matrix d = Matrix::diagonal(std::vector<Complex>{1.0 - 1e-7, 1.0, 0.5});
    CHECK(spectral_norm(d) == doctest::Approx(1.0).epsilon(1e-12));
    PowerIterationOptions strict;
    strict.dense_fallback_after = 0;
    strict.max_iterations = 2;
    SplitMix64 rng(4);
    CHECK_THROWS_AS(spectral_norm(random_matrix(6, rng), strict), ConvergenceError);
}

TEST_CASE("norm laws on random matrices") {
    SplitMix64 rng(5);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = 1 + rng.below(6);
        const Matrix s = random_matrix(n, rng), t = random_matrix(n, rng);
        CHECK(induced_norm(transpose(t), NormKind::Linf) == induced_norm(t, NormKind::L1));
        for (NormKind k : {NormKind::L1, NormKind::L2, NormKind::Linf}) {
            CHECK(induced_norm(s * t, k) <= induced_norm(s, k) * induced_norm(t, k) * (1 + 1e-12));
            CHECK(induced_norm(Matrix::identity(n), k) == doctest::Approx(1.0).epsilon(1e-12));
        }
        CHECK(spectral_norm(t) <= frobenius(t) * (1 + 1e-12));
        CHECK(frobenius(s * t - naive_product(s, t)) <= 1e-12 * (1 + frobenius(s) * frobenius(t)));
    }
}

TEST_CASE("hermitian max eigenvalue") {
    const Matrix h{{2.0, Complex{0.0, 1.0}}, {Complex{0.0, -1.0}, 2.0}};
    CHECK(hermitian_max_eigenvalue(h) == doctest::Approx(3.0).epsilon(1e-12));
    const Matrix neg = Matrix::diagonal(std::vector<Complex>{-3.0, -1.0});
    CHECK(hermitian_max_eigenvalue(neg) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("resolvent norms") {
    CHECK(resolvent_norm(Matrix(2), 2.0, NormKind::L1) == doctest::Approx(0.5));
    CHECK(resolvent_norm(Matrix::jordan(2), 1.0, NormKind::L1) == doctest::Approx(2.0));
    CHECK(resolvent_norm(Matrix::diagonal(std::vector<Complex>{0.0, 1.0}), 3.0, NormKind::L1) == doctest::Approx(0.5));
    try {
        (void)resolvent_norm(Matrix::jordan(3), 0.0, NormKind::L1);
        FAIL("expected a singular matrix");
    } catch (const SingularMatrixError& e) {
        CHECK(e.pivot() == 0.0);
    }
}

TEST_CASE("inverse times matrix is the identity") {
    SplitMix64 rng(21);
    for (int i = 0; i < 20; ++i) {
        const Matrix a = random_matrix(1 + rng.below(8), rng);
        Matrix r = naive_product(a, inverse(a));
        r.add_identity(-1.0);
        CHECK(frobenius(r) < 1e-9);
    }
}

TEST_CASE("polynomial basics") {
    const Polynomial p{1.0, 2.0, 0.0, 0.0};
    CHECK(p.degree() == 1);
    CHECK(p(2.0) == Complex{5.0});
    CHECK(p.derivative().trimmed() == Polynomial{2.0});
    CHECK(Polynomial{0.0, 0.0}.is_zero());
    const Polynomial q{0.0, 0.0, 1.0};
    CHECK(q.compose_affine(2.0, 1.0).trimmed() == Polynomial{1.0, 4.0, 4.0});
    CHECK((p * p).trimmed() == Polynomial{1.0, 4.0, 4.0});
}

TEST_CASE("poly_apply on Jordan blocks is Toeplitz") {
    CHECK(poly_apply(Polynomial{0.0, 1.0}, Matrix::jordan(3)) == Matrix::jordan(3));
    CHECK(poly_apply(Polynomial{0.0, 0.0, 1.0}, Matrix::jordan(2)) == Matrix(2));
    const Matrix f = poly_apply(Polynomial{1.0, 1.0, 1.0}, Matrix::jordan(3));
    const Matrix expect{{1.0, 1.0, 1.0}, {0.0, 1.0, 1.0}, {0.0, 0.0, 1.0}};
    CHECK(f == expect);
    SplitMix64 rng(3);
    const Polynomial a = random_polynomial(7, rng);
    const Matrix g = poly_apply(a, Matrix::jordan(8));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) CHECK(g(i, j) == (j >= i ? a.coeff(j - i) : Complex{0.0}));
}

TEST_CASE("functional calculus is a ring homomorphism") {
    SplitMix64 rng(8);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = 1 + rng.below(8);
        const Matrix t = random_matrix(n, rng);
        const Polynomial p = random_polynomial(rng.below(9), rng), q = random_polynomial(rng.below(9), rng);
        const Matrix lhs = poly_apply(p * q, t);
        const Matrix rhs = naive_product(poly_apply(p, t), poly_apply(q, t));
        CHECK(frobenius(lhs - rhs) <= 1e-10 * std::max(1.0, frobenius(rhs)));
    }
}

TEST_CASE("eigenvalues of small examples") {
    const auto j = eigenvalues(Matrix::jordan(4));
    REQUIRE(j.eigenvalues.size() == 4);
    for (const auto& z : j.eigenvalues) CHECK(z == Complex{0.0});
    CHECK(j.residual == 0.0);

    const auto t = eigenvalues(Matrix{{2.0, 1.0}, {0.0, 0.0}});
    REQUIRE(t.eigenvalues.size() == 2);
    CHECK(std::abs(t.eigenvalues[0]) < 1e-14);
    CHECK(std::abs(t.eigenvalues[1] - 2.0) < 1e-14);

    const auto d = eigenvalues(Matrix::diagonal(std::vector<Complex>{3.0, Complex{1.0, 1.0}}));
    CHECK(std::abs(d.eigenvalues[0] - Complex{1.0, 1.0}) < 1e-13);
    CHECK(std::abs(d.eigenvalues[1] - 3.0) < 1e-13);

    CHECK_THROWS_AS(eigenvalues(Matrix(kMaxDimension + 1)), InvalidArgument);
}

TEST_CASE("eigenvalue residuals on random Gaussian matrices") {
    SplitMix64 rng(99);
    for (std::size_t n = 1; n <= 16; ++n) {
        const Matrix t = random_matrix(n, rng);
        const auto s = eigenvalues(t);
        CHECK(s.eigenvalues.size() == n);
        CHECK(s.residual <= 1e-8 * std::pow(1.0 + induced_norm(t, NormKind::L1), static_cast<double>(n)));
        for (std::size_t i = 1; i < n; ++i) {
            const auto a = s.eigenvalues[i - 1], b = s.eigenvalues[i];
            CHECK((a.real() < b.real() || (a.real() == b.real() && a.imag() <= b.imag())));
        }
        // Trace equals the eigenvalue sum.
        Complex tr = 0.0, sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) tr += t(i, i);
        for (const auto& z : s.eigenvalues) sum += z;
        CHECK(std::abs(tr - sum) < 1e-8);
    }
}

TEST_CASE("polynomial roots") {
    const auto r = polynomial_roots(Polynomial{-1.0, 0.0, 1.0});
    REQUIRE(r.roots.size() == 2);
    CHECK(std::abs(std::abs(r.roots[0]) - 1.0) < 1e-14);
    CHECK(r.residual < 1e-14);
    CHECK(polynomial_roots(Polynomial{3.0}).roots.empty());
    CHECK_THROWS_AS(polynomial_roots(Polynomial{0.0}), InvalidArgument);
}
