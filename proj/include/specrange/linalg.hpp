#pragma once

// Dense complex matrices for desk-scale problems (n <= 256): arithmetic,
// induced operator norms, eigenvalues, and the polynomial functional calculus.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace specrange {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDimension = 256;

enum class NormKind { L1, L2, Linf };

/// Dual exponent: the Banach adjoint of a matrix on l^p acts on l^q.
NormKind dual(NormKind kind) noexcept;
std::string_view to_string(NormKind kind) noexcept;
/// Accepts "l1", "l2", "linf" (case-insensitive). Throws InvalidArgument otherwise.
NormKind parse_norm_kind(std::string_view tag);

bool is_finite(Complex z) noexcept;

class Matrix {
   public:
    Matrix() = default;
    /// Zero matrix of dimension n.
    explicit Matrix(std::size_t n);
    /// Row-major entries; entry (k, j) is entries[k * n + j].
    Matrix(std::size_t n, std::vector<Complex> entries);
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t n);
    /// Nilpotent upper shift: ones on the first superdiagonal.
    static Matrix jordan(std::size_t n);
    static Matrix diagonal(std::span<const Complex> d);

    std::size_t size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }

    Complex& operator()(std::size_t k, std::size_t j) noexcept { return a_[k * n_ + j]; }
    Complex operator()(std::size_t k, std::size_t j) const noexcept { return a_[k * n_ + j]; }

    std::span<const Complex> entries() const noexcept { return a_; }

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(Complex s) noexcept;
    /// this += s * rhs
    Matrix& add_scaled(const Matrix& rhs, Complex s);
    Matrix& add_identity(Complex s) noexcept;

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, Complex s) { return lhs *= s; }
    friend Matrix operator*(Complex s, Matrix rhs) { return rhs *= s; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend bool operator==(const Matrix&, const Matrix&) = default;

    std::vector<Complex> apply(std::span<const Complex> x) const;
    std::vector<Complex> apply_adjoint(std::span<const Complex> x) const;

   private:
    std::size_t n_ = 0;
    std::vector<Complex> a_;
};

/// Plain transpose, no conjugation.
Matrix transpose(const Matrix& t);
/// Conjugate transpose.
Matrix adjoint(const Matrix& t);

/// Max absolute entry; handy as a scale for tolerances.
double max_abs(const Matrix& t) noexcept;

// ---------------------------------------------------------------------------
// Polynomials

/// Complex polynomial; coeffs()[k] multiplies z^k. Never empty. Trailing
/// zeros are allowed and degree() skips them.
class Polynomial {
   public:
    Polynomial() : c_{Complex{0.0}} {}
    explicit Polynomial(std::vector<Complex> coeffs);
    Polynomial(std::initializer_list<Complex> coeffs) : Polynomial(std::vector<Complex>(coeffs)) {}

    static Polynomial constant(Complex c) { return Polynomial({c}); }
    static Polynomial monomial(std::size_t k, Complex c = 1.0);

    std::span<const Complex> coeffs() const noexcept { return c_; }
    Complex coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : Complex{0.0}; }
    std::size_t degree() const noexcept;
    bool is_zero() const noexcept;

    Complex operator()(Complex z) const noexcept;
    Polynomial derivative() const;
    /// z -> p(alpha z + beta)
    Polynomial compose_affine(Complex alpha, Complex beta) const;
    /// Drop trailing zero coefficients (keeps at least one).
    Polynomial trimmed() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Complex s, Polynomial p);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

   private:
    std::vector<Complex> c_;
};

/// p(T) by Horner's rule.
Matrix poly_apply(const Polynomial& p, const Matrix& t);

// ---------------------------------------------------------------------------
// Norms

struct PowerIterationOptions {
    double rel_tol = 1e-12;
    std::size_t max_iterations = 100000;
    /// After this many iterations without convergence, switch to a dense
    /// Hermitian eigensolver. 0 disables the switch, so the cap applies.
    std::size_t dense_fallback_after = 300;
};

/// Induced operator norm: L1 max column sum, Linf max row sum, L2 largest
/// singular value by power iteration on T*T.
double induced_norm(const Matrix& t, NormKind kind);

/// Largest singular value. Power iteration on T*T from the normalized all-ones
/// vector, then a verification restart from a fixed perturbed vector so a
/// start orthogonal to the top singular vector cannot go unnoticed.
/// Clustered top singular values stall the iteration; see
/// PowerIterationOptions::dense_fallback_after. Throws ConvergenceError past
/// the iteration cap.
double spectral_norm(const Matrix& t, const PowerIterationOptions& opts = {});

/// Largest eigenvalue of a Hermitian matrix by shifted power iteration.
/// Only the Hermitian part of `h` is meaningful; symmetry is not checked.
double hermitian_max_eigenvalue(const Matrix& h, const PowerIterationOptions& opts = {});

// ---------------------------------------------------------------------------
// Linear solves

/// Inverse by LU with partial pivoting. Throws SingularMatrixError when a pivot
/// is below n * eps * max|entry|.
Matrix inverse(const Matrix& m);

/// ||(lambda I - T)^{-1}|| in the requested norm.
double resolvent_norm(const Matrix& t, Complex lambda, NormKind kind);

// ---------------------------------------------------------------------------
// Eigenvalues

struct Spectrum {
    /// Sorted lexicographically by (re, im); repeated per algebraic multiplicity.
    std::vector<Complex> eigenvalues;
    /// max |chi_T(lambda)| over the computed roots.
    double residual = 0.0;
};

/// Monic characteristic polynomial det(zI - T) by the Faddeev-LeVerrier recursion.
Polynomial characteristic_polynomial(const Matrix& t);

struct RootsResult {
    std::vector<Complex> roots;
    double residual = 0.0;
    std::size_t sweeps = 0;
};

/// All roots of p by Aberth-Ehrlich simultaneous iteration. Exact zero roots
/// (vanishing low-order coefficients) are split off first. Throws
/// ConvergenceError after `max_sweeps` sweeps and InvalidArgument for p = 0.
RootsResult polynomial_roots(const Polynomial& p, std::size_t max_sweeps = 10000);

/// Eigenvalues as roots of the characteristic polynomial. Ill-conditioned for
/// clustered or defective spectra; check Spectrum::residual.
Spectrum eigenvalues(const Matrix& t);

}  // namespace specrange
