#include "specrange/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "specrange/error.hpp"

namespace specrange {

NormKind dual(NormKind kind) noexcept {
    switch (kind) {
        case NormKind::L1:
            return NormKind::Linf;
        case NormKind::Linf:
            return NormKind::L1;
        case NormKind::L2:
            break;
    }
    return NormKind::L2;
}

std::string_view to_string(NormKind kind) noexcept {
    switch (kind) {
        case NormKind::L1:
            return "l1";
        case NormKind::L2:
            return "l2";
        case NormKind::Linf:
            return "linf";
    }
    return "l1";
}

NormKind parse_norm_kind(std::string_view tag) {
    std::string t(tag);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "l1") return NormKind::L1;
    if (t == "l2") return NormKind::L2;
    if (t == "linf") return NormKind::Linf;
    throw InvalidArgument("unsupported norm tag '" + std::string(tag) + "' (expected l1, l2 or linf)");
}

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t n) : n_(n), a_(n * n, Complex{0.0}) {}

Matrix::Matrix(std::size_t n, std::vector<Complex> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n_ * n_)
        throw InvalidArgument("matrix of dimension " + std::to_string(n_) + " needs " + std::to_string(n_ * n_) +
                              " entries, got " + std::to_string(a_.size()));
    for (const auto& z : a_)
        if (!is_finite(z)) throw InvalidArgument("matrix entries must be finite");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) : n_(rows.size()) {
    a_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw InvalidArgument("matrix rows must all have length " + std::to_string(n_));
        for (const auto& z : row) {
            if (!is_finite(z)) throw InvalidArgument("matrix entries must be finite");
            a_.push_back(z);
        }
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::jordan(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const Complex> d) {
    Matrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!is_finite(d[i])) throw InvalidArgument("matrix entries must be finite");
        m(i, i) = d[i];
    }
    return m;
}

static void check_same_size(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size())
        throw InvalidArgument("dimension mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    check_same_size(*this, rhs);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    check_same_size(*this, rhs);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

Matrix& Matrix::operator*=(Complex s) noexcept {
    for (auto& z : a_) z *= s;
    return *this;
}

Matrix& Matrix::add_scaled(const Matrix& rhs, Complex s) {
    check_same_size(*this, rhs);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += s * rhs.a_[i];
    return *this;
}

Matrix& Matrix::add_identity(Complex s) noexcept {
    for (std::size_t i = 0; i < n_; ++i) a_[i * n_ + i] += s;
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    check_same_size(lhs, rhs);
    const std::size_t n = lhs.n_;
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex* row = &out.a_[i * n];
        for (std::size_t k = 0; k < n; ++k) {
            const Complex lik = lhs.a_[i * n + k];
            if (lik == Complex{0.0}) continue;
            const Complex* rrow = &rhs.a_[k * n];
            for (std::size_t j = 0; j < n; ++j) row[j] += lik * rrow[j];
        }
    }
    return out;
}

std::vector<Complex> Matrix::apply(std::span<const Complex> x) const {
    std::vector<Complex> y(n_, Complex{0.0});
    for (std::size_t i = 0; i < n_; ++i) {
        Complex s{0.0};
        for (std::size_t j = 0; j < n_; ++j) s += a_[i * n_ + j] * x[j];
        y[i] = s;
    }
    return y;
}

std::vector<Complex> Matrix::apply_adjoint(std::span<const Complex> x) const {
    std::vector<Complex> y(n_, Complex{0.0});
    for (std::size_t i = 0; i < n_; ++i) {
        const Complex xi = x[i];
        for (std::size_t j = 0; j < n_; ++j) y[j] += std::conj(a_[i * n_ + j]) * xi;
    }
    return y;
}

Matrix transpose(const Matrix& t) {
    const std::size_t n = t.size();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(j, i) = t(i, j);
    return out;
}

Matrix adjoint(const Matrix& t) {
    const std::size_t n = t.size();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(t(i, j));
    return out;
}

double max_abs(const Matrix& t) noexcept {
    double m = 0.0;
    for (const auto& z : t.entries()) m = std::max(m, std::abs(z));
    return m;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw InvalidArgument("polynomial needs at least one coefficient");
    for (const auto& z : c_)
        if (!is_finite(z)) throw InvalidArgument("polynomial coefficients must be finite");
}

Polynomial Polynomial::monomial(std::size_t k, Complex c) {
    std::vector<Complex> v(k + 1, Complex{0.0});
    v[k] = c;
    return Polynomial(std::move(v));
}

std::size_t Polynomial::degree() const noexcept {
    std::size_t d = c_.size() - 1;
    while (d > 0 && c_[d] == Complex{0.0}) --d;
    return d;
}

bool Polynomial::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](Complex z) { return z == Complex{0.0}; });
}

Complex Polynomial::operator()(Complex z) const noexcept {
    Complex acc{0.0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() == 1) return Polynomial();
    std::vector<Complex> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::compose_affine(Complex alpha, Complex beta) const {
    // Horner in polynomial arithmetic: acc <- acc * (alpha z + beta) + c_k.
    const Polynomial lin({beta, alpha});
    Polynomial acc = Polynomial::constant(c_.back());
    for (std::size_t k = c_.size() - 1; k-- > 0;) {
        acc = acc * lin;
        acc.c_[0] += c_[k];
    }
    return acc;
}

Polynomial Polynomial::trimmed() const {
    return Polynomial(std::vector<Complex>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(degree() + 1)));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Complex> r(std::max(a.c_.size(), b.c_.size()), Complex{0.0});
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Complex{-1.0} * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Complex> r(a.c_.size() + b.c_.size() - 1, Complex{0.0});
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
}

Polynomial operator*(Complex s, Polynomial p) {
    for (auto& z : p.c_) z *= s;
    return p;
}

Matrix poly_apply(const Polynomial& p, const Matrix& t) {
    const auto c = p.coeffs();
    const std::size_t d = p.degree();
    Matrix acc(t.size());
    acc.add_identity(c[d]);
    for (std::size_t k = d; k-- > 0;) {
        acc = acc * t;
        acc.add_identity(c[k]);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Norms

namespace {

double vec_norm(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

std::vector<Complex> perturbed_start(std::size_t n) {
    // Fixed, irregular, and nonzero in every component.
    std::vector<Complex> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i + 1);
        v[i] = Complex{1.0 + 0.5 * std::sin(1.7 * x + 0.3), 0.25 * std::cos(2.3 * x)};
    }
    return v;
}

// Power iteration for the top eigenvalue of a positive semidefinite Hermitian
// operator given as a matvec. Stops on a small residual only: a slowly
// creeping Rayleigh quotient looks converged long before it is.
struct Stalled {};

template <class Apply>
double psd_power_iteration(std::size_t n, Apply&& apply, std::vector<Complex> v, double scale,
                           const PowerIterationOptions& opts, const char* what) {
    double nv = vec_norm(v);
    for (auto& z : v) z /= nv;
    double residual = 0.0;
    for (std::size_t it = 0; it < opts.max_iterations; ++it) {
        if (opts.dense_fallback_after > 0 && it >= opts.dense_fallback_after) throw Stalled{};
        std::vector<Complex> w = apply(v);
        double mu = 0.0;
        for (std::size_t i = 0; i < n; ++i) mu += (std::conj(v[i]) * w[i]).real();
        const double nw = vec_norm(w);
        if (nw == 0.0) return 0.0;
        double r2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) r2 += std::norm(w[i] - mu * v[i]);
        residual = std::sqrt(r2);
        const double s = std::max(scale, std::abs(mu));
        if (residual <= opts.rel_tol * s) return mu;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / nw;
    }
    throw ConvergenceError(std::string(what) + ": power iteration did not converge", std::move(v), residual);
}

// Largest eigenvalue of the Hermitian part of h.
double dense_hermitian_max(const Matrix& h) {
    const auto n = static_cast<Eigen::Index>(h.size());
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j);
            a(i, j) = 0.5 * (h(ii, jj) + std::conj(h(jj, ii)));
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("dense Hermitian eigensolver failed", {}, std::numeric_limits<double>::infinity());
    return es.eigenvalues().maxCoeff();
}

}  // namespace

double spectral_norm(const Matrix& t, const PowerIterationOptions& opts) {
    const std::size_t n = t.size();
    if (n == 0) return 0.0;
    const auto apply = [&](const std::vector<Complex>& v) { return t.apply_adjoint(t.apply(v)); };
    double fro2 = 0.0;
    for (const auto& z : t.entries()) fro2 += std::norm(z);
    if (fro2 == 0.0) return 0.0;
    const double scale = 0.0;  // relative to the Rayleigh quotient itself
    try {
        const double a =
            psd_power_iteration(n, apply, std::vector<Complex>(n, Complex{1.0}), scale, opts, "spectral_norm");
        const double b = psd_power_iteration(n, apply, perturbed_start(n), scale, opts, "spectral_norm");
        return std::sqrt(std::max({a, b, 0.0}));
    } catch (const Stalled&) {
        return std::sqrt(std::max(dense_hermitian_max(adjoint(t) * t), 0.0));
    }
}

double hermitian_max_eigenvalue(const Matrix& h, const PowerIterationOptions& opts) {
    const std::size_t n = h.size();
    if (n == 0) return 0.0;
    // Shift by a Gershgorin bound on the spectral radius so H + sI is PSD.
    double shift = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += std::abs(h(i, j));
        shift = std::max(shift, row);
    }
    if (shift == 0.0) return 0.0;
    const auto apply = [&](const std::vector<Complex>& v) {
        std::vector<Complex> w = h.apply(v);
        for (std::size_t i = 0; i < n; ++i) w[i] += shift * v[i];
        return w;
    };
    try {
        const double a = psd_power_iteration(n, apply, std::vector<Complex>(n, Complex{1.0}), shift, opts,
                                             "hermitian_max_eigenvalue");
        const double b = psd_power_iteration(n, apply, perturbed_start(n), shift, opts, "hermitian_max_eigenvalue");
        return std::max(a, b) - shift;
    } catch (const Stalled&) {
        return dense_hermitian_max(h);
    }
}

double induced_norm(const Matrix& t, NormKind kind) {
    const std::size_t n = t.size();
    switch (kind) {
        case NormKind::L1: {
            double best = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < n; ++k) s += std::abs(t(k, j));
                best = std::max(best, s);
            }
            return best;
        }
        case NormKind::Linf: {
            double best = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                double s = 0.0;
                for (std::size_t j = 0; j < n; ++j) s += std::abs(t(k, j));
                best = std::max(best, s);
            }
            return best;
        }
        case NormKind::L2:
            return spectral_norm(t);
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// LU

Matrix inverse(const Matrix& m) {
    const std::size_t n = m.size();
    Matrix lu = m;
    Matrix inv = Matrix::identity(n);
    const double tiny = static_cast<double>(std::max<std::size_t>(n, 1)) * std::numeric_limits<double>::epsilon() *
                        std::max(max_abs(m), std::numeric_limits<double>::min());
    // Gauss-Jordan with partial pivoting, carrying the identity along.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(lu(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(lu(r, col));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best <= tiny) throw SingularMatrixError("matrix is numerically singular", best);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(lu(col, j), lu(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        }
        const Complex d = lu(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            lu(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Complex f = lu(r, col);
            if (f == Complex{0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) {
                lu(r, j) -= f * lu(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

double resolvent_norm(const Matrix& t, Complex lambda, NormKind kind) {
    Matrix m = Complex{-1.0} * t;
    m.add_identity(lambda);
    return induced_norm(inverse(m), kind);
}

// ---------------------------------------------------------------------------
// Eigenvalues

Polynomial characteristic_polynomial(const Matrix& t) {
    const std::size_t n = t.size();
    // c[n] = 1; M_k = T M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(T M_k) / k.
    std::vector<Complex> c(n + 1, Complex{0.0});
    c[n] = 1.0;
    Matrix mk(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = t * mk;
        mk.add_identity(c[n - k + 1]);
        const Matrix tm = t * mk;
        Complex tr{0.0};
        for (std::size_t i = 0; i < n; ++i) tr += tm(i, i);
        c[n - k] = -tr / static_cast<double>(k);
    }
    return Polynomial(std::move(c));
}

RootsResult polynomial_roots(const Polynomial& p, std::size_t max_sweeps) {
    if (p.is_zero()) throw InvalidArgument("polynomial_roots: the zero polynomial has no finite root set");
    RootsResult out;
    const std::size_t deg = p.degree();
    const auto all = p.coeffs();
    std::size_t zeros = 0;
    while (zeros < deg && all[zeros] == Complex{0.0}) ++zeros;
    out.roots.assign(zeros, Complex{0.0});
    const std::vector<Complex> a(all.begin() + static_cast<std::ptrdiff_t>(zeros),
                                 all.begin() + static_cast<std::ptrdiff_t>(deg + 1));
    const std::size_t d = a.size() - 1;
    if (d == 0) return out;
    if (d == 1) {
        out.roots.push_back(-a[0] / a[1]);
    } else {
        const double eps = std::numeric_limits<double>::epsilon();
        // Start on a circle at the geometric mean of the root moduli, rotated
        // off the real axis to avoid symmetric stalls.
        const double rho = std::pow(std::abs(a[0]) / std::abs(a[d]), 1.0 / static_cast<double>(d));
        std::vector<Complex> z(d);
        for (std::size_t k = 0; k < d; ++k)
            z[k] = std::polar(rho, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.4);
        std::vector<char> done(d, 0);
        std::size_t sweep = 0;
        for (; sweep < max_sweeps; ++sweep) {
            bool all_done = true;
            for (std::size_t i = 0; i < d; ++i) {
                if (done[i]) continue;
                Complex val = a[d], der{0.0};
                double bound = std::abs(a[d]);
                const double az = std::abs(z[i]);
                for (std::size_t k = d; k-- > 0;) {
                    der = der * z[i] + val;
                    val = val * z[i] + a[k];
                    bound = bound * az + std::abs(a[k]);
                }
                if (std::abs(val) <= 4.0 * static_cast<double>(d) * eps * bound) {
                    done[i] = 1;
                    continue;
                }
                all_done = false;
                Complex sum{0.0};
                for (std::size_t j = 0; j < d; ++j)
                    if (j != i) sum += 1.0 / (z[i] - z[j]);
                Complex w;
                if (der == Complex{0.0}) {
                    w = Complex{1e-3 * (1.0 + az), 1e-3 * (1.0 + az)};
                } else {
                    const Complex ratio = val / der;
                    w = ratio / (1.0 - ratio * sum);
                }
                z[i] -= w;
                if (std::abs(w) <= eps * std::abs(z[i])) done[i] = 1;
            }
            if (all_done) break;
        }
        if (sweep == max_sweeps) {
            double res = 0.0;
            for (const auto& r : z) res = std::max(res, std::abs(p(r)));
            throw ConvergenceError("Aberth-Ehrlich iteration did not converge", z, res);
        }
        out.sweeps = sweep;
        out.roots.insert(out.roots.end(), z.begin(), z.end());
    }
    for (const auto& r : out.roots) out.residual = std::max(out.residual, std::abs(p(r)));
    return out;
}

Spectrum eigenvalues(const Matrix& t) {
    if (t.size() > kMaxDimension) throw InvalidArgument("eigenvalues: dimension exceeds 256");
    const Polynomial chi = characteristic_polynomial(t);
    RootsResult r = polynomial_roots(chi);
    std::sort(r.roots.begin(), r.roots.end(), [](Complex x, Complex y) {
        return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
    });
    return {std::move(r.roots), r.residual};
}

}  // namespace specrange
