#include "specrange/psi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "specrange/error.hpp"
#include "specrange/rng.hpp"

namespace specrange {

double psi_ratio(const Matrix& t, const Polynomial& p, NormKind kind, const ConvexRegion& region) {
    const double den = sup_on_region(p, region).sampled.value;
    if (!(den > 0.0)) throw InvalidArgument("psi_ratio: polynomial vanishes on the region samples");
    return induced_norm(poly_apply(p, t), kind) / den;
}

namespace {

constexpr double kImprove = 1e-12;

// Evaluates ||q(W)|| / max_j |q(z_j)| for coefficient vectors of fixed length,
// with cheap single-coefficient updates for the refinement phase.
class RatioEvaluator {
   public:
    RatioEvaluator(const Matrix& w, NormKind kind, std::vector<Complex> pts, std::size_t degree)
        : kind_(kind), pts_(std::move(pts)), len_(degree + 1) {
        powers_.reserve(len_);
        powers_.push_back(Matrix::identity(w.size()));
        for (std::size_t k = 1; k < len_; ++k) powers_.push_back(powers_.back() * w);
        pt_pow_.resize(pts_.size() * len_);
        for (std::size_t j = 0; j < pts_.size(); ++j) {
            Complex z = 1.0;
            for (std::size_t k = 0; k < len_; ++k) {
                pt_pow_[j * len_ + k] = z;
                z *= pts_[j];
            }
        }
    }

    std::size_t length() const noexcept { return len_; }

    double ratio(const std::vector<Complex>& a) const {
        Matrix m(powers_.front().size());
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != Complex{0.0}) m.add_scaled(powers_[k], a[k]);
        double den = 0.0;
        for (std::size_t j = 0; j < pts_.size(); ++j) {
            Complex v = 0.0;
            for (std::size_t k = a.size(); k-- > 0;) v = v * pts_[j] + a[k];
            den = std::max(den, std::abs(v));
        }
        return finish(m, den);
    }

    struct State {
        std::vector<Complex> coeffs;
        Matrix value;
        std::vector<Complex> samples;
        double ratio = 0.0;
        std::size_t hot = 0;  // sample that rejected the previous step
    };

    State make_state(std::vector<Complex> a) const {
        a.resize(len_, 0.0);
        State s{a, Matrix(powers_.front().size()), std::vector<Complex>(pts_.size(), 0.0), 0.0, 0};
        for (std::size_t k = 0; k < len_; ++k) s.value.add_scaled(powers_[k], a[k]);
        double den = 0.0;
        for (std::size_t j = 0; j < pts_.size(); ++j) {
            Complex v = 0.0;
            for (std::size_t k = 0; k < len_; ++k) v += a[k] * pt_pow_[j * len_ + k];
            s.samples[j] = v;
            den = std::max(den, std::abs(v));
        }
        s.ratio = finish(s.value, den);
        return s;
    }

    /// Applies coeffs[k] += d if that raises the ratio above
    /// ratio (1 + kImprove). A trial is rejected as soon as one sample shows
    /// the denominator is too large, starting from the last rejecting sample.
    bool try_improve(State& s, std::size_t k, Complex d, Matrix& scratch) const {
        scratch = s.value;
        scratch.add_scaled(powers_[k], d);
        double num = 0.0;
        try {
            num = induced_norm(scratch, kind_);
        } catch (const ConvergenceError&) {
            return false;
        }
        if (!(num > 0.0)) return false;
        const double limit = num / (s.ratio * (1.0 + kImprove));
        const double limit2 = limit * limit;
        const auto at = [&](std::size_t j) { return s.samples[j] + d * pt_pow_[j * len_ + k]; };
        if (std::norm(at(s.hot)) >= limit2) return false;
        double den2 = 0.0;
        for (std::size_t j = 0; j < pts_.size(); ++j) {
            const double v2 = std::norm(at(j));
            if (v2 >= limit2) {
                s.hot = j;
                return false;
            }
            den2 = std::max(den2, v2);
        }
        for (std::size_t j = 0; j < pts_.size(); ++j) s.samples[j] = at(j);
        s.coeffs[k] += d;
        std::swap(s.value, scratch);
        s.ratio = num / std::sqrt(den2);
        return true;
    }

   private:
    double finish(const Matrix& m, double den) const {
        if (!(den > 0.0)) return 0.0;
        try {
            return induced_norm(m, kind_) / den;
        } catch (const ConvergenceError&) {
            return 0.0;
        }
    }

    NormKind kind_;
    std::vector<Complex> pts_;
    std::size_t len_;
    std::vector<Matrix> powers_;
    std::vector<Complex> pt_pow_;
};

std::vector<Complex> coeffs_of(const Polynomial& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

// Chebyshev T_k(u) in the monomial basis of u.
std::vector<Polynomial> chebyshev(std::size_t degree) {
    std::vector<Polynomial> t{Polynomial{1.0}, Polynomial{0.0, 1.0}};
    const Polynomial two_u{0.0, 2.0};
    while (t.size() <= degree) t.push_back(two_u * t[t.size() - 1] - t[t.size() - 2]);
    t.resize(degree + 1);
    return t;
}

std::pair<Complex, Complex> farthest_pair(const std::vector<Complex>& v) {
    std::pair<Complex, Complex> best{v.front(), v.front()};
    double d = -1.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (std::abs(v[i] - v[j]) > d) {
                d = std::abs(v[i] - v[j]);
                best = {v[i], v[j]};
            }
    return best;
}


}  // namespace

PsiEstimate psi_lower_bound(const Matrix& t, NormKind kind, int max_degree, int budget, std::uint64_t seed) {
    if (t.empty()) throw InvalidArgument("psi_lower_bound: matrix is empty");
    if (max_degree < 1) throw InvalidArgument("psi_lower_bound: max_degree must be at least 1");
    if (budget < 1) throw InvalidArgument("psi_lower_bound: budget must be at least 1");
    const auto degree = static_cast<std::size_t>(max_degree);

    PsiEstimate est;
    est.seed = seed;
    est.region = numerical_range(t, kind, kDefaultGrid);

    const auto& verts = est.region.vertices;
    double xlo = verts.front().real(), xhi = xlo, ylo = verts.front().imag(), yhi = ylo;
    for (const auto& v : verts) {
        xlo = std::min(xlo, v.real());
        xhi = std::max(xhi, v.real());
        ylo = std::min(ylo, v.imag());
        yhi = std::max(yhi, v.imag());
    }
    const Complex c{0.5 * (xlo + xhi), 0.5 * (ylo + yhi)};
    double s = 0.0;
    for (const auto& v : verts) s = std::max(s, std::abs(v - c));
    est.center = c;

    if (s <= 1e-12 * (1.0 + std::abs(c))) {
        // V(T) is a point, so T is a multiple of the identity and Psi(T) = 1.
        est.scale = 1.0;
        est.witness = est.normalized_witness = Polynomial{1.0};
        est.numerator = 1.0;
        est.denominator = {1.0, SupKind::exact_sampled, 1, 1.0};
        est.lower_bound = 1.0;
        est.family_log.emplace_back("constant", 1.0);
        return est;
    }
    est.scale = s;

    Matrix w = t;
    w.add_identity(-c);
    w *= Complex{1.0 / s};
    const ConvexRegion region_w = numerical_range(w, kind, kDefaultGrid);
    const RatioEvaluator eval(w, kind, boundary_samples(region_w, degree), degree);

    std::vector<Complex> best_coeffs{1.0};
    double best = 0.0;
    auto offer = [&](double& family_best, const std::vector<Complex>& a) {
        const double r = eval.ratio(a);
        family_best = std::max(family_best, r);
        if (r > best * (1.0 + kImprove)) {
            best = r;
            best_coeffs = a;
        }
    };
    auto run_family = [&](const std::string& family, const std::vector<Polynomial>& candidates) {
        double fb = 0.0;
        for (const auto& q : candidates) {
            if (q.degree() > degree) continue;
            offer(fb, coeffs_of(q.trimmed()));
        }
        est.family_log.emplace_back(family, fb);
    };

    run_family("constant", {Polynomial{1.0}});

    {
        std::vector<Polynomial> mono;
        for (std::size_t k = 1; k <= degree; ++k) mono.push_back(Polynomial::monomial(k));
        run_family("monomial", mono);
    }

    {
        std::vector<Polynomial> aff;
        aff.push_back(Polynomial{c / s, 1.0});  // z itself, in w coordinates
        try {
            for (const auto& lam : eigenvalues(w).eigenvalues) aff.push_back(Polynomial{-lam, 1.0});
        } catch (const ConvergenceError&) {
        }
        const auto& vw = region_w.vertices;
        const std::size_t step = std::max<std::size_t>(1, vw.size() / 32);
        for (std::size_t i = 0; i < vw.size(); i += step) aff.push_back(Polynomial{-vw[i], 1.0});
        run_family("affine", aff);
    }

    {
        const auto [a, b] = farthest_pair(region_w.vertices);
        std::vector<Polynomial> cheb;
        if (std::abs(b - a) > 1e-12) {
            const Complex alpha = 2.0 / (b - a);
            const Complex beta = -(a + b) / (b - a);
            const auto tk = chebyshev(degree);
            for (std::size_t k = 1; k <= degree; ++k) cheb.push_back(tk[k].compose_affine(alpha, beta));
        }
        run_family("chebyshev", cheb);
    }

    {
        std::vector<Polynomial> signs;
        for (int k = 1; k <= 20 && (std::size_t{1} << k) <= degree + 1; ++k) {
            const auto [p, q] = rudin_shapiro(k);
            signs.push_back(p.polynomial());
            signs.push_back(q.polynomial());
        }
        for (std::size_t len = 2; len <= degree + 1; ++len)
            for (std::uint64_t i = 0; i < 4; ++i)
                signs.push_back(random_signs(len, derive_seed(seed, len * 16 + i)).polynomial());
        run_family("sign", signs);
    }

    if (degree >= 2) {
        const int d = static_cast<int>(std::min<std::size_t>(degree, 24) / 2 * 2);
        const auto tc = taylor_cos(d, 1.0).poly;
        std::vector<Polynomial> cosines;
        for (double kappa : {0.5, 1.0, 1.5, 2.0}) cosines.push_back(tc.compose_affine(kappa * s, kappa * c));
        for (double kappa : {1.0, 2.0, 3.0}) cosines.push_back(tc.compose_affine(kappa, 0.0));
        run_family("cos", cosines);
    }

    // Coordinate search on the incumbent.
    auto state = eval.make_state(best_coeffs);
    double scale_c = 0.0;
    for (const auto& a : state.coeffs) scale_c = std::max(scale_c, std::abs(a));
    double delta = 0.25 * scale_c;
    const Complex dirs[] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
    Matrix scratch;
    std::size_t evals = 0;
    const double before = state.ratio;
    while (evals < static_cast<std::size_t>(budget) && delta > 1e-12 * scale_c) {
        bool improved = false;
        for (std::size_t k = 0; k < eval.length() && evals < static_cast<std::size_t>(budget); ++k) {
            for (const auto& dir : dirs) {
                if (evals >= static_cast<std::size_t>(budget)) break;
                ++evals;
                if (eval.try_improve(state, k, delta * dir, scratch)) improved = true;
            }
        }
        if (!improved) delta *= 0.5;
    }
    est.family_log.emplace_back("refine", state.ratio);
    est.evaluations = evals;
    if (state.ratio > before * (1.0 + kImprove)) best_coeffs = state.coeffs;

    const Polynomial q = Polynomial(best_coeffs).trimmed();
    est.normalized_witness = q;
    est.witness = q.compose_affine(1.0 / s, -c / s);
    est.numerator = induced_norm(poly_apply(q, w), kind);
    est.denominator = sup_on_region(q, region_w, max_degree).sampled;
    est.lower_bound = est.numerator / est.denominator.value;
    return est;
}

}  // namespace specrange
