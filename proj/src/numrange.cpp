#include "specrange/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "specrange/error.hpp"

namespace specrange {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Re(e^{-i theta} z) for a unit direction u = e^{i theta}.
inline double project(Complex u, Complex z) noexcept { return u.real() * z.real() + u.imag() * z.imag(); }

// max_j (Re(e^{-i theta} d_j) + off_j); shared by the L1 (columns) and Linf
// (rows) closed forms so that L1 on T and Linf on T^T agree bit for bit.
double gershgorin_support(std::span<const Complex> diag, std::span<const double> off, double theta) {
    const Complex rot = std::polar(1.0, -theta);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < diag.size(); ++j) best = std::max(best, off[j] + (rot * diag[j]).real());
    return best;
}

struct GershgorinData {
    std::vector<Complex> diag;
    std::vector<double> off;
};

GershgorinData column_disks(const Matrix& t) {
    const std::size_t n = t.size();
    GershgorinData g{std::vector<Complex>(n), std::vector<double>(n, 0.0)};
    for (std::size_t j = 0; j < n; ++j) {
        g.diag[j] = t(j, j);
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) s += std::abs(t(k, j));
        g.off[j] = s;
    }
    return g;
}

GershgorinData row_disks(const Matrix& t) {
    const std::size_t n = t.size();
    GershgorinData g{std::vector<Complex>(n), std::vector<double>(n, 0.0)};
    for (std::size_t k = 0; k < n; ++k) {
        g.diag[k] = t(k, k);
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) s += std::abs(t(k, j));
        g.off[k] = s;
    }
    return g;
}

double hermitian_part_support(const Matrix& t, double theta) {
    const std::size_t n = t.size();
    const Complex rot = std::polar(1.0, -theta);
    Matrix h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (rot * t(i, j) + std::conj(rot * t(j, i)));
    return hermitian_max_eigenvalue(h);
}

double limit_support(const Matrix& t, double theta, NormKind kind, double tol) {
    const Complex rot = std::polar(1.0, -theta);
    const Matrix a = rot * t;
    // l2: ||A + sI||^2 - s^2 is the top eigenvalue mu of A*A + s(A + A*), so
    // h(s) = mu / (sqrt(s^2 + mu) + s) avoids the cancellation in ||A + sI|| - s.
    const Matrix aa = adjoint(a) * a;
    const Matrix herm = a + adjoint(a);
    const auto h = [&](double s) {
        if (kind == NormKind::L2) {
            const double mu = hermitian_max_eigenvalue(aa + s * herm);
            const double root = std::sqrt(std::max(0.0, s * s + mu));
            return root + s > 0.0 ? mu / (root + s) : 0.0;
        }
        Matrix m = a;
        m.add_identity(s);
        return induced_norm(m, kind) - s;
    };
    double s = std::max(1.0, induced_norm(t, kind));
    double prev = h(s);
    int small = 0;
    for (int k = 1; k <= 60; ++k) {
        s *= 2.0;
        const double cur = h(s);
        if (prev - cur < tol) {
            if (++small >= 2) return cur;
        } else {
            small = 0;
        }
        prev = cur;
    }
    throw ConvergenceError("support_radius: limit scheme did not settle within 60 doublings",
                           {Complex{s / 2.0, prev}, Complex{s, prev}}, tol);
}

double scale_of(std::span<const double> radii) {
    double s = 0.0;
    for (double r : radii) s = std::max(s, std::abs(r));
    return s;
}

// Sutherland-Hodgman clip of a convex polygon against Re(conj(u) z) <= r.
std::vector<Complex> clip(const std::vector<Complex>& poly, Complex u, double r, double tol) {
    std::vector<Complex> out;
    const std::size_t m = poly.size();
    if (m == 0) return out;
    out.reserve(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        const Complex p = poly[i];
        const Complex q = poly[(i + 1) % m];
        const double sp = project(u, p) - r;
        const double sq = project(u, q) - r;
        const bool pin = sp <= tol;
        const bool qin = sq <= tol;
        if (pin) out.push_back(p);
        if (pin != qin) {
            const double denom = sp - sq;
            if (denom != 0.0) {
                const double lam = sp / denom;
                out.push_back(p + lam * (q - p));
            }
        }
    }
    return out;
}

std::vector<Complex> dedupe(std::vector<Complex> v, double tol) {
    std::vector<Complex> out;
    for (const auto& z : v)
        if (out.empty() || std::abs(z - out.back()) > tol) out.push_back(z);
    while (out.size() > 1 && std::abs(out.front() - out.back()) <= tol) out.pop_back();
    return out;
}

void check_nonempty(const Matrix& t) {
    if (t.empty()) throw InvalidArgument("numerical range of an empty matrix");
}

void check_grid(std::size_t m, std::size_t minimum) {
    if (m < minimum) throw InvalidArgument("angle grid needs at least " + std::to_string(minimum) + " points");
}

}  // namespace

std::string_view to_string(SupportMethod method) noexcept {
    return method == SupportMethod::closed_form ? "closed_form" : "limit_scheme";
}

SupportMethod parse_support_method(std::string_view tag) {
    if (tag == "closed_form") return SupportMethod::closed_form;
    if (tag == "limit_scheme") return SupportMethod::limit_scheme;
    throw InvalidArgument("unknown support method '" + std::string(tag) + "'");
}

std::vector<double> uniform_angles(std::size_t m, double offset) {
    std::vector<double> a(m);
    for (std::size_t i = 0; i < m; ++i) a[i] = offset + kTwoPi * static_cast<double>(i) / static_cast<double>(m);
    return a;
}

double support_radius(const Matrix& t, double theta, NormKind kind, double tol, SupportMethod method) {
    check_nonempty(t);
    if (!(tol > 0.0)) throw InvalidArgument("support_radius: tol must be positive");
    if (method == SupportMethod::limit_scheme) return limit_support(t, theta, kind, tol);
    switch (kind) {
        case NormKind::L1: {
            const auto g = column_disks(t);
            return gershgorin_support(g.diag, g.off, theta);
        }
        case NormKind::Linf: {
            const auto g = row_disks(t);
            return gershgorin_support(g.diag, g.off, theta);
        }
        case NormKind::L2:
            return hermitian_part_support(t, theta);
    }
    return 0.0;
}

ConvexRegion region_from_support(SupportFunction support, double scale) {
    const std::size_t m = support.angles.size();
    check_grid(m, 3);
    if (support.radii.size() != m) throw InvalidArgument("support function: angles and radii differ in length");
    const double rmax = std::max(scale_of(support.radii), scale);
    const double tol = 1e-12 * (1.0 + rmax);
    // Any nonempty intersection of these half-planes lies within 2 rmax of the
    // origin when the largest angular gap is at most 2 pi / 3.
    const double b = 4.0 * rmax + 1.0;
    std::vector<Complex> poly{{-b, -b}, {b, -b}, {b, b}, {-b, b}};
    for (std::size_t i = 0; i < m; ++i) {
        poly = clip(poly, std::polar(1.0, support.angles[i]), support.radii[i], tol);
        if (poly.empty()) throw InconsistentRegion("half-plane intersection is empty");
    }
    ConvexRegion region;
    region.vertices = dedupe(std::move(poly), tol);
    region.support = std::move(support);
    return region;
}

ConvexRegion range_polygon(const Matrix& t, NormKind kind, std::size_t m, SupportMethod method, double offset,
                           double limit_tol) {
    check_nonempty(t);
    check_grid(m, 8);
    SupportFunction sf{uniform_angles(m, offset), std::vector<double>(m), kind, method};
    if (method == SupportMethod::closed_form && kind != NormKind::L2) {
        const auto g = kind == NormKind::L1 ? column_disks(t) : row_disks(t);
        for (std::size_t i = 0; i < m; ++i) sf.radii[i] = gershgorin_support(g.diag, g.off, sf.angles[i]);
    } else {
        const double tol = limit_tol > 0.0 ? limit_tol : 1e-7 * (1.0 + induced_norm(t, kind));
        for (std::size_t i = 0; i < m; ++i) sf.radii[i] = support_radius(t, sf.angles[i], kind, tol, method);
    }
    return region_from_support(std::move(sf), max_abs(t));
}

ConvexRegion range_disks(const Matrix& t, NormKind kind, std::span<const Complex> lambda_grid, std::size_t m) {
    if (lambda_grid.empty()) throw InvalidArgument("range_disks: lambda grid is empty");
    check_grid(m, 8);
    std::vector<Disk> disks;
    disks.reserve(lambda_grid.size());
    for (const auto& lam : lambda_grid) {
        Matrix s = t;
        s.add_identity(lam);
        disks.push_back({-lam, induced_norm(s, kind)});
    }
    SupportFunction sf{uniform_angles(m), std::vector<double>(m), kind, SupportMethod::closed_form};
    for (std::size_t i = 0; i < m; ++i) {
        const Complex u = std::polar(1.0, sf.angles[i]);
        double r = std::numeric_limits<double>::infinity();
        for (const auto& d : disks) r = std::min(r, project(u, d.center) + d.radius);
        sf.radii[i] = r;
    }
    ConvexRegion region = region_from_support(std::move(sf), max_abs(t));
    // Half-planes of individual disks can be slack for the intersection;
    // replace them by the polygon's own support values.
    for (std::size_t i = 0; i < m; ++i) {
        const Complex u = std::polar(1.0, region.support.angles[i]);
        double r = -std::numeric_limits<double>::infinity();
        for (const auto& v : region.vertices) r = std::max(r, project(u, v));
        region.support.radii[i] = r;
    }
    return region;
}

ConvexRegion gershgorin_hull_l1(const Matrix& t, std::size_t m, double offset) {
    check_nonempty(t);
    check_grid(m, 8);
    SupportFunction sf{uniform_angles(m, offset), std::vector<double>(m), NormKind::L1, SupportMethod::closed_form};
    const auto g = column_disks(t);
    for (std::size_t i = 0; i < m; ++i) sf.radii[i] = gershgorin_support(g.diag, g.off, sf.angles[i]);
    return region_from_support(std::move(sf), max_abs(t));
}

ConvexRegion numerical_range(const Matrix& t, NormKind kind, std::size_t m, double offset) {
    if (kind == NormKind::L1) return gershgorin_hull_l1(t, m, offset);
    return range_polygon(t, kind, m, SupportMethod::closed_form, offset);
}

ConvexRegion disk_region(const Disk& disk, std::size_t m, double offset) {
    if (disk.radius < 0.0) throw InvalidArgument("disk radius must be nonnegative");
    SupportFunction sf{uniform_angles(m, offset), std::vector<double>(m), NormKind::L2, SupportMethod::closed_form};
    for (std::size_t i = 0; i < m; ++i) sf.radii[i] = project(std::polar(1.0, sf.angles[i]), disk.center) + disk.radius;
    return region_from_support(std::move(sf), std::abs(disk.center) + disk.radius);
}

ConvexRegion hull_of_points(std::span<const Complex> points, std::size_t m) {
    if (points.empty()) throw InvalidArgument("hull_of_points: no points");
    SupportFunction sf{uniform_angles(m), std::vector<double>(m), NormKind::L2, SupportMethod::closed_form};
    double scale = 0.0;
    for (const auto& p : points) scale = std::max(scale, std::abs(p));
    for (std::size_t i = 0; i < m; ++i) {
        const Complex u = std::polar(1.0, sf.angles[i]);
        double r = -std::numeric_limits<double>::infinity();
        for (const auto& p : points) r = std::max(r, project(u, p));
        sf.radii[i] = r;
    }
    return region_from_support(std::move(sf), scale);
}

double numerical_radius(const Matrix& t, NormKind kind, std::size_t m) {
    check_grid(m, 8);
    const auto f = [&](double th) { return support_radius(t, th, kind); };
    const auto angles = uniform_angles(m);
    std::size_t best_i = 0;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        const double r = f(angles[i]);
        if (r > best) {
            best = r;
            best_i = i;
        }
    }
    // Golden-section search on the bracket around the grid maximizer.
    const double h = kTwoPi / static_cast<double>(m);
    double lo = angles[best_i] - h, hi = angles[best_i] + h;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 60 && hi - lo > 1e-13; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        }
        best = std::max({best, f1, f2});
    }
    return std::max(best, 0.0);
}

double hausdorff(const ConvexRegion& a, const ConvexRegion& b) {
    const auto& sa = a.support;
    const auto& sb = b.support;
    if (sa.angles.size() != sb.angles.size())
        throw InvalidArgument("hausdorff: regions sampled on grids of different size");
    double d = 0.0;
    for (std::size_t i = 0; i < sa.angles.size(); ++i) {
        if (std::abs(sa.angles[i] - sb.angles[i]) > 1e-12)
            throw InvalidArgument("hausdorff: regions sampled on different angle grids");
        d = std::max(d, std::abs(sa.radii[i] - sb.radii[i]));
    }
    return d;
}

ConvexRegion epsilon_hull(const ConvexRegion& a, double eps) {
    if (eps < 0.0 || !std::isfinite(eps)) throw InvalidArgument("epsilon_hull: eps must be a nonnegative number");
    SupportFunction sf = a.support;
    for (auto& r : sf.radii) r += eps;
    double scale = 0.0;
    for (const auto& v : a.vertices) scale = std::max(scale, std::abs(v));
    return region_from_support(std::move(sf), scale + eps);
}

bool region_contains(const ConvexRegion& a, Complex lambda, double tol) {
    const auto& s = a.support;
    for (std::size_t i = 0; i < s.angles.size(); ++i)
        if (project(std::polar(1.0, s.angles[i]), lambda) > s.radii[i] + tol) return false;
    return true;
}

double region_distance(const ConvexRegion& a, Complex lambda) {
    const auto& s = a.support;
    double d = 0.0;
    for (std::size_t i = 0; i < s.angles.size(); ++i)
        d = std::max(d, project(std::polar(1.0, s.angles[i]), lambda) - s.radii[i]);
    return d;
}

double region_diameter(const ConvexRegion& a) {
    const auto& s = a.support;
    const std::size_t m = s.angles.size();
    if (m % 2 == 0 && m > 0) {
        const std::size_t h = m / 2;
        if (std::abs(s.angles[h] - s.angles[0] - std::numbers::pi) < 1e-9) {
            double w = 0.0;
            for (std::size_t i = 0; i < h; ++i) w = std::max(w, s.radii[i] + s.radii[i + h]);
            return std::max(w, 0.0);
        }
    }
    double d = 0.0;
    for (std::size_t i = 0; i < a.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < a.vertices.size(); ++j) d = std::max(d, std::abs(a.vertices[i] - a.vertices[j]));
    return d;
}

}  // namespace specrange
