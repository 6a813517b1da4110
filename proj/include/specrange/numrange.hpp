#pragma once

// Algebraic numerical range V(T) of a matrix in the algebra B(C^n, ||.||_p),
// p in {1, 2, inf}, stored as a sampled support function together with the
// boundary polygon of the corresponding half-plane intersection.
//
// All regions are outer approximations: the polygon is the intersection of
// finitely many supporting half-planes of V(T), so it contains V(T).

#include <string_view>
#include <vector>

#include "specrange/linalg.hpp"

namespace specrange {

enum class SupportMethod { closed_form, limit_scheme };

std::string_view to_string(SupportMethod method) noexcept;
SupportMethod parse_support_method(std::string_view tag);

struct SupportFunction {
    std::vector<double> angles;  // strictly increasing, within [offset, offset + 2 pi)
    std::vector<double> radii;   // radii[i] = sup Re(e^{-i angles[i]} z) over the region
    NormKind norm_kind = NormKind::L1;
    SupportMethod method = SupportMethod::closed_form;
};

struct ConvexRegion {
    SupportFunction support;
    std::vector<Complex> vertices;  // counterclockwise, deduplicated
};

struct Disk {
    Complex center;
    double radius = 0.0;
};

inline constexpr std::size_t kDefaultGrid = 360;

/// Uniform grid offset + 2 pi i / m, i = 0..m-1.
std::vector<double> uniform_angles(std::size_t m, double offset = 0.0);

/// r_theta(T) = inf_{t >= 0} ||e^{-i theta} T + t I|| - t.
///
/// closed_form: L1 uses the column Gershgorin expression, Linf the row one,
/// L2 the top eigenvalue of the Hermitian part of e^{-i theta} T.
/// limit_scheme: evaluates h(t) = ||e^{-i theta} T + t I|| - t at
/// t = max(1, ||T||) 2^k; h is nonincreasing, and the scheme stops once two
/// consecutive decrements fall below tol. Throws ConvergenceError after 60
/// doublings. Accuracy is limited by cancellation in ||.|| - t, to roughly
/// sqrt(||T||^2 eps) for L1/Linf; tol around 1e-7 (1 + ||T||) is the useful floor.
double support_radius(const Matrix& t, double theta, NormKind kind, double tol = 1e-7,
                      SupportMethod method = SupportMethod::closed_form);

/// Intersect the half-planes Re(e^{-i theta_i} z) <= r_i. Vertices closer than
/// 1e-12 (1 + scale) are merged. Throws InconsistentRegion if nothing survives.
ConvexRegion region_from_support(SupportFunction support, double scale);

/// V(T) sampled on a uniform m-grid (m >= 8).
ConvexRegion range_polygon(const Matrix& t, NormKind kind, std::size_t m = kDefaultGrid,
                           SupportMethod method = SupportMethod::closed_form, double offset = 0.0,
                           double limit_tol = -1.0);

/// Outer approximation of V(T) from the disk characterization: the
/// intersection of D(-lambda, ||T + lambda I||) over the grid points.
ConvexRegion range_disks(const Matrix& t, NormKind kind, std::span<const Complex> lambda_grid,
                         std::size_t m = kDefaultGrid);

/// Convex hull of the column Gershgorin disks, which is exactly V(T) for the
/// l1-induced norm. Support radius max_j (Re(e^{-i theta} t_jj) + sum_{k != j} |t_kj|).
ConvexRegion gershgorin_hull_l1(const Matrix& t, std::size_t m = kDefaultGrid, double offset = 0.0);

/// Dispatch used by the spectral-constant code: the Gershgorin hull for L1,
/// range_polygon with closed forms otherwise.
ConvexRegion numerical_range(const Matrix& t, NormKind kind, std::size_t m = kDefaultGrid,
                             double offset = 0.0);

/// Sampled disk D(center, radius) as a region.
ConvexRegion disk_region(const Disk& disk, std::size_t m = kDefaultGrid, double offset = 0.0);

/// Closed polygon hull of a finite point set, on a uniform grid.
ConvexRegion hull_of_points(std::span<const Complex> points, std::size_t m = kDefaultGrid);

/// nu(T) = max |z| over V(T): grid maximum of r_theta refined by golden section.
double numerical_radius(const Matrix& t, NormKind kind, std::size_t m = kDefaultGrid);

/// Sup-norm distance between support functions. For convex compact sets this
/// is the Hausdorff distance. Throws InvalidArgument if the grids differ.
double hausdorff(const ConvexRegion& a, const ConvexRegion& b);

/// Support radii increased by eps. Throws InvalidArgument for eps < 0.
ConvexRegion epsilon_hull(const ConvexRegion& a, double eps);

/// Membership in every sampled half-plane (with an optional slack).
bool region_contains(const ConvexRegion& a, Complex lambda, double tol = 0.0);
/// max(0, max_theta Re(e^{-i theta} lambda) - r_theta); a lower bound for the
/// Euclidean distance to the polygon, exact along supporting normals.
double region_distance(const ConvexRegion& a, Complex lambda);

/// Largest width over opposite angle pairs when the grid is even, else the
/// largest vertex-to-vertex distance.
double region_diameter(const ConvexRegion& a);

}  // namespace specrange
