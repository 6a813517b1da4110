#pragma once

// Sign polynomials, suprema of |p| on circles and convex regions, and the
// Taylor surrogate for cos.

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "specrange/linalg.hpp"
#include "specrange/numrange.hpp"

namespace specrange {

enum class SignConstruction { rudin_shapiro, random };

std::string_view to_string(SignConstruction c) noexcept;

struct SignPolynomial {
    std::vector<int> signs;  // coefficient of z^k, each +1 or -1
    SignConstruction construction = SignConstruction::rudin_shapiro;
    std::uint64_t seed = 0;

    std::size_t length() const noexcept { return signs.size(); }
    Polynomial polynomial() const;
};

enum class SupKind { exact_sampled, certified_upper };

std::string_view to_string(SupKind k) noexcept;

struct SupBound {
    double value = 0.0;
    SupKind kind = SupKind::exact_sampled;
    std::size_t samples = 0;
    double inflation = 1.0;
};

struct SupPair {
    SupBound sampled;
    SupBound certified;
};

/// (P_k, Q_k) of length 2^k. Throws InvalidArgument unless 0 <= k <= 20.
std::pair<SignPolynomial, SignPolynomial> rudin_shapiro(int k);

/// Uniformly random signs of the given length.
SignPolynomial random_signs(std::size_t length, std::uint64_t seed);

/// max |p| over m equispaced points of |z| = r. The certified value divides by
/// 1 - pi deg / m (Bernstein). Requires r > 0 and m > pi deg.
SupPair sup_on_circle(const Polynomial& p, double r, std::size_t m);

/// Boundary points of A used by sup_on_region: each polygon edge is split
/// into ceil(length / h) pieces with h = diameter / (64 max(1, degree)).
/// `spacing`, when given, receives the largest piece length.
std::vector<Complex> boundary_samples(const ConvexRegion& a, std::size_t degree, double* spacing = nullptr);

/// max |p| over the boundary polygon of A with spacing
/// <= diameter / (64 max(1, deg)), or a finer one when resolution_degree
/// exceeds deg(p).
///
/// Certified value: sampled + (h / 2) deg B_rho / rho where h is the largest
/// spacing, rho = diameter / 100 and B_rho = sum |a_k| (R + rho)^k with R the
/// largest vertex modulus. B_rho bounds |p| on the rho-enlargement, so by
/// Cauchy deg B_rho / rho bounds |p'| along the boundary.
SupPair sup_on_region(const Polynomial& p, const ConvexRegion& a, int resolution_degree = -1);

struct TaylorCos {
    Polynomial poly;
    double remainder = 0.0;  // bound on |cos z - poly(z)| for |z| <= R
};

/// Degree-d Taylor polynomial of cos at 0. d even, d >= 2, R >= 0.
TaylorCos taylor_cos(int d, double r);

}  // namespace specrange
