#pragma once

// Lower bounds for the numerical range spectral constant
//
//     Psi(T) = sup_p ||p(T)|| / sup_{V(T)} |p|
//
// by structured polynomial search, plus the named experiments that compare
// searched ratios with known bounds.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "specrange/linalg.hpp"
#include "specrange/numrange.hpp"
#include "specrange/polytools.hpp"
#include "specrange/rng.hpp"

namespace specrange {

struct PsiEstimate {
    double lower_bound = 1.0;
    /// Witness in the original variable z.
    Polynomial witness;
    /// The search runs on W = (T - center) / scale; q(w) = witness(scale w + center).
    Polynomial normalized_witness;
    Complex center;
    double scale = 1.0;
    ConvexRegion region;  // V(T)
    /// ||q(W)|| and sup |q| over V(W); equal to ||p(T)|| and sup_{V(T)} |p|
    /// up to rounding.
    double numerator = 1.0;
    SupBound denominator;
    std::vector<std::pair<std::string, double>> family_log;
    std::uint64_t seed = 0;
    std::size_t evaluations = 0;
};

/// ||p(T)|| / sampled sup of |p| over `region`. Throws InvalidArgument if the
/// sampled sup is zero.
double psi_ratio(const Matrix& t, const Polynomial& p, NormKind kind, const ConvexRegion& region);

/// Deterministic search for a polynomial with a large ratio. `budget` counts
/// refinement evaluations after the candidate families are exhausted.
PsiEstimate psi_lower_bound(const Matrix& t, NormKind kind, int max_degree, int budget, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Experiments

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct ExperimentReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> parameters;
    double measured = 0.0;
    double reference_bound = 0.0;
    bool satisfied = false;
    Table details;
    std::vector<std::pair<std::string, double>> metrics;

    /// Metric by name; throws InvalidArgument if absent.
    double metric(const std::string& key) const;
};

enum class ShiftDirection { left, right };

/// J_n (left) or its transpose (right).
Matrix shift_compression(std::size_t n, ShiftDirection dir);

/// Best-of-`draws` random sign polynomial of the given length, ranked by the
/// sampled sup on the unit circle. Rudin-Shapiro when the length is 2^k.
SignPolynomial flat_sign_polynomial(std::size_t length, std::uint64_t seed, int draws = 200);

ExperimentReport jordan_experiment(std::size_t n, NormKind kind, std::uint64_t seed = 0);
ExperimentReport direct_sum_example(NormKind p_kind, int degree = 63, std::size_t m = 64);
ExperimentReport two_by_two_l1_suite(std::size_t samples, std::uint64_t seed, bool inject_cos = true);
ExperimentReport cos_example();
ExperimentReport epsilon_hull_check(const Matrix& t, NormKind kind, double eps, std::size_t trials,
                                    std::uint64_t seed);
ExperimentReport bohr_check(const Matrix& t, NormKind kind, std::size_t trials, std::uint64_t seed);
/// Throws InvalidArgument for alpha == 0.
ExperimentReport affine_invariance_check(const Matrix& t, NormKind kind, Complex alpha, Complex beta,
                                         const Polynomial& p);
/// Hausdorff distance between the Gershgorin hull and the limit-scheme L1 range
/// on `samples` random matrices.
ExperimentReport gershgorin_experiment(std::size_t samples, std::uint64_t seed, std::size_t m = 720);
/// L1 on T against Linf on T^T, both for support radii and searched bounds.
ExperimentReport duality_experiment(std::size_t samples, std::uint64_t seed);

/// Random complex Gaussian matrix with entries scaled by 1 / sqrt(n).
Matrix random_matrix(std::size_t n, SplitMix64& rng);
/// Random polynomial of the given degree with complex Gaussian coefficients.
Polynomial random_polynomial(std::size_t degree, SplitMix64& rng);

}  // namespace specrange
