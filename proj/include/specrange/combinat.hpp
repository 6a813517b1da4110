#pragma once

// Schreier-type norms on finitely supported sequences and the cut-shift.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specrange/linalg.hpp"
#include "specrange/psi.hpp"

namespace specrange {

inline constexpr std::size_t kMaxSequenceIndex = 1'000'000;
inline constexpr std::size_t kMaxBruteForceSupport = 24;

/// Finitely supported sequence indexed from 1.
class SparseVector {
   public:
    SparseVector() = default;
    /// Sorts by index, drops zeros. Throws InvalidArgument on index 0,
    /// indices above kMaxSequenceIndex, duplicates or non-finite values.
    explicit SparseVector(std::vector<std::pair<std::size_t, Complex>> pairs);

    static SparseVector unit(std::size_t index, Complex value = 1.0);

    std::span<const std::pair<std::size_t, Complex>> pairs() const noexcept { return pairs_; }
    std::size_t support_size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }
    Complex operator[](std::size_t index) const noexcept;

    friend SparseVector operator+(const SparseVector& a, const SparseVector& b);
    friend SparseVector operator*(Complex s, const SparseVector& a);
    friend bool operator==(const SparseVector&, const SparseVector&) = default;

   private:
    std::vector<std::pair<std::size_t, Complex>> pairs_;
};

double l1_norm(const SparseVector& x);

struct SpreadingFamily {
    std::string name;
    /// Called with a strictly increasing list of positive indices.
    std::function<bool(std::span<const std::size_t>)> admissible;
    /// Enables the closed-form norm; only set for the Schreier family.
    bool schreier = false;

    static SpreadingFamily schreier_family();
};

/// Violations of the spreading-family axioms on sets within [1, max_index]:
/// singletons, right-spreads of random admissible sets, and one admissible
/// set per cardinality up to `max_cardinality`. Empty when all hold.
std::vector<std::string> check_spreading(const SpreadingFamily& family, std::size_t max_cardinality,
                                         std::size_t max_index, std::size_t trials, std::uint64_t seed);

/// sup over admissible F of sum_{i in F} |x_i|. Closed form for Schreier,
/// otherwise enumeration of subsets of the support (exact for families closed
/// under subsets). Throws InvalidArgument past kMaxBruteForceSupport.
double family_norm(const SparseVector& x, const SpreadingFamily& family);

/// max over m >= 1 of the sum of the min(m, count) largest |x_i| with i >= m.
double schreier_norm(const SparseVector& x);

/// Enumeration over subsets of the support.
double brute_force_norm(const SparseVector& x, const SpreadingFamily& family);

struct CutShiftSpec {
    std::size_t n = 1;
    std::size_t k = 1;

    /// Window {2n - 1, ..., 3n - 2}, the smallest Schreier-admissible one.
    static CutShiftSpec schreier(std::size_t n);
};

/// Moves x_k..x_{k+n-1} to positions k+1..k+n and drops everything else.
SparseVector cut_shift_apply(const CutShiftSpec& shift, const SparseVector& x);

/// f(S_n) e_{2n-1} for a flat sign polynomial f of length n + 1, compared with
/// the Schreier norm bound n.
ExperimentReport cut_shift_experiment(std::size_t n, std::uint64_t seed = 0);

}  // namespace specrange
