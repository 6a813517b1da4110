#include "specrange/combinat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <queue>
#include <sstream>
#include <string>

#include "specrange/error.hpp"
#include "specrange/polytools.hpp"
#include "specrange/rng.hpp"

namespace specrange {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

}  // namespace

SparseVector::SparseVector(std::vector<std::pair<std::size_t, Complex>> pairs) {
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [idx, val] = pairs[i];
        if (idx == 0) throw InvalidArgument("sparse vector: indices start at 1");
        if (idx > kMaxSequenceIndex)
            throw InvalidArgument("sparse vector: index " + std::to_string(idx) + " exceeds the cap");
        if (i > 0 && pairs[i - 1].first == idx)
            throw InvalidArgument("sparse vector: duplicate index " + std::to_string(idx));
        if (!is_finite(val)) throw InvalidArgument("sparse vector: non-finite value");
        if (val != Complex{0.0}) pairs_.push_back(pairs[i]);
    }
}

SparseVector SparseVector::unit(std::size_t index, Complex value) { return SparseVector({{index, value}}); }

Complex SparseVector::operator[](std::size_t index) const noexcept {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), index,
                               [](const auto& p, std::size_t i) { return p.first < i; });
    return it != pairs_.end() && it->first == index ? it->second : Complex{0.0};
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
    std::vector<std::pair<std::size_t, Complex>> out;
    auto i = a.pairs_.begin(), j = b.pairs_.begin();
    while (i != a.pairs_.end() || j != b.pairs_.end()) {
        if (j == b.pairs_.end() || (i != a.pairs_.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.pairs_.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            out.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return SparseVector(std::move(out));
}

SparseVector operator*(Complex s, const SparseVector& a) {
    std::vector<std::pair<std::size_t, Complex>> out(a.pairs_.begin(), a.pairs_.end());
    for (auto& p : out) p.second *= s;
    return SparseVector(std::move(out));
}

double l1_norm(const SparseVector& x) {
    double s = 0.0;
    for (const auto& p : x.pairs()) s += std::abs(p.second);
    return s;
}

SpreadingFamily SpreadingFamily::schreier_family() {
    return {"schreier", [](std::span<const std::size_t> f) { return f.empty() || f.size() <= f.front(); }, true};
}

std::vector<std::string> check_spreading(const SpreadingFamily& family, std::size_t max_cardinality,
                                         std::size_t max_index, std::size_t trials, std::uint64_t seed) {
    std::vector<std::string> bad;
    for (std::size_t i = 1; i <= max_index; ++i) {
        const std::size_t one[] = {i};
        if (!family.admissible(one)) bad.push_back("singleton {" + std::to_string(i) + "} not admissible");
    }
    // One admissible set per cardinality, searched among windows {a, ..., a + c - 1}.
    for (std::size_t c = 1; c <= max_cardinality; ++c) {
        bool found = false;
        for (std::size_t a = 1; a + c - 1 <= max_index && !found; ++a) {
            std::vector<std::size_t> f(c);
            for (std::size_t j = 0; j < c; ++j) f[j] = a + j;
            found = family.admissible(f);
        }
        if (!found) bad.push_back("no admissible set of cardinality " + std::to_string(c));
    }
    SplitMix64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t c = 1 + rng.below(std::min(max_cardinality, max_index));
        std::vector<std::size_t> f;
        for (std::size_t i = 1; i <= max_index; ++i)
            if (f.size() < c && rng.below(max_index) < c) f.push_back(i);
        if (f.empty() || !family.admissible(f)) continue;
        // Right-spread: push each element up by a nondecreasing random offset.
        std::vector<std::size_t> g(f);
        std::size_t shift = 0;
        for (auto& v : g) {
            shift += rng.below(3);
            v += shift;
        }
        if (!family.admissible(g)) {
            std::ostringstream os;
            os << "right-spread of an admissible set of size " << f.size() << " is not admissible";
            bad.push_back(os.str());
        }
    }
    return bad;
}

double schreier_norm(const SparseVector& x) {
    // Scan indices downwards. With allowance m = current index, keep the m
    // largest moduli seen so far; anything evicted can never return because
    // the allowance only shrinks.
    std::priority_queue<double, std::vector<double>, std::greater<>> heap;
    double sum = 0.0, best = 0.0;
    const auto p = x.pairs();
    for (std::size_t j = p.size(); j-- > 0;) {
        const std::size_t m = p[j].first;
        const double v = std::abs(p[j].second);
        heap.push(v);
        sum += v;
        while (heap.size() > m) {
            sum -= heap.top();
            heap.pop();
        }
        best = std::max(best, sum);
    }
    return best;
}

double brute_force_norm(const SparseVector& x, const SpreadingFamily& family) {
    const auto p = x.pairs();
    const std::size_t s = p.size();
    if (s > kMaxBruteForceSupport)
        throw InvalidArgument("family_norm: support of size " + std::to_string(s) +
                              " is too large for enumeration; use the Schreier closed form");
    double best = 0.0;
    std::vector<std::size_t> f;
    f.reserve(s);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
        f.clear();
        double sum = 0.0;
        for (std::size_t i = 0; i < s; ++i)
            if (mask >> i & 1U) {
                f.push_back(p[i].first);
                sum += std::abs(p[i].second);
            }
        if (sum > best && family.admissible(f)) best = sum;
    }
    return best;
}

double family_norm(const SparseVector& x, const SpreadingFamily& family) {
    if (family.schreier) return schreier_norm(x);
    if (!family.admissible) throw InvalidArgument("family_norm: family has no admissibility predicate");
    return brute_force_norm(x, family);
}

CutShiftSpec CutShiftSpec::schreier(std::size_t n) {
    if (n == 0) throw InvalidArgument("cut shift: n must be positive");
    return {n, 2 * n - 1};
}

SparseVector cut_shift_apply(const CutShiftSpec& shift, const SparseVector& x) {
    if (shift.n == 0 || shift.k == 0) throw InvalidArgument("cut shift: n and k must be positive");
    std::vector<std::pair<std::size_t, Complex>> out;
    for (const auto& [i, v] : x.pairs())
        if (i >= shift.k && i < shift.k + shift.n) out.emplace_back(i + 1, v);
    return SparseVector(std::move(out));
}

ExperimentReport cut_shift_experiment(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw InvalidArgument("cut_shift_experiment: n must be at least 2");
    const auto shift = CutShiftSpec::schreier(n);
    const auto schreier = SpreadingFamily::schreier_family();
    ExperimentReport rep;
    rep.name = "cut_shift";
    rep.parameters = {{"n", std::to_string(n)}, {"k", std::to_string(shift.k)}, {"seed", std::to_string(seed)},
                      {"family", schreier.name}};

    const auto f = flat_sign_polynomial(n + 1, seed);
    // y = sum_j a_j S_n^j e_k
    SparseVector y;
    SparseVector power = SparseVector::unit(shift.k);
    for (int a : f.signs) {
        y = y + Complex(a) * power;
        power = cut_shift_apply(shift, power);
    }
    const double norm_y = family_norm(y, schreier);
    const Polynomial p = f.polynomial();
    const double sup = sup_on_circle(p, 1.0, std::max<std::size_t>(4096, 64 * (n + 1))).sampled.value;
    const double ratio = static_cast<double>(n) / sup;
    const double reference = static_cast<double>(n) / (std::sqrt(6.0) * std::sqrt(static_cast<double>(n + 1)));

    // ||S_n x|| <= ||x|| on random sparse vectors around the window.
    SplitMix64 rng(derive_seed(seed, n));
    std::size_t contraction_fail = 0;
    double worst = 0.0;
    for (int t = 0; t < 500; ++t) {
        std::vector<std::pair<std::size_t, Complex>> pairs;
        const std::size_t count = 1 + rng.below(12);
        const std::size_t hi = 4 * n + 4;
        for (std::size_t i = 1; i <= hi && pairs.size() < count; ++i)
            if (rng.below(hi) < 2 * count) pairs.emplace_back(i, rng.complex_gaussian());
        const SparseVector x(std::move(pairs));
        const double nx = family_norm(x, schreier);
        if (nx == 0.0) continue;
        const double q = family_norm(cut_shift_apply(shift, x), schreier) / nx;
        worst = std::max(worst, q);
        if (q > 1.0 + 1e-12) ++contraction_fail;
    }

    rep.measured = ratio;
    rep.reference_bound = reference;
    rep.satisfied = norm_y >= static_cast<double>(n) && contraction_fail == 0;
    rep.details.columns = {"quantity", "value"};
    rep.details.rows = {{"construction", std::string(to_string(f.construction))},
                        {"support_size", std::to_string(y.support_size())},
                        {"norm_f(S_n)e_k", fmt(norm_y)},
                        {"sup_circle", fmt(sup)},
                        {"ratio", fmt(ratio)},
                        {"reference_bound", fmt(reference)},
                        {"max_norm_S_n_x/norm_x", fmt(worst)}};
    rep.metrics = {{"norm", norm_y}, {"sup", sup}, {"ratio", ratio}, {"contraction_worst", worst},
                   {"contraction_failures", static_cast<double>(contraction_fail)}};
    return rep;
}

}  // namespace specrange
