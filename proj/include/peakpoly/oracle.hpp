#pragma once

// Ground truth that does not use any peak-polynomial recurrence: exhaustive
// enumeration of S_n and B_n, tangent numbers, alternating decompositions and
// inclusion-exclusion over supersets.

#include "peakpoly/integer.hpp"
#include "peakpoly/peak_set.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

namespace peakpoly {

inline constexpr int default_census_cap = 11;
inline constexpr int default_signed_census_cap = 7;

/// Census bound: PEAKPOLY_ORACLE_CAP if set, otherwise default_census_cap.
inline int oracle_cap() {
    if (const char* env = std::getenv("PEAKPOLY_ORACLE_CAP")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1 && v <= 16) return v;
        } catch (const std::exception&) {
        }
        throw precondition_error(std::string("PEAKPOLY_ORACLE_CAP must be an integer in 1..16, got '") + env + "'");
    }
    return default_census_cap;
}

struct PeakSetCensus {
    int n = 0;
    std::map<PeakSet, Integer> counts;

    Integer at(const PeakSet& s) const {
        auto it = counts.find(s);
        return it == counts.end() ? Integer(0) : it->second;
    }
    Integer total() const {
        Integer t = 0;
        for (const auto& [s, c] : counts) t += c;
        return t;
    }
    /// Number of enumerated permutations whose peak set contains s.
    Integer superset_count(const PeakSet& s) const {
        Integer t = 0;
        for (const auto& [key, c] : counts)
            if (std::includes(key.elements().begin(), key.elements().end(), s.elements().begin(), s.elements().end()))
                t += c;
        return t;
    }
};

namespace detail {

inline std::uint32_t peak_mask(const int* v, int n) {
    std::uint32_t mask = 0;
    for (int i = 1; i + 1 < n; ++i)
        if (v[i - 1] < v[i] && v[i] > v[i + 1]) mask |= 1u << (i + 1);
    return mask;
}

inline PeakSet mask_to_set(std::uint32_t mask) {
    std::vector<int> e;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) e.push_back(i);
    return PeakSet(std::move(e));
}

inline PeakSetCensus to_census(int n, const std::vector<std::uint64_t>& by_mask) {
    PeakSetCensus c;
    c.n = n;
    for (std::uint32_t mask = 0; mask < by_mask.size(); ++mask)
        if (by_mask[mask] != 0) c.counts.emplace(mask_to_set(mask), Integer(static_cast<unsigned long>(by_mask[mask])));
    return c;
}

/// Counts peak masks of all permutations of {1..n} starting with `first`.
inline void census_with_first(int n, int first, std::vector<std::uint64_t>& by_mask) {
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (v != first) rest.push_back(v);
    std::vector<int> perm(static_cast<std::size_t>(n));
    perm[0] = first;
    do {
        std::copy(rest.begin(), rest.end(), perm.begin() + 1);
        ++by_mask[peak_mask(perm.data(), n)];
    } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace detail

/// Exact per-peak-set counts over all of S_n by exhaustive generation.
/// Work is split by first entry across `workers` threads; the merge is by key.
inline PeakSetCensus census(int n, int workers = 1, int cap = oracle_cap()) {
    if (n < 1 || n > cap)
        throw precondition_error("census: n must be in 1.." + std::to_string(cap) + ", got " + std::to_string(n));
    const std::size_t slots = std::size_t{1} << (n + 1);
    workers = std::clamp(workers, 1, n);
    std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(workers),
                                                    std::vector<std::uint64_t>(slots, 0));
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (int first = 1 + w; first <= n; first += workers)
                    detail::census_with_first(n, first, partial[static_cast<std::size_t>(w)]);
            });
    }
    std::vector<std::uint64_t> total(slots, 0);
    for (const auto& p : partial)
        for (std::size_t i = 0; i < slots; ++i) total[i] += p[i];
    return detail::to_census(n, total);
}

/// Per-peak-set counts over the signed permutations B_n (values +-1..+-n).
inline PeakSetCensus census_signed(int n, int cap = default_signed_census_cap) {
    if (n < 1 || n > cap)
        throw precondition_error("census_signed: n must be in 1.." + std::to_string(cap) + ", got " +
                                 std::to_string(n));
    std::vector<std::uint64_t> by_mask(std::size_t{1} << (n + 1), 0);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> signed_perm(perm.size());
    do {
        for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
            for (int i = 0; i < n; ++i)
                signed_perm[static_cast<std::size_t>(i)] =
                    (signs & (1u << i)) ? -perm[static_cast<std::size_t>(i)] : perm[static_cast<std::size_t>(i)];
            ++by_mask[detail::peak_mask(signed_perm.data(), n)];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return detail::to_census(n, by_mask);
}

/// E_1, E_3, ..., E_{2k_max+1} from the Entringer (boustrophedon) triangle
///   E(n, k) = E(n, k-1) + E(n-1, n-k),  E(0, 0) = 1,  E(n, 0) = 0 for n > 0,
/// where the zigzag number E_n = E(n, n).
inline std::vector<Integer> tangent_numbers(int k_max) {
    if (k_max < 0) throw precondition_error("tangent_numbers: k_max must be >= 0");
    const int top = 2 * k_max + 1;
    std::vector<Integer> prev{1};
    std::vector<Integer> out;
    for (int n = 1; n <= top; ++n) {
        std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
        row[0] = 0;
        for (int k = 1; k <= n; ++k)
            row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] + prev[static_cast<std::size_t>(n - k)];
        if (n % 2 == 1) out.push_back(row.back());
        prev = std::move(row);
    }
    return out;
}

/// Maximal runs {i, i+2, ..., i+2(k-1)} of an admissible S, in order.
struct AlternatingDecomposition {
    std::vector<PeakSet> blocks;

    PeakSet join() const {
        std::vector<int> all;
        for (const auto& b : blocks) all.insert(all.end(), b.elements().begin(), b.elements().end());
        return PeakSet(std::move(all));
    }
};

inline AlternatingDecomposition alternating_decomposition(const PeakSet& s) {
    if (!s.is_admissible())
        throw precondition_error("alternating_decomposition: S must be admissible, got " + s.to_string());
    AlternatingDecomposition d;
    std::vector<int> run;
    for (int i : s.elements()) {
        if (!run.empty() && i - run.back() != 2) {
            d.blocks.emplace_back(std::move(run));
            run.clear();
        }
        run.push_back(i);
    }
    if (!run.empty()) d.blocks.emplace_back(std::move(run));
    return d;
}

/// |{pi in S_n : S subset of P(pi)}| = n! prod_r E_{2|A_r|+1} / (2|A_r|+1)!.
inline Integer q_count(const PeakSet& s, int n) {
    if (!s.is_admissible()) throw precondition_error("q_count: S must be admissible, got " + s.to_string());
    if (n < s.max() + 1 || n < 1)
        throw precondition_error("q_count: need n >= max(S)+1 for " + s.to_string() + ", got n=" + std::to_string(n));
    const auto blocks = alternating_decomposition(s).blocks;
    std::size_t longest = 0;
    for (const auto& b : blocks) longest = std::max(longest, b.size());
    const auto tangent = tangent_numbers(static_cast<int>(longest));
    Rational q(factorial(static_cast<unsigned long>(n)));
    for (const auto& b : blocks)
        q *= make_rational(tangent[b.size()], factorial(2 * b.size() + 1));
    if (!is_integral(q)) throw std::logic_error("q_count: non-integral product for " + s.to_string());
    return q.get_num();
}

/// |P_S(n)| = sum over admissible T, S subset T subset {2..n-1}, of (-1)^|T-S| |Q_T(n)|.
inline Integer count_inclusion_exclusion(const PeakSet& s, int n) {
    if (!s.is_admissible()) throw precondition_error("count_inclusion_exclusion: S must be admissible");
    if (n < s.max() + 1 || n < 1)
        throw precondition_error("count_inclusion_exclusion: need n >= max(S)+1, got n=" + std::to_string(n));
    Integer total = 0;
    for (const auto& t : admissible_supersets(s, n)) {
        const Integer q = q_count(t, n);
        if ((t.size() - s.size()) % 2 == 0) total += q;
        else total -= q;
    }
    return total;
}

/// Positions i in {2..n-1} where an admissible superset of S in S_n could
/// place another peak (i not in S, not adjacent to S). n must be m+1 or m+2.
inline std::vector<int> free_indices(const PeakSet& s, int n) {
    if (!s.is_admissible()) throw precondition_error("free_indices: S must be admissible");
    if (n != s.max() + 1 && n != s.max() + 2)
        throw precondition_error("free_indices: n must be max(S)+1 or max(S)+2");
    std::vector<int> out;
    for (int i = 2; i <= n - 1; ++i)
        if (!s.contains(i) && !s.contains(i - 1) && !s.contains(i + 1)) out.push_back(i);
    return out;
}

/// The same definition read over i in [m+2] = {1..m+2}; m+2 is then always free.
inline std::vector<int> free_indices_over_m_plus_2(const PeakSet& s) {
    std::vector<int> out;
    for (int i = 1; i <= s.max() + 2; ++i)
        if (!s.contains(i) && !s.contains(i - 1) && !s.contains(i + 1)) out.push_back(i);
    return out;
}

}  // namespace peakpoly
