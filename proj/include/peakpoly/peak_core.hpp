#pragma once

// Peak polynomials p_S(x): for admissible S with m = max(S) and n >= m,
//   |{pi in S_n : P(pi) = S}| = p_S(n) * 2^(n - |S| - 1).
// Three independent constructions are provided (main recursion, explicit
// binomial-basis formula at 0, final-gap recursion) together with counting
// formulas, difference tables and the gap-of-three factorization.

#include "peakpoly/binomial_poly.hpp"
#include "peakpoly/integer.hpp"
#include "peakpoly/peak_set.hpp"
#include "peakpoly/rational_poly.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace peakpoly {

/// Peak set of a sequence of distinct values; positions are 1-based.
template <typename T>
PeakSet peak_set_of(std::span<const T> perm) {
    std::unordered_set<T> seen(perm.begin(), perm.end());
    if (seen.size() != perm.size()) throw precondition_error("peak_set_of: entries must be pairwise distinct");
    std::vector<int> peaks;
    for (std::size_t i = 1; i + 1 < perm.size(); ++i)
        if (perm[i - 1] < perm[i] && perm[i] > perm[i + 1]) peaks.push_back(static_cast<int>(i) + 1);
    return PeakSet(std::move(peaks));
}

inline PeakSet peak_set_of(const std::vector<int>& perm) { return peak_set_of(std::span<const int>(perm)); }

inline bool is_admissible(const PeakSet& s) { return s.is_admissible(); }
inline bool is_admissible(const PeakSet& s, std::optional<int> n) { return n ? s.is_admissible(*n) : s.is_admissible(); }

namespace detail {

/// p_{{m}}(x) = C(x-1, m-1) - 1 at center 0.
inline BinomialPoly single_peak_poly(int m) { return vandermonde_shift(m) - BinomialPoly::constant(1); }

class PeakPolyCache {
public:
    std::optional<BinomialPoly> find(const PeakSet& s) const {
        std::shared_lock lock(mu_);
        auto it = map_.find(s);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void insert(const PeakSet& s, const BinomialPoly& p) {
        std::unique_lock lock(mu_);
        map_.emplace(s, p);
    }
    std::size_t size() const {
        std::shared_lock lock(mu_);
        return map_.size();
    }
    void clear() {
        std::unique_lock lock(mu_);
        map_.clear();
    }

private:
    mutable std::shared_mutex mu_;
    std::unordered_map<PeakSet, BinomialPoly> map_;
};

inline PeakPolyCache& peak_poly_cache() {
    static PeakPolyCache cache;
    return cache;
}

}  // namespace detail

/// p_S at center 0 via p_S = p_{S1}(m-1) C(x, m-1) - 2 p_{S1} - p_{S2},
/// S1 = S \ {m}, S2 = S1 + {m-1}. Zero for inadmissible S. Memoized.
inline BinomialPoly peak_poly(const PeakSet& s) {
    if (!s.is_admissible()) return {};
    if (s.empty()) return BinomialPoly::constant(1);
    if (s.size() == 1) return detail::single_peak_poly(s.max());
    auto& cache = detail::peak_poly_cache();
    if (auto hit = cache.find(s)) return *hit;

    const int m = s.max();
    const PeakSet s1 = s.without_max();
    const BinomialPoly p1 = peak_poly(s1);
    const BinomialPoly p2 = peak_poly(s1.with(m - 1));
    BinomialPoly p = BinomialPoly::basis(static_cast<unsigned long>(m - 1), p1(m - 1)) - Integer(2) * p1 - p2;
    cache.insert(s, p);
    return p;
}

namespace detail {

inline BinomialPoly explicit_formula(const PeakSet& s, std::map<std::size_t, BinomialPoly>& by_size) {
    if (auto it = by_size.find(s.size()); it != by_size.end()) return it->second;
    const int m = s.max();
    std::vector<Integer> d(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const PeakSet lower = s.up_to(j);
        const Integer base = lower.empty() ? Integer(1) : explicit_formula(lower, by_size)(j);
        d[static_cast<std::size_t>(j)] = sign_pow(m - j - 1) * neg2_pow(s.count_above(j) - 1) * base;
    }
    if (auto b = s.last_odd_gap_left()) {
        for (int j = 0; j < *b; ++j) d[static_cast<std::size_t>(j)] = 0;
    } else {
        d[0] -= neg2_pow(static_cast<long>(s.size()) - 1);
    }
    BinomialPoly p(0, std::move(d));
    by_size.emplace(s.size(), p);
    return p;
}

}  // namespace detail

/// p_S at center 0 built coefficient by coefficient from
///   d_j = (-1)^(m-j-1) (-2)^(|S & (j,inf)| - 1) p_{S & [j]}(j),
/// summed from the last odd gap's left endpoint b when one exists, otherwise
/// from 0 with constant term d_0 - (-2)^(|S|-1). Lower-order polynomials are
/// produced by the same formula, so this never touches peak_poly().
inline BinomialPoly peak_poly_explicit(const PeakSet& s) {
    if (s.empty() || !s.is_admissible())
        throw precondition_error("peak_poly_explicit: S must be admissible and nonempty, got " + s.to_string());
    std::map<std::size_t, BinomialPoly> by_size;
    return detail::explicit_formula(s, by_size);
}

/// Final-gap recursion: with m = max(S1), k = max(S) - m,
///   p_S = -2 p_{S1} [k even] + sum_{j=1}^{k-1} (-1)^(k-1-j) p_{S1}(m+j) C(x, m+j).
/// Recurses on itself down to the single-peak closed form.
inline BinomialPoly peak_poly_final_gap(const PeakSet& s) {
    if (s.size() < 2) throw precondition_error("peak_poly_final_gap: need |S| >= 2, got " + s.to_string());
    if (!s.is_admissible()) throw precondition_error("peak_poly_final_gap: S must be admissible, got " + s.to_string());
    const PeakSet s1 = s.without_max();
    const int m = s1.max();
    const int k = s.max() - m;
    const BinomialPoly p1 = s1.size() >= 2 ? peak_poly_final_gap(s1) : detail::single_peak_poly(m);
    BinomialPoly p = (k % 2 == 0) ? Integer(-2) * p1 : BinomialPoly{};
    for (int j = 1; j <= k - 1; ++j)
        p = p + BinomialPoly::basis(static_cast<unsigned long>(m + j), sign_pow(k - 1 - j) * p1(m + j));
    return p;
}

/// |{pi in S_n : P(pi) = S}|; zero unless S is n-admissible.
inline Integer count_perms(const PeakSet& s, int n) {
    if (n < 1) throw precondition_error("count_perms: n must be >= 1");
    if (s.empty()) return pow2(static_cast<unsigned long>(n - 1));
    if (!s.is_admissible(n)) return 0;
    return peak_poly(s)(n) * pow2(static_cast<unsigned long>(n - static_cast<int>(s.size()) - 1));
}

/// Signed permutations in B_n with peak set S: 2^n copies of S_n.
inline Integer count_signed(const PeakSet& s, int n) {
    return pow2(static_cast<unsigned long>(n)) * count_perms(s, n);
}

/// (m+1) x (m+1) array with entry (j, k) = (Delta^j p_S)(k).
class DifferenceTable {
public:
    DifferenceTable() = default;
    explicit DifferenceTable(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {}

    std::size_t size() const { return rows_.size(); }
    const Integer& at(std::size_t j, std::size_t k) const { return rows_.at(j).at(k); }
    const std::vector<Integer>& row(std::size_t j) const { return rows_.at(j); }
    std::vector<Integer> column(std::size_t k) const {
        std::vector<Integer> c;
        for (const auto& r : rows_) c.push_back(r.at(k));
        return c;
    }

private:
    std::vector<std::vector<Integer>> rows_;
};

inline DifferenceTable difference_table(const PeakSet& s) {
    if (s.empty() || !s.is_admissible())
        throw precondition_error("difference_table: S must be admissible and nonempty, got " + s.to_string());
    const auto m = static_cast<std::size_t>(s.max());
    std::vector<std::vector<Integer>> rows(m + 1, std::vector<Integer>(m + 1));
    BinomialPoly col = peak_poly(s);
    for (std::size_t k = 0; k <= m; ++k) {
        col = recenter(col, static_cast<long>(k));
        for (std::size_t j = 0; j <= m; ++j) rows[j][k] = col.coeff(j);
    }
    return DifferenceTable(std::move(rows));
}

/// Closed forms for p_S(j), j = 0..4, in terms of |S|, small elements and odd gaps.
inline Integer special_value(const PeakSet& s, int j) {
    if (j < 0 || j > 4) throw precondition_error("special_value: j must be in 0..4");
    if (!s.is_admissible()) throw precondition_error("special_value: S must be admissible, got " + s.to_string());
    const long sz = static_cast<long>(s.size());
    if (s.empty()) return 1;
    const bool odd_gap = s.last_odd_gap_left().has_value();
    switch (j) {
        case 0: {
            for (int i : s.elements())
                if (i % 2 != 0) return 0;
            return neg2_pow(sz);
        }
        case 1:
            return odd_gap ? Integer(0) : Integer(-neg2_pow(sz - 1));
        case 2:
            if (s.contains(2) || odd_gap) return 0;
            return -neg2_pow(sz - 1);
        case 3:
            if (s.contains(3) || s.has_odd_gap_from(3)) return 0;
            if (s.max() <= 2) return 1;
            if (s.contains(2)) return -neg2_pow(sz - 2);
            return -neg2_pow(sz - 1);
        default:
            if (s.contains(4) || s.has_odd_gap_from(4)) return 0;
            if (s == PeakSet{2} || s == PeakSet{3}) return 2;
            // single peaks m >= 5 land here too: C(3, m-1) - 1 = -1
            if (!s.contains(2) && !s.contains(3) && !odd_gap) return -neg2_pow(sz - 1);
            return neg2_pow(sz - 1);
    }
}

/// prod_{k=0}^{m} (x - k)
inline RationalPoly falling_product(int m) {
    RationalPoly p = RationalPoly::constant(1);
    for (int k = 0; k <= m; ++k) p = p * RationalPoly::linear_root(k);
    return p;
}

/// Left endpoints m of every gap of exactly three (m, m+3 both in S).
inline std::vector<int> gap3_left_endpoints(const PeakSet& s) {
    std::vector<int> out;
    const auto& e = s.elements();
    for (std::size_t r = 1; r < e.size(); ++r)
        if (e[r] - e[r - 1] == 3) out.push_back(e[r - 1]);
    return out;
}

/// p_S(x) = scalar * p_{S_R}(x - (m+1)) * prod_{k=0}^{m} (x - k),
/// scalar = p_{S_L}(m+1) / (2 (m+1)!).
struct Gap3Factorization {
    PeakSet left;   // S_L: elements <= m
    PeakSet right;  // S_R: elements > m shifted down by m+1; min is 2
    int m = 0;
    Rational scalar;

    RationalPoly reconstruct() const {
        return scalar * (to_monomial(peak_poly(right)).shifted(m + 1) * falling_product(m));
    }
};

inline Gap3Factorization gap3_split_at(const PeakSet& s, int left_endpoint) {
    if (!s.is_admissible() || !s.contains(left_endpoint) || !s.contains(left_endpoint + 3))
        throw precondition_error("gap3_split: " + s.to_string() + " has no gap of 3 at " +
                                 std::to_string(left_endpoint));
    Gap3Factorization f;
    f.m = left_endpoint;
    f.left = s.up_to(left_endpoint);
    std::vector<int> right;
    for (int i : s.elements())
        if (i > left_endpoint) right.push_back(i - (left_endpoint + 1));
    f.right = PeakSet(std::move(right));
    f.scalar = make_rational(peak_poly(f.left)(f.m + 1), 2 * factorial(static_cast<unsigned long>(f.m + 1)));
    return f;
}

/// Splits at the leftmost gap of three.
inline Gap3Factorization gap3_split(const PeakSet& s) {
    const auto ends = gap3_left_endpoints(s);
    if (ends.empty() || !s.is_admissible())
        throw precondition_error("gap3_split: S has no gap of 3: " + s.to_string());
    return gap3_split_at(s, ends.front());
}

/// C(S) with p_{S+1}(x) = C(S) p_S(x - 1) x, using the leftmost gap of three.
inline Rational gap3_shift_constant(const PeakSet& s) {
    const Gap3Factorization f = gap3_split(s);
    const Integer num = peak_poly(f.left.shifted(1))(f.m + 2);
    const Integer den = Integer(f.m + 2) * peak_poly(f.left)(f.m + 1);
    return make_rational(num, den);
}

enum class FactoredFamily {
    final_gap_3,         // {..., m, m+3}
    final_gaps_3_2,      // {..., m, m+3, m+5}
    gap3_chain,          // {m, m+3, ..., m+3k}
    gap3_chain_then_2,   // {m, m+3, ..., m+3k, m+3k+2}
};

inline std::string_view to_string(FactoredFamily f) {
    switch (f) {
        case FactoredFamily::final_gap_3: return "final-gap-3";
        case FactoredFamily::final_gaps_3_2: return "final-gaps-3-2";
        case FactoredFamily::gap3_chain: return "gap3-chain";
        case FactoredFamily::gap3_chain_then_2: return "gap3-chain-then-2";
    }
    return "?";
}

struct FactoredForm {
    FactoredFamily family;
    RationalPoly poly;
};

/// Every closed factored form that applies to S, most specific first.
inline std::vector<FactoredForm> factored_forms(const PeakSet& s) {
    std::vector<FactoredForm> out;
    if (!s.is_admissible() || s.size() < 2) return out;
    const auto g = s.gaps();
    const auto fact = [](int k) { return factorial(static_cast<unsigned long>(k)); };
    const Integer twelve = 12;

    const bool all_three = std::all_of(g.begin(), g.end(), [](int x) { return x == 3; });
    const bool threes_then_two =
        g.size() >= 2 && g.back() == 2 && std::all_of(g.begin(), g.end() - 1, [](int x) { return x == 3; });

    if (all_three) {
        const int m = s.min();
        const int k = static_cast<int>(g.size());
        Integer twelve_pow;
        mpz_pow_ui(twelve_pow.get_mpz_t(), twelve.get_mpz_t(), static_cast<unsigned long>(k - 1));
        const Rational scale = make_rational(Integer(m - 1), 2 * fact(m + 1) * twelve_pow);
        out.push_back({FactoredFamily::gap3_chain,
                       scale * (RationalPoly::linear_root(m + 3 * k) * falling_product(m + 3 * (k - 1)))});
    }
    if (threes_then_two) {
        const int m = s.min();
        const int k = static_cast<int>(g.size()) - 1;
        Integer twelve_pow;
        mpz_pow_ui(twelve_pow.get_mpz_t(), twelve.get_mpz_t(), static_cast<unsigned long>(k));
        const Rational scale = make_rational(Integer(m - 1), fact(m + 1) * twelve_pow);
        out.push_back({FactoredFamily::gap3_chain_then_2,
                       scale * (RationalPoly::linear_root(m + 3 * k + 2) * RationalPoly::linear_root(m + 3 * k) *
                                RationalPoly::linear_root(m + 3 * k - 5) * falling_product(m + 3 * (k - 1)))});
    }
    if (g.back() == 3) {
        const PeakSet s1 = s.without_max();
        const int m = s1.max();
        const Rational scale = make_rational(peak_poly(s1)(m + 1), 2 * fact(m + 1));
        out.push_back({FactoredFamily::final_gap_3,
                       scale * (RationalPoly::linear_root(m + 3) * falling_product(m))});
    }
    if (g.size() >= 2 && g.back() == 2 && g[g.size() - 2] == 3) {
        const PeakSet base = s.without_max().without_max();
        const int m = base.max();
        const Rational scale = make_rational(peak_poly(base)(m + 1), 12 * fact(m + 1));
        out.push_back({FactoredFamily::final_gaps_3_2,
                       scale * (RationalPoly::linear_root(m + 5) * RationalPoly::linear_root(m + 3) *
                                RationalPoly::linear_root(m - 2) * falling_product(m))});
    }
    return out;
}

/// The most specific closed factored form of p_S, if S belongs to a known family.
inline std::optional<FactoredForm> factored_family(const PeakSet& s) {
    auto forms = factored_forms(s);
    if (forms.empty()) return std::nullopt;
    return forms.front();
}

struct KasraouiMax {
    std::vector<PeakSet> sets;
    Integer count;
};

/// Peak sets maximizing |P_S(n)| for n >= 6, and the maximum.
inline KasraouiMax kasraoui_max(int n) {
    if (n < 6) throw precondition_error("kasraoui_max: n must be >= 6");
    const int ell = n / 3;
    const auto progression = [n](std::vector<int> start, int from) {
        for (int i = from; i <= n - 1; i += 3) start.push_back(i);
        return PeakSet(std::move(start));
    };
    KasraouiMax out;
    Rational count;
    const Rational nfact(factorial(static_cast<unsigned long>(n)));
    const auto pow3 = [](int e) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(e < 0 ? -e : e));
        return e < 0 ? make_rational(1, p) : Rational(p);
    };
    switch (n % 3) {
        case 0:
            out.sets = {progression({}, 3), progression({}, 4)};
            count = Rational(1, 5) * pow3(2 - ell) * nfact;
            break;
        case 1:
            // {3, 6, ..., 3s, 3s+2, 3s+5, ...} & [n-1]; s = ell would end at
            // 3s = n-1 and is not a maximizer.
            for (int s = 1; s <= ell - 1; ++s) {
                std::vector<int> head;
                for (int i = 3; i <= 3 * s; i += 3) head.push_back(i);
                out.sets.push_back(progression(std::move(head), 3 * s + 2));
            }
            count = Rational(2, 5) * pow3(1 - ell) * nfact;
            break;
        default:
            out.sets = {progression({}, 3)};
            count = pow3(-ell) * nfact;
            break;
    }
    count.canonicalize();
    if (!is_integral(count)) throw std::logic_error("kasraoui_max: non-integral maximum");
    out.count = count.get_num();
    return out;
}

}  // namespace peakpoly
