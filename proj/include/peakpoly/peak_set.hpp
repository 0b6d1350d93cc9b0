#pragma once

// Finite sets of positive integers used as (candidate) peak sets.

#include "peakpoly/integer.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace peakpoly {

class PeakSet {
public:
    PeakSet() = default;

    /// Elements may be given in any order; duplicates and values < 1 are rejected.
    explicit PeakSet(std::vector<int> elements) : elems_(std::move(elements)) {
        std::sort(elems_.begin(), elems_.end());
        if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
            throw precondition_error("PeakSet: duplicate element");
        if (!elems_.empty() && elems_.front() < 1) throw precondition_error("PeakSet: elements must be positive");
    }
    PeakSet(std::initializer_list<int> elements) : PeakSet(std::vector<int>(elements)) {}

    /// Parses "a,b,c" (whitespace tolerated); the empty string is the empty set.
    static PeakSet parse(std::string_view text) {
        std::vector<int> out;
        std::string item;
        std::stringstream ss{std::string(text)};
        while (std::getline(ss, item, ',')) {
            item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                       item.end());
            if (item.empty()) continue;
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(item, &used);
            } catch (const std::exception&) {
                throw precondition_error("PeakSet: not an integer: '" + item + "'");
            }
            if (used != item.size()) throw precondition_error("PeakSet: not an integer: '" + item + "'");
            out.push_back(v);
        }
        return PeakSet(std::move(out));
    }

    const std::vector<int>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    /// max(S); 0 for the empty set.
    int max() const { return elems_.empty() ? 0 : elems_.back(); }
    int min() const { return elems_.empty() ? 0 : elems_.front(); }
    bool contains(int i) const { return std::binary_search(elems_.begin(), elems_.end(), i); }

    /// Differences between consecutive elements.
    std::vector<int> gaps() const {
        std::vector<int> g;
        for (std::size_t r = 1; r < elems_.size(); ++r) g.push_back(elems_[r] - elems_[r - 1]);
        return g;
    }

    bool is_admissible() const {
        if (elems_.empty()) return true;
        if (elems_.front() < 2) return false;
        for (int g : gaps())
            if (g < 2) return false;
        return true;
    }

    bool is_admissible(int n) const { return is_admissible() && (elems_.empty() || elems_.back() < n); }

    /// Left endpoint of the last odd gap, if any.
    std::optional<int> last_odd_gap_left() const {
        for (std::size_t r = elems_.size(); r-- > 1;)
            if ((elems_[r] - elems_[r - 1]) % 2 != 0) return elems_[r - 1];
        return std::nullopt;
    }

    /// True if some odd gap has left endpoint >= from.
    bool has_odd_gap_from(int from) const {
        auto b = last_odd_gap_left();
        return b && *b >= from;
    }

    /// S minus its maximum.
    PeakSet without_max() const {
        PeakSet s;
        s.elems_.assign(elems_.begin(), elems_.end() - (elems_.empty() ? 0 : 1));
        return s;
    }

    PeakSet with(int i) const {
        std::vector<int> v = elems_;
        v.push_back(i);
        return PeakSet(std::move(v));
    }

    /// S intersect [1, j].
    PeakSet up_to(int j) const {
        PeakSet s;
        s.elems_.assign(elems_.begin(), std::upper_bound(elems_.begin(), elems_.end(), j));
        return s;
    }

    /// |S intersect (j, infinity)|
    long count_above(int j) const {
        return static_cast<long>(elems_.end() - std::upper_bound(elems_.begin(), elems_.end(), j));
    }

    /// {i + d : i in S}
    PeakSet shifted(int d) const {
        std::vector<int> v = elems_;
        for (auto& i : v) i += d;
        return PeakSet(std::move(v));
    }

    friend auto operator<=>(const PeakSet&, const PeakSet&) = default;
    friend bool operator==(const PeakSet&, const PeakSet&) = default;

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t r = 0; r < elems_.size(); ++r) s += (r ? "," : "") + std::to_string(elems_[r]);
        return s + "}";
    }

    friend std::ostream& operator<<(std::ostream& os, const PeakSet& s) { return os << s.to_string(); }

private:
    std::vector<int> elems_;
};

/// Orders by max(S), then lexicographically: the sweep and dataset order.
struct SweepOrder {
    bool operator()(const PeakSet& a, const PeakSet& b) const {
        if (a.max() != b.max()) return a.max() < b.max();
        return a.elements() < b.elements();
    }
};

/// All nonempty admissible S with max(S) <= max_peak, in SweepOrder.
inline std::vector<PeakSet> admissible_sets(int max_peak) {
    std::vector<PeakSet> out;
    for (int m = 2; m <= max_peak; ++m) {
        // subsets of {2..m-2} with no two consecutive, then add m
        std::vector<std::vector<int>> done;
        std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& cur, int next) {
            std::vector<int> full = cur;
            full.push_back(m);
            done.push_back(full);
            for (int i = next; i <= m - 2; ++i) {
                cur.push_back(i);
                rec(cur, i + 2);
                cur.pop_back();
            }
        };
        std::vector<int> cur;
        rec(cur, 2);
        std::vector<PeakSet> level;
        for (auto& v : done) level.emplace_back(std::move(v));
        std::sort(level.begin(), level.end(), SweepOrder{});
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// Admissible T with base subset of T subset of {2..n-1}, in SweepOrder (base included).
inline std::vector<PeakSet> admissible_supersets(const PeakSet& base, int n) {
    std::vector<PeakSet> out;
    std::vector<int> free;
    for (int i = 2; i <= n - 1; ++i) {
        if (base.contains(i) || base.contains(i - 1) || base.contains(i + 1)) continue;
        free.push_back(i);
    }
    std::function<void(std::vector<int>&, std::size_t)> rec = [&](std::vector<int>& extra, std::size_t from) {
        std::vector<int> all = base.elements();
        all.insert(all.end(), extra.begin(), extra.end());
        out.emplace_back(std::move(all));
        for (std::size_t k = from; k < free.size(); ++k) {
            if (!extra.empty() && free[k] - extra.back() < 2) continue;
            extra.push_back(free[k]);
            rec(extra, k + 1);
            extra.pop_back();
        }
    };
    std::vector<int> extra;
    rec(extra, 0);
    std::sort(out.begin(), out.end(), SweepOrder{});
    return out;
}

}  // namespace peakpoly

template <>
struct std::hash<peakpoly::PeakSet> {
    std::size_t operator()(const peakpoly::PeakSet& s) const noexcept {
        std::size_t h = 0;
        for (int i : s.elements()) h = h * 1000003u + static_cast<std::size_t>(i);
        return h;
    }
};
