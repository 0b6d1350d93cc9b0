#include "peakpoly/oracle.hpp"
#include "peakpoly/peak_core.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace peakpoly;

// Frozen values come from tests/oracle/brute_force.py.

TEST(Census, Small) {
    const auto c1 = census(1);
    EXPECT_EQ(c1.counts.size(), 1u);
    EXPECT_EQ(c1.at(PeakSet{}), 1);

    const auto c3 = census(3);
    EXPECT_EQ(c3.counts.size(), 2u);
    EXPECT_EQ(c3.at(PeakSet{}), 4);
    EXPECT_EQ(c3.at(PeakSet{2}), 2);

    const auto c4 = census(4);
    EXPECT_EQ(c4.total(), 24);
    EXPECT_EQ(c4.at(PeakSet{2}), 8);
    EXPECT_EQ(c4.at(PeakSet{2}), count_perms(PeakSet{2}, 4));
}

TEST(Census, Six) {
    const auto c6 = census(6);
    EXPECT_EQ(c6.total(), 720);
    EXPECT_EQ(c6.at(PeakSet{2, 5}), 80);
    EXPECT_EQ(c6.at(PeakSet{3}), 144);
    EXPECT_EQ(c6.at(PeakSet{2, 4}), 96);
    EXPECT_EQ(c6.at(PeakSet{2, 3}), 0);
}

TEST(Census, WorkerCountDoesNotChangeResult) {
    const auto a = census(8, 1);
    for (int w : {2, 3, 8, 32}) EXPECT_EQ(census(8, w).counts, a.counts) << w;
}

TEST(Census, MatchesClosedFormCounts) {
    for (int n = 1; n <= 8; ++n) {
        const auto c = census(n);
        for (const auto& [s, count] : c.counts) EXPECT_EQ(count, count_perms(s, n)) << s << " n=" << n;
    }
}

TEST(Census, CapIsEnforced) {
    EXPECT_THROW(census(0), precondition_error);
    EXPECT_THROW(census(5, 1, 4), precondition_error);
}

TEST(Census, EnvironmentCap) {
    ::setenv("PEAKPOLY_ORACLE_CAP", "5", 1);
    EXPECT_EQ(oracle_cap(), 5);
    EXPECT_THROW(census(6), precondition_error);
    ::setenv("PEAKPOLY_ORACLE_CAP", "banana", 1);
    EXPECT_THROW(oracle_cap(), precondition_error);
    ::unsetenv("PEAKPOLY_ORACLE_CAP");
    EXPECT_EQ(oracle_cap(), default_census_cap);
}

TEST(SignedCensus, Small) {
    const auto c2 = census_signed(2);
    EXPECT_EQ(c2.counts.size(), 1u);
    EXPECT_EQ(c2.at(PeakSet{}), 8);
    const auto c3 = census_signed(3);
    EXPECT_EQ(c3.total(), 48);
    EXPECT_EQ(c3.at(PeakSet{2}), 16);
    EXPECT_EQ(census_signed(4).at(PeakSet{2}), 128);
}

TEST(SignedCensus, MatchesClosedForm) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& [s, count] : census_signed(n).counts) EXPECT_EQ(count, count_signed(s, n)) << s << " n=" << n;
}

TEST(Tangent, FirstValues) {
    const auto e = tangent_numbers(6);
    const std::vector<Integer> expected{1, 2, 16, 272, 7936, 353792, 22368256};
    EXPECT_EQ(e, expected);
}

TEST(Tangent, AgreeWithAlternatingCensus) {
    // Alternating permutations of odd length n have peak set {2,4,...,n-1}.
    const auto e = tangent_numbers(4);
    for (int k = 0; k <= 4; ++k) {
        const int n = 2 * k + 1;
        std::vector<int> alt;
        for (int i = 2; i < n; i += 2) alt.push_back(i);
        EXPECT_EQ(census(n).at(PeakSet(alt)), e[static_cast<std::size_t>(k)]) << n;
    }
}

TEST(Alternating, Decomposition) {
    const auto d = alternating_decomposition(PeakSet{2, 5, 9, 11, 19, 21, 23, 26});
    const std::vector<PeakSet> expected{{2}, {5}, {9, 11}, {19, 21, 23}, {26}};
    EXPECT_EQ(d.blocks, expected);
    EXPECT_EQ(d.join(), (PeakSet{2, 5, 9, 11, 19, 21, 23, 26}));
    EXPECT_EQ(alternating_decomposition(PeakSet{2}).blocks, std::vector<PeakSet>{PeakSet{2}});
    EXPECT_EQ(alternating_decomposition(PeakSet{2, 4, 6}).blocks, std::vector<PeakSet>{(PeakSet{2, 4, 6})});
    EXPECT_THROW(alternating_decomposition(PeakSet{2, 3}), precondition_error);
}

TEST(QCount, Examples) {
    EXPECT_EQ(q_count(PeakSet{}, 4), 24);
    EXPECT_EQ(q_count(PeakSet{2}, 4), 8);
    EXPECT_EQ(q_count(PeakSet{2, 4}, 6), 96);
    EXPECT_THROW(q_count(PeakSet{2, 4}, 4), precondition_error);
}

TEST(QCount, MatchesSupersetCensus) {
    for (int n = 3; n <= 8; ++n) {
        const auto c = census(n);
        for (const auto& s : admissible_sets(n - 1)) EXPECT_EQ(q_count(s, n), c.superset_count(s)) << s << " n=" << n;
    }
}

TEST(InclusionExclusion, Examples) {
    EXPECT_EQ(count_inclusion_exclusion(PeakSet{3}, 6), 144);
    EXPECT_EQ(count_inclusion_exclusion(PeakSet{2}, 4), 8);
    EXPECT_EQ(count_inclusion_exclusion(PeakSet{}, 5), 16);
}

TEST(InclusionExclusion, MatchesCensus) {
    for (int n = 2; n <= 8; ++n) {
        const auto c = census(n);
        EXPECT_EQ(count_inclusion_exclusion(PeakSet{}, n), c.at(PeakSet{}));
        for (const auto& s : admissible_sets(n - 1)) EXPECT_EQ(count_inclusion_exclusion(s, n), c.at(s)) << s;
    }
}

TEST(FreeIndices, Examples) {
    EXPECT_TRUE(free_indices(PeakSet{2, 4}, 6).empty());
    EXPECT_TRUE(free_indices(PeakSet{2}, 4).empty());
    EXPECT_TRUE(free_indices(PeakSet{2, 5}, 7).empty());
    EXPECT_EQ(free_indices(PeakSet{4}, 6), (std::vector<int>{2}));
    EXPECT_THROW(free_indices(PeakSet{2}, 6), precondition_error);
    // The [m+2] reading always reports m+2.
    EXPECT_EQ(free_indices_over_m_plus_2(PeakSet{2, 4}), (std::vector<int>{6}));
}

TEST(FreeIndices, NoFreeIndexMeansQEqualsP) {
    for (const auto& s : admissible_sets(7))
        for (int n : {s.max() + 1, s.max() + 2})
            if (free_indices(s, n).empty()) {
                EXPECT_EQ(q_count(s, n), count_perms(s, n)) << s << " n=" << n;
            }
}
