#include "peakpoly/peakpoly.hpp"
#include "table1.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace peakpoly;

namespace {

RationalPoly mono(const PeakSet& s) { return to_monomial(peak_poly(s)); }

Rational q(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }

// Values interpolated from the brute-force census (tests/oracle/brute_force.py).
RationalPoly from_int_roots(Rational scale, std::initializer_list<long> roots) {
    RationalPoly p = RationalPoly::constant(scale);
    for (long r : roots) p = p * RationalPoly::linear_root(Rational(r));
    return p;
}

}  // namespace

TEST(PeakSet, FromPermutation) {
    EXPECT_EQ(peak_set_of(std::vector<int>{1, 3, 2}), (PeakSet{2}));
    EXPECT_TRUE(peak_set_of(std::vector<int>{1, 2, 3}).empty());
    EXPECT_EQ(peak_set_of(std::vector<int>{2, 1, 4, 3, 5}), (PeakSet{3}));
    EXPECT_THROW(peak_set_of(std::vector<int>{1, 1, 2}), precondition_error);
}

TEST(PeakSet, Admissibility) {
    EXPECT_FALSE(is_admissible(PeakSet{2, 3}));
    EXPECT_FALSE(is_admissible(PeakSet{1, 4}));
    EXPECT_FALSE(is_admissible(PeakSet{2, 6, 10}, 10));
    EXPECT_TRUE(is_admissible(PeakSet{2, 6, 10}, 11));
    EXPECT_TRUE(is_admissible(PeakSet{}));
}

TEST(PeakSet, ParseAndPrint) {
    EXPECT_EQ(PeakSet::parse("6,2,10"), (PeakSet{2, 6, 10}));
    EXPECT_EQ(PeakSet::parse(" 2 , 5 "), (PeakSet{2, 5}));
    EXPECT_TRUE(PeakSet::parse("").empty());
    EXPECT_EQ((PeakSet{2, 6, 10}).to_string(), "{2,6,10}");
    EXPECT_THROW(PeakSet::parse("2,x"), precondition_error);
    EXPECT_THROW(PeakSet::parse("2,2"), precondition_error);
    EXPECT_THROW(PeakSet::parse("0,3"), precondition_error);
}

TEST(PeakSet, SweepEnumeration) {
    const auto three = admissible_sets(3);
    ASSERT_EQ(three.size(), 2u);
    EXPECT_EQ(three[0], (PeakSet{2}));
    EXPECT_EQ(three[1], (PeakSet{3}));
    const auto four = admissible_sets(4);
    const std::vector<PeakSet> expected{{2}, {3}, {2, 4}, {4}};
    EXPECT_EQ(four, expected);
    // Nonempty admissible subsets of {2..M}: Fibonacci-like growth.
    EXPECT_EQ(admissible_sets(10).size(), 88u);
}

TEST(PeakPoly, Basics) {
    EXPECT_EQ(peak_poly(PeakSet{}), BinomialPoly::constant(1));
    EXPECT_EQ(mono(PeakSet{2}), RationalPoly::linear_root(2));
    EXPECT_TRUE(peak_poly(PeakSet{2, 3}).is_zero());
    EXPECT_TRUE(peak_poly(PeakSet{1, 4}).is_zero());
}

TEST(PeakPoly, Table1) {
    const BinomialPoly p = peak_poly(PeakSet{2, 6, 10});
    for (int k = 0; k <= 10; ++k) {
        const BinomialPoly at_k = recenter(p, k);
        for (std::size_t j = 0; j <= 10; ++j)
            EXPECT_EQ(at_k.coeff(j), testdata::table1[j][static_cast<std::size_t>(k)]) << "j=" << j << " k=" << k;
    }
}

TEST(PeakPoly, InterpolatedFromCensus) {
    EXPECT_EQ(mono(PeakSet{3}), from_int_roots(q(1, 2), {0, 3}));
    EXPECT_EQ(mono(PeakSet{2, 5}), from_int_roots(q(1, 12), {0, 1, 2, 5}));
    EXPECT_EQ(mono(PeakSet{2, 4}), from_int_roots(q(1, 6), {4, 2, -3}));
    EXPECT_EQ(mono(PeakSet{3, 5}), from_int_roots(q(1, 12), {0, 5, 3, -2}));
    // (x-4)(x^2-2x+3)/6
    const RationalPoly quad({Rational(3), Rational(-2), Rational(1)});
    EXPECT_EQ(mono(PeakSet{4}), q(1, 6) * (RationalPoly::linear_root(4) * quad));
}

TEST(PeakPoly, Explicit) {
    const BinomialPoly e = peak_poly_explicit(PeakSet{2, 6, 10});
    EXPECT_EQ(e.coeff(1), 4);
    EXPECT_EQ(e.coeff(0), -8);
    const BinomialPoly g = peak_poly_explicit(PeakSet{2, 5});
    const std::vector<Integer> expected{0, 0, 0, -1, 2};
    EXPECT_EQ(g.coeffs(), expected);
    EXPECT_THROW(peak_poly_explicit(PeakSet{}), precondition_error);
    EXPECT_THROW(peak_poly_explicit(PeakSet{2, 3}), precondition_error);
}

TEST(PeakPoly, FinalGap) {
    // -2(x-2) + C(x,3)
    const RationalPoly expect24 =
        RationalPoly::constant(-2) * RationalPoly::linear_root(2) + q(1, 6) * falling_product(2);
    EXPECT_EQ(to_monomial(peak_poly_final_gap(PeakSet{2, 4})), expect24);
    // -C(x,3) + 2C(x,4)
    EXPECT_EQ(peak_poly_final_gap(PeakSet{2, 5}), BinomialPoly(0, {0, 0, 0, -1, 2}));
    EXPECT_EQ(peak_poly_final_gap(PeakSet{2, 6, 10}), peak_poly(PeakSet{2, 6, 10}));
    EXPECT_THROW(peak_poly_final_gap(PeakSet{4}), precondition_error);
}

TEST(PeakPoly, ThreeConstructionsAgree) {
    for (const auto& s : admissible_sets(11)) {
        const BinomialPoly p = peak_poly(s);
        EXPECT_EQ(peak_poly_explicit(s), p) << s;
        if (s.size() >= 2) {
            EXPECT_EQ(peak_poly_final_gap(s), p) << s;
        }
        EXPECT_EQ(p.degree(), s.max() - 1) << s;
    }
}

TEST(Vandermonde, SinglePeakIsShiftedBinomialMinusOne) {
    for (int m = 2; m <= 9; ++m) {
        const BinomialPoly p = peak_poly(PeakSet{m});
        for (long x = -4; x <= 14; ++x) EXPECT_EQ(p(x), binom(Integer(x - 1), m - 1) - 1) << m << " " << x;
    }
}

TEST(Count, Examples) {
    EXPECT_EQ(count_perms(PeakSet{}, 4), 8);
    EXPECT_EQ(count_perms(PeakSet{2}, 3), 2);
    EXPECT_EQ(count_perms(PeakSet{2, 6, 10}, 11), 396032);
    EXPECT_EQ(count_perms(PeakSet{2, 5}, 6), 80);
    EXPECT_EQ(count_perms(PeakSet{3}, 6), 144);
    EXPECT_EQ(count_perms(PeakSet{2, 4}, 6), 96);
    EXPECT_EQ(count_perms(PeakSet{2, 6, 10}, 10), 0);
    EXPECT_EQ(count_perms(PeakSet{2, 3}, 6), 0);
    EXPECT_THROW(count_perms(PeakSet{2}, 0), precondition_error);
}

TEST(Count, Signed) {
    EXPECT_EQ(count_signed(PeakSet{}, 2), 8);
    EXPECT_EQ(count_signed(PeakSet{2}, 3), 16);
    EXPECT_EQ(count_signed(PeakSet{2}, 4), 128);
}

TEST(DifferenceTable, Entries) {
    const auto t = difference_table(PeakSet{2, 6, 10});
    ASSERT_EQ(t.size(), 11u);
    EXPECT_EQ(t.at(4, 6), 424);
    EXPECT_EQ(t.at(0, 10), 0);
    for (std::size_t k = 0; k <= 10; ++k) EXPECT_EQ(t.at(10, k), 0);
    for (std::size_t k = 0; k <= 10; ++k) EXPECT_EQ(t.at(9, k), 196);
    EXPECT_THROW(difference_table(PeakSet{2, 3}), precondition_error);
}

TEST(SpecialValues, Examples) {
    EXPECT_EQ(special_value(PeakSet{2, 6, 10}, 0), -8);
    const std::vector<long> two{-2, -1, 0, 1, 2}, three{0, -1, -1, 0, 2};
    for (int j = 0; j <= 4; ++j) {
        EXPECT_EQ(special_value(PeakSet{2}, j), two[static_cast<std::size_t>(j)]);
        EXPECT_EQ(special_value(PeakSet{3}, j), three[static_cast<std::size_t>(j)]);
    }
}

TEST(SpecialValues, MatchEvaluation) {
    for (const auto& s : admissible_sets(12))
        for (int j = 0; j <= 4; ++j) EXPECT_EQ(special_value(s, j), peak_poly(s)(j)) << s << " j=" << j;
}

TEST(Gap3, SplitExamples) {
    const auto f = gap3_split(PeakSet{2, 5});
    EXPECT_EQ(f.left, (PeakSet{2}));
    EXPECT_EQ(f.right, (PeakSet{2}));
    EXPECT_EQ(f.scalar, q(1, 12));
    EXPECT_EQ(f.reconstruct(), mono(PeakSet{2, 5}));
    EXPECT_EQ(gap3_shift_constant(PeakSet{2, 5}), q(1, 2));
    EXPECT_EQ(mono(PeakSet{3, 6}), from_int_roots(q(1, 24), {0, 1, 2, 3, 6}));
    EXPECT_THROW(gap3_split(PeakSet{2, 4}), precondition_error);
}

TEST(Gap3, ReconstructsEverywhere) {
    for (const auto& s : admissible_sets(12))
        for (int e : gap3_left_endpoints(s)) EXPECT_EQ(gap3_split_at(s, e).reconstruct(), mono(s)) << s << " at " << e;
}

TEST(Gap3, ShiftConstant) {
    for (const auto& s : admissible_sets(11)) {
        if (gap3_left_endpoints(s).empty()) continue;
        const RationalPoly lhs = mono(s.shifted(1));
        const RationalPoly rhs = gap3_shift_constant(s) * (mono(s).shifted(1) * RationalPoly::linear_root(0));
        EXPECT_EQ(lhs, rhs) << s;
    }
}

TEST(FactoredFamilies, Examples) {
    const auto chain = factored_family(PeakSet{2, 5, 8});
    ASSERT_TRUE(chain);
    EXPECT_EQ(chain->family, FactoredFamily::gap3_chain);
    EXPECT_EQ(chain->poly, q(1, 2 * 6 * 12) * (RationalPoly::linear_root(8) * falling_product(5)));
    EXPECT_EQ(chain->poly, mono(PeakSet{2, 5, 8}));

    const auto tail = factored_family(PeakSet{2, 5, 7});
    ASSERT_TRUE(tail);
    EXPECT_EQ(tail->poly, mono(PeakSet{2, 5, 7}));
    for (long r : {0L, 1L, 2L, 5L, 7L}) EXPECT_EQ(tail->poly(Rational(r)), 0);
    EXPECT_EQ(deflate(tail->poly, 0)(Rational(0)), 0);  // double root at m-2 = 0

    EXPECT_FALSE(factored_family(PeakSet{2, 4}));
}

TEST(FactoredFamilies, AllFormsAgree) {
    int seen = 0;
    for (const auto& s : admissible_sets(13))
        for (const auto& f : factored_forms(s)) {
            ++seen;
            EXPECT_EQ(f.poly, mono(s)) << s << " " << to_string(f.family);
        }
    EXPECT_GT(seen, 100);
}

TEST(Kasraoui, SmallN) {
    const auto k6 = kasraoui_max(6);
    EXPECT_EQ(k6.count, 144);
    EXPECT_EQ(k6.sets, (std::vector<PeakSet>{{3}, {4}}));
    const auto k7 = kasraoui_max(7);
    EXPECT_EQ(k7.count, 672);
    EXPECT_EQ(k7.sets, (std::vector<PeakSet>{{3, 5}}));
    const auto k8 = kasraoui_max(8);
    EXPECT_EQ(k8.count, 4480);
    EXPECT_EQ(k8.sets, (std::vector<PeakSet>{{3, 6}}));
    const auto k9 = kasraoui_max(9);
    EXPECT_EQ(k9.count, 24192);
    EXPECT_EQ(k9.sets, (std::vector<PeakSet>{{3, 6}, {4, 7}}));
    const auto k10 = kasraoui_max(10);
    EXPECT_EQ(k10.count, 161280);
    EXPECT_EQ(k10.sets, (std::vector<PeakSet>{{3, 5, 8}, {3, 6, 8}}));
    EXPECT_THROW(kasraoui_max(5), precondition_error);
}

TEST(Kasraoui, CountsAreMaximalAmongAllSets) {
    for (int n = 6; n <= 16; ++n) {
        const auto k = kasraoui_max(n);
        Integer best = 0;
        for (const auto& s : admissible_sets(n - 1)) best = std::max(best, count_perms(s, n));
        EXPECT_EQ(k.count, best) << n;
        for (const auto& s : k.sets) EXPECT_EQ(count_perms(s, n), best) << n << " " << s;
    }
}
