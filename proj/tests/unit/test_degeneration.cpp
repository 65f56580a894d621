#include <gtest/gtest.h>

#include <algorithm>

#include "cremona/degeneration.hpp"
#include "cremona/enumeration.hpp"
#include "cremona/errors.hpp"

using namespace cremona;

namespace {

HomaloidalType T(const std::string& s) { return parse_homaloidal_type(s); }

std::vector<Int> padded_mults(const HomaloidalType& t) {
    std::vector<Int> m(t.mults().begin(), t.mults().end());
    m.push_back(0);  // one general point
    return m;
}

std::set<Int> pair_oracle(const HomaloidalType& t) {
    const Int d = t.degree();
    const auto m = padded_mults(t);
    std::set<Int> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (d - m[i] - m[j] > 0) out.insert(d - m[i] - m[j]);
    if (d == 1) out.insert(1);
    return out;
}

std::set<Int> quintic_oracle(const HomaloidalType& t) {
    const Int d = t.degree();
    const auto m = t.mults();
    const std::size_t r = m.size();
    std::set<Int> out;
    if (r < 5) return out;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b)
            for (std::size_t c = b + 1; c < r; ++c)
                for (std::size_t e = c + 1; e < r; ++e)
                    for (std::size_t f = e + 1; f < r; ++f) {
                        const Int k = 2 * d - (m[a] + m[b] + m[c] + m[e] + m[f]);
                        if (k >= 1) out.insert(2 * k);
                    }
    return out;
}

std::set<Int> collinear_oracle(const HomaloidalType& t) {
    const Int d = t.degree();
    const auto m = t.mults();
    const std::size_t r = m.size();
    std::set<Int> out;
    if (r < 5) return out;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c)
                for (std::size_t e = 0; e < r; ++e)
                    for (std::size_t f = 0; f < r; ++f) {
                        const std::set<std::size_t> idx{a, b, c, e, f};
                        if (idx.size() != 5) continue;
                        const Int k = 3 * d - (m[a] + m[b] + m[c] + 2 * m[e] + 2 * m[f]);
                        if (k >= 1) out.insert(k);
                    }
    return out;
}

}  // namespace

TEST(PairOffsets, Examples) {
    EXPECT_EQ(pair_offsets(T("10;5^3,2^6")), (std::set<Int>{3, 5, 6, 8}));
    EXPECT_EQ(pair_offsets(T("8;3^7")), (std::set<Int>{2, 5}));
    for (Int d = 2; d <= 15; ++d) EXPECT_TRUE(pair_offsets(family_de_jonquieres(d)).contains(1));
    EXPECT_EQ(pair_offsets(T("1")), std::set<Int>{1});
}

TEST(PairOffsets, NeverZeroAndNoBezoutViolations) {
    for (Int d = 1; d <= 14; ++d)
        for (const auto& t : enumerate_proper(d)) {
            const auto s = pair_offsets(t);
            EXPECT_FALSE(s.contains(0));
            EXPECT_TRUE(std::all_of(s.begin(), s.end(), [](Int k) { return k > 0; }));
            const auto m = t.mults();
            if (m.size() >= 2) {
                EXPECT_LE(m[0] + m[1], d) << t;
            }
        }
}

TEST(QuinticOffsets, Examples) {
    EXPECT_TRUE(quintic_offsets(T("10;5^3,2^6")).contains(2));
    EXPECT_TRUE(quintic_offsets(T("2;1,1,1")).empty());
    const auto q = quintic_offsets(T("37;18,12^7,6"));
    ASSERT_FALSE(q.empty());
    EXPECT_EQ(*q.begin(), 16);
}

TEST(CollinearOffsets, Examples) {
    EXPECT_TRUE(collinear_offsets(T("8;4^3,2^3,1^3")).contains(1));
    EXPECT_TRUE(collinear_offsets(T("10;5^3,2^6")).contains(1));
    EXPECT_TRUE(collinear_offsets(T("2;1,1,1")).empty());
}

TEST(Offsets, MatchBruteForceOracles) {
    for (Int d = 1; d <= 12; ++d)
        for (const auto& t : enumerate_proper(d)) {
            EXPECT_EQ(pair_offsets(t), pair_oracle(t)) << t;
            EXPECT_EQ(quintic_offsets(t), quintic_oracle(t)) << t;
            if (t.num_points() <= 12) {
                EXPECT_EQ(collinear_offsets(t), collinear_oracle(t)) << t;
            }
        }
}

TEST(Offsets, ImproperTypesRejected) {
    // Noether but not proper: constructed through the lattice since
    // HomaloidalType::make accepts any Noether solution.
    const auto bad = HomaloidalType::make(5, {3, 3, 1, 1, 1, 1, 1, 1});
    EXPECT_THROW(pair_offsets(bad), ImproperTypeError);
    EXPECT_THROW(quintic_offsets(bad), ImproperTypeError);
    EXPECT_THROW(collinear_offsets(bad), ImproperTypeError);
    EXPECT_THROW(in_closure_plus_one(bad), ImproperTypeError);
    EXPECT_THROW(best_pair_bound_check(bad), ImproperTypeError);
}

TEST(PlusOne, Examples) {
    EXPECT_FALSE(in_closure_plus_one(T("8;3^7")));
    EXPECT_FALSE(in_closure_plus_one(T("8;4^3,2^3,1^3")));
    EXPECT_TRUE(in_closure_plus_one(T("5;2^6")));
    for (Int d = 2; d <= 20; ++d) EXPECT_TRUE(in_closure_plus_one(family_de_jonquieres(d)));
}

TEST(PlusOne, ConsistentWithPairOffsets) {
    for (Int d = 2; d <= 14; ++d)
        for (const auto& t : enumerate_proper(d)) EXPECT_EQ(in_closure_plus_one(t), pair_offsets(t).contains(1)) << t;
}

TEST(PlusOne, DegreeSweep) {
    const std::set<Int> holds{2, 3, 4, 5, 6, 7, 9, 11};
    for (Int d = 2; d <= 12; ++d) EXPECT_EQ(degree_plus_one_holds(d).holds, holds.contains(d)) << d;
    const auto r8 = degree_plus_one_holds(8);
    EXPECT_EQ(std::set<HomaloidalType>(r8.failing.begin(), r8.failing.end()),
              (std::set<HomaloidalType>{T("8;4^3,2^3,1^3"), T("8;3^7")}));
    EXPECT_EQ(degree_plus_one_holds(10).failing.size(), 7u);
    EXPECT_TRUE(degree_plus_one_holds(7).failing.empty());
}

TEST(PlusOne, FailsAboveTwelve) {
    for (Int d = 13; d <= 16; ++d) EXPECT_FALSE(degree_plus_one_holds(d).holds) << d;
    // The 3m family members of degree >= 13 have no pair summing to d - 1.
    EXPECT_FALSE(in_closure_plus_one(family_3m(5).degree_3m));
    EXPECT_FALSE(in_closure_plus_one(family_3m(4).degree_3m_plus_2));
    EXPECT_FALSE(in_closure_plus_one(family_3m(5).degree_3m_plus_1));
}

TEST(PlusOne, HorizonGuard) { EXPECT_THROW(degree_plus_one_holds(kMaxEnumeratedDegree + 1), HorizonError); }

TEST(Reachable, Examples) {
    EXPECT_EQ(reachable_degrees(T("5;2^6"), 1), std::set<Int>{6});
    for (Int d = 2; d <= 9; ++d) EXPECT_EQ(reachable_degrees(family_de_jonquieres(d), 1), std::set<Int>{d + 1});
    EXPECT_EQ(reachable_degrees(T("8;3^7"), 4), (std::set<Int>{10, 12}));
    EXPECT_TRUE(reachable_degrees(T("8;4^3,2^3,1^3"), 2).contains(10));
    EXPECT_FALSE(reachable_degrees(T("8;4^3,2^3,1^3"), 2).contains(9));
}

TEST(Reachable, WithinHorizon) {
    for (const auto& t : enumerate_proper(7)) {
        const auto r = reachable_degrees(t, 3);
        for (Int e : r) {
            EXPECT_GT(e, 7);
            EXPECT_LE(e, 10);
        }
        EXPECT_TRUE(r.contains(8)) << t;
    }
}

TEST(BestPair, Examples) {
    EXPECT_TRUE(best_pair_bound_check(T("8;3^7")));
    EXPECT_EQ(best_pair_sum(T("8;3^7")), 6);
    EXPECT_TRUE(best_pair_bound_check(T("9;5,4,3^4,1^3")));
    EXPECT_EQ(best_pair_sum(T("9;5,4,3^4,1^3")), 8);
    EXPECT_TRUE(best_pair_bound_check(T("37;18,12^7,6")));
    EXPECT_EQ(best_pair_sum(T("37;18,12^7,6")), 30);
}

TEST(BestPair, HoldsForAllEnumerated) {
    for (Int d = 1; d <= 16; ++d)
        for (const auto& t : enumerate_proper(d)) EXPECT_TRUE(best_pair_bound_check(t)) << t;
}

TEST(GeneralOffset, BoundUpTo12) {
    for (Int d = 1; d <= 12; ++d)
        for (const auto& t : enumerate_proper(d)) {
            const Int bound = std::max<Int>(1, d / 3);
            EXPECT_LE(min_general_offset(t), bound) << t;
        }
}

TEST(Analyze, ReportFields) {
    const auto rep = analyze(T("10;5^3,2^6"), 2);
    EXPECT_EQ(rep.pair_offsets, (std::set<Int>{3, 5, 6, 8}));
    EXPECT_TRUE(rep.quintic_offsets.contains(2));
    EXPECT_EQ(rep.min_general_offset, 2);
    EXPECT_FALSE(rep.plus_one);
    EXPECT_TRUE(rep.reachable.contains(12));
}

TEST(ClosureTable, VerdictPattern) {
    const auto table = closure_equality_table(16);
    ASSERT_EQ(table.size(), 16u);
    for (const auto& row : table) {
        const bool equal = row.degree <= 8 || row.degree == 10 || row.degree == 12;
        EXPECT_EQ(row.verdict == ClosureVerdict::Equal, equal) << row.degree;
        if (!equal) {
            EXPECT_EQ(row.verdict, ClosureVerdict::NotEqual) << row.degree;
            EXPECT_FALSE(row.witnesses.empty());
        }
    }
}

TEST(Chains, EightToTenAndTenToTwelve) {
    const auto c1 = chain_check(8, 10, false);
    EXPECT_TRUE(c1.holds);
    for (const auto& [t, k] : c1.offsets) EXPECT_TRUE(k == 1 || k == 2) << t;
    const auto c2 = chain_check(10, 12, true);
    EXPECT_TRUE(c2.holds);
    const auto it = std::find_if(c2.offsets.begin(), c2.offsets.end(),
                                 [](const auto& p) { return p.first == T("10;5^3,2^6"); });
    ASSERT_NE(it, c2.offsets.end());
    EXPECT_EQ(it->second, 2);
    EXPECT_FALSE(chain_check(10, 12, false).holds);
}

TEST(Battery, Consistent) {
    const auto rep = theorem1_battery(16, 2);
    EXPECT_TRUE(rep.consistent);
    ASSERT_EQ(rep.beyond_12.size(), 4u);
    for (const auto& f : rep.beyond_12) EXPECT_TRUE(!f.enumerated.empty() || f.family_member_fails) << f.degree;
    EXPECT_THROW(theorem1_battery(11), PreconditionError);
}
