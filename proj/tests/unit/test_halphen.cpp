#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "cremona/errors.hpp"
#include "cremona/halphen.hpp"

using namespace cremona;
using namespace cremona::halphen;

namespace {

// Count of eps in [0,k]^9 with the reduced identities
//   sum eps = 3k,  12a(eps_1 - eps_9) + sum eps^2 = k^2 + 2k.
// These are the r = 9 solutions of the full system.
std::size_t count_r9_by_identity(Int a, Int k) {
    std::size_t count = 0;
    std::array<Int, 9> e{};
    std::function<void(int, Int)> rec = [&](int i, Int left) {
        if (i == 9) {
            if (left != 0) return;
            Int sq = 0;
            for (Int v : e) sq += v * v;
            if (12 * a * (e[0] - e[8]) + sq == k * k + 2 * k) ++count;
            return;
        }
        for (Int v = 0; v <= std::min(k, left); ++v) {
            e[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, 3 * k);
    return count;
}

}  // namespace

TEST(Bertini, Entries) {
    const auto b = bertini_matrix();
    ASSERT_EQ(b.dimension(), 10u);
    EXPECT_EQ(b(0, 0), 17);
    EXPECT_EQ(b(0, 1), 0);
    for (std::size_t j = 2; j < 10; ++j) EXPECT_EQ(b(0, j), 6);
    EXPECT_EQ(b(2, 2), -3);
    EXPECT_EQ(b(2, 3), -2);
    EXPECT_EQ(b.apply(LatticeVector::unit(1)), LatticeVector::unit(1));
}

TEST(Bertini, InvolutionAndIsometry) {
    const auto b = bertini_matrix();
    EXPECT_TRUE((b * b).is_identity());
    EXPECT_EQ(b.transposed() * IntegerMatrix::form(10) * b, IntegerMatrix::form(10));
    EXPECT_TRUE(in_weyl_group(flip_multiplicity_signs(b)));
}

TEST(NuB, Power) {
    EXPECT_TRUE(nu_b_power(0).is_identity());
    const auto m = nu_b_power(1);
    EXPECT_EQ(m(0, 0), 37);
    EXPECT_EQ(m(0, 1), 6);
    EXPECT_EQ(m(0, 2), 18);
    for (std::size_t j = 3; j < 10; ++j) EXPECT_EQ(m(0, j), 12);
    EXPECT_TRUE((nu_b_power(1) * nu_b_power(-1)).is_identity());
    EXPECT_TRUE(nu_b_closed_form(0).is_identity());
}

TEST(NuB, ClosedFormAgrees) {
    for (Int a = -5; a <= 5; ++a) EXPECT_EQ(nu_b_power(a), nu_b_closed_form(a)) << a;
}

TEST(NuB, FirstColumnIsLambda) {
    for (Int a = 1; a <= 5; ++a) {
        const auto col = flip_multiplicity_signs(nu_b_power(a)).apply(LatticeVector::unit(0));
        EXPECT_EQ(HomaloidalType::from_lattice(col), lambda_a(a)) << a;
        const auto back = flip_multiplicity_signs(nu_b_power(-a)).apply(LatticeVector::unit(0));
        EXPECT_EQ(HomaloidalType::from_lattice(back), lambda_a(a)) << a;
        EXPECT_TRUE(preserves_form(nu_b_power(a)));
    }
}

TEST(Lambda, Values) {
    EXPECT_EQ(lambda_a(1), parse_homaloidal_type("37;18,12^7,6"));
    EXPECT_EQ(lambda_a(2), parse_homaloidal_type("145;60,48^7,36"));
    EXPECT_EQ(lambda_multiplicities(1), (std::vector<Int>{18, 12, 12, 12, 12, 12, 12, 12, 6}));
    EXPECT_THROW(lambda_a(0), PreconditionError);
}

TEST(Lambda, ProperAndSelfDual) {
    for (Int a = 1; a <= 5; ++a) {
        EXPECT_TRUE(is_proper(lambda_a(a))) << a;
        EXPECT_EQ(dual_type(lambda_a(a)), lambda_a(a)) << a;
    }
}

TEST(Obstruction, AllR9InRegime) {
    for (Int a = 1; a <= 3; ++a)
        for (Int k = 1; k <= a; ++k) {
            const auto rep = obstruction_candidates(a, k, 2);
            EXPECT_TRUE(rep.all_r9) << a << "," << k;
            EXPECT_EQ(rep.degree, 36 * a * a + 1);
        }
}

TEST(Obstruction, CountMatchesReducedIdentity) {
    for (auto [a, k] : {std::pair<Int, Int>{1, 1}, {2, 1}, {2, 2}, {3, 2}, {1, 2}}) {
        const auto rep = obstruction_candidates(a, k);
        const auto r9 = std::count_if(rep.solutions.begin(), rep.solutions.end(),
                                      [](const ObstructionSolution& s) { return s.extras.empty(); });
        EXPECT_EQ(static_cast<std::size_t>(r9), count_r9_by_identity(a, k)) << a << "," << k;
    }
}

TEST(Obstruction, SolutionsAreConsistent) {
    const auto rep = obstruction_candidates(1, 2);
    const auto n = lambda_multiplicities(1);
    std::set<HomaloidalType> proper;
    for (const auto& s : rep.solutions) {
        ASSERT_EQ(s.epsilon.size(), 9u);
        EXPECT_EQ(std::accumulate(s.epsilon.begin(), s.epsilon.end(), Int{0}) +
                      std::accumulate(s.extras.begin(), s.extras.end(), Int{0}),
                  6);
        EXPECT_TRUE(std::is_sorted(s.extras.rbegin(), s.extras.rend()));
        std::vector<Int> m;
        for (std::size_t i = 0; i < 9; ++i) m.push_back(n[i] + s.epsilon[i]);
        m.insert(m.end(), s.extras.begin(), s.extras.end());
        EXPECT_EQ(s.type, HomaloidalType::make(39, m));
        EXPECT_EQ(s.proper, is_proper(s.type));
        if (s.proper) proper.insert(s.type);
    }
    EXPECT_EQ(proper, std::set<HomaloidalType>(rep.proper_candidates.begin(), rep.proper_candidates.end()));
    EXPECT_FALSE(rep.all_r9);
    EXPECT_EQ(rep.verdict, "unobstructed-candidates");
}

TEST(Obstruction, KnownCounts) {
    const auto r = obstruction_candidates(1, 1);
    EXPECT_EQ(r.solutions.size(), 42u);
    EXPECT_EQ(r.proper_candidates.size(), 2u);
    EXPECT_EQ(r.verdict, "r9-only-geometric-exclusion");
}

TEST(Obstruction, ThreadIndependent) {
    const auto a = obstruction_candidates(2, 2, 1);
    const auto b = obstruction_candidates(2, 2, 4);
    ASSERT_EQ(a.solutions.size(), b.solutions.size());
    for (std::size_t i = 0; i < a.solutions.size(); ++i) {
        EXPECT_EQ(a.solutions[i].epsilon, b.solutions[i].epsilon);
        EXPECT_EQ(a.solutions[i].extras, b.solutions[i].extras);
    }
}

TEST(Obstruction, Guards) {
    EXPECT_THROW(obstruction_candidates(0, 1), PreconditionError);
    EXPECT_THROW(obstruction_candidates(1, 0), PreconditionError);
    EXPECT_THROW(obstruction_candidates(1, kMaxObstructionK + 1), PreconditionError);
}
