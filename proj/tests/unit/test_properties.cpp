#include <gtest/gtest.h>

#include "property_suites.hpp"

using namespace cremona;
using namespace cremona::testing;

namespace {
constexpr int kCases = 1000;
}  // namespace

TEST(Property, Sigma0IsAnInvolution) {
    const auto r = sigma0_involution_suite(kCases, 1);
    EXPECT_EQ(r.cases, kCases);
    EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Property, Sigma0PreservesNoetherAndPairing) {
    const auto r = noether_preservation_suite(kCases, 2);
    EXPECT_EQ(r.cases, kCases);
    EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Property, WordsPreserveForm) {
    const auto r = form_preservation_suite(kCases, 3);
    EXPECT_EQ(r.cases, kCases);
    EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Property, MultiplicityMatchesDerivativeOracle) {
    int nonzero = 0;
    const auto r = multiplicity_oracle_suite(kCases, 4, &nonzero);
    EXPECT_EQ(r.cases, kCases);
    EXPECT_EQ(r.failures, 0) << r.first_failure;
    // Enough base-points in the sample for the comparison to mean something.
    EXPECT_GT(nonzero, kCases / 4);
}

TEST(Property, WeylImagesOfE0AreRecognised) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> dim(4, 10);
    for (int i = 0; i < 300; ++i) {
        const auto w = random_word(rng, dim(rng));
        const auto image = w.apply(LatticeVector::unit(0));
        if (image.has_negative_multiplicity()) continue;
        EXPECT_TRUE(hudson_test(image).proper) << image;
        EXPECT_TRUE(in_weyl_group(w.matrix()));
    }
}
