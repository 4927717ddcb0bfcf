#include <random>

#include <gtest/gtest.h>

#include <cfgen/families.hpp>
#include <cfgen/series2cf.hpp>

#include "oracles.hpp"

using cfgen::Integer;
using cfgen::Rational;
using cfgen::Series;

TEST(Series2CF, GeometricSeriesTerminates) {
    // 1/(1-x) = 1 + x/(1 - x/1)
    const Series g = cfgen::stock_series(cfgen::StockSeries::geom, 10);
    const auto cfr = cfgen::expand_cfraction(g, 6);
    EXPECT_EQ(cfr.c0, Rational(1));
    ASSERT_EQ(cfr.steps.size(), 2u);
    EXPECT_EQ(cfr.steps[0], (cfgen::StepPair{Integer(1), Rational(1)}));
    EXPECT_EQ(cfr.steps[1], (cfgen::StepPair{Integer(-1), Rational(1)}));
    EXPECT_TRUE(cfr.terminated);
    EXPECT_EQ(cfgen::reconstruct(cfr, 10), g);
}

TEST(Series2CF, OrdinaryCauchyLowestTerms) {
    const Series f = cfgen::target_series({cfgen::FamilyId::ogf_cauchy}, 40);
    const auto cfr = cfgen::expand_cfraction(f, 8);
    const std::vector<long long> a{1, 2, 7, 93, 2391, 57514, 443242433, 57473535406395};
    const std::vector<long long> b{2, 3, 2, 35, 31, 797, 172542, 100087001};
    ASSERT_EQ(cfr.steps.size(), 8u);
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_EQ(cfr.steps[k].a, Integer(std::to_string(a[k]))) << k;
        EXPECT_EQ(cfr.steps[k].b, Rational(Integer(std::to_string(b[k])))) << k;
    }
    const Series back = cfgen::reconstruct(cfr, 8);
    EXPECT_EQ(back, f.truncate(8));
    EXPECT_EQ(back[8], Rational::parse("-33953/90"));
}

TEST(Series2CF, RoundTripOnRandomSeries) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t k = 3 + trial % 6;
        auto c = oracle::random_coeffs(rng, k + 2);
        for (std::size_t i = 1; i < c.size(); ++i)
            if (c[i].is_zero()) c[i] = Rational(1, 2);
        const Series f(c, k + 2);
        cfgen::CFraction cfr;
        try {
            cfr = cfgen::expand_cfraction(f, k);
        } catch (const cfgen::shape_error&) {
            continue;  // a residual without a linear term; vanishingly rare
        }
        const Series back = cfgen::reconstruct(cfr, f.order());
        EXPECT_TRUE(cfgen::series_order(back - f).meets(cfr.steps.size() + 1));
    }
}

TEST(Series2CF, EachStepDenominatorIsTheLeadingDenominator) {
    const Series f = cfgen::target_series({cfgen::FamilyId::bernoulli, 1, Rational(0)}, 20);
    const auto cfr = cfgen::expand_cfraction(f, 5);
    for (const auto& st : cfr.steps) EXPECT_TRUE(st.b.is_integer());
}

TEST(Series2CF, Errors) {
    const Series g = cfgen::stock_series(cfgen::StockSeries::exp, 4);
    EXPECT_THROW(cfgen::expand_cfraction(g, 5), cfgen::truncation_error);
    // 1 + x^2: the first residual starts at x^2
    Series s(6);
    s[0] = Rational(1);
    s[2] = Rational(1);
    try {
        cfgen::expand_cfraction(s, 3);
        FAIL() << "expected cfraction_shape_error";
    } catch (const cfgen::cfraction_shape_error& e) {
        EXPECT_EQ(e.step(), 1u);
    }
}

TEST(Series2CF, PublishedScalingIsAnEquivalentFraction) {
    // steps 6..8 rescaled by c6 = 3, c7 = 1/3 give the same series
    const Series f = cfgen::target_series({cfgen::FamilyId::ogf_cauchy}, 8);
    const std::vector<const char*> a{"1", "2", "7", "93", "2391", "172542", "443242433", "19157845135465"};
    const std::vector<const char*> b{"2", "3", "2", "35", "31", "2391", "57514", "100087001"};
    std::vector<cfgen::StepPair> steps;
    for (std::size_t k = 0; k < 8; ++k) steps.push_back({Integer(a[k]), Rational(Integer(b[k]))});
    EXPECT_EQ(cfgen::reconstruct(Rational(1), steps, 8), f);
}
