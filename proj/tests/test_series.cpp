#include <random>

#include <gtest/gtest.h>

#include <cfgen/sequences.hpp>
#include <cfgen/series.hpp>

#include "oracles.hpp"

using cfgen::Rational;
using cfgen::Series;
using cfgen::StockSeries;

namespace {

Series random_series(std::mt19937_64& rng, std::size_t order, bool invertible = false) {
    return Series(oracle::random_coeffs(rng, order, invertible), order);
}

}  // namespace

TEST(Series, ProductMatchesNaiveConvolution) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t k = 1 + trial % 12;
        const Series f = random_series(rng, k);
        const Series g = random_series(rng, k);
        EXPECT_EQ((f * g).coeffs(), oracle::convolve(f.coeffs(), g.coeffs(), k));
    }
}

TEST(Series, ProductTruncatesToTheShorterOrder) {
    const Series f(std::vector<Rational>(3, Rational(1)), 2);
    const Series g(std::vector<Rational>(5, Rational(1)), 4);
    EXPECT_EQ((f * g).order(), 2u);
}

TEST(Series, ReciprocalTimesSeriesIsOne) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t k = 1 + trial % 15;
        const Series f = random_series(rng, k, true);
        Series one(k);
        one[0] = Rational(1);
        EXPECT_EQ(f * cfgen::series_reciprocal(f), one);
    }
}

TEST(Series, DivisionMatchesLongDivision) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t k = 1 + trial % 10;
        const Series f = random_series(rng, k);
        const Series g = random_series(rng, k, true);
        EXPECT_EQ(cfgen::series_div(f, g).coeffs(), oracle::long_divide(f.coeffs(), g.coeffs(), k));
    }
}

TEST(Series, ReciprocalOfZeroConstantThrows) {
    const Series f(std::vector<Rational>{Rational(0), Rational(1)}, 3);
    EXPECT_THROW(cfgen::series_reciprocal(f), cfgen::division_by_zero);
}

TEST(Series, OrderOfVanishing) {
    Series f(6);
    f[3] = Rational(2);
    EXPECT_EQ(cfgen::series_order(f).value, 3u);
    EXPECT_FALSE(cfgen::series_order(f).at_least);
    const auto zero = cfgen::series_order(Series(6));
    EXPECT_TRUE(zero.at_least);
    EXPECT_EQ(zero.value, 7u);
    EXPECT_TRUE(zero.meets(7));
    EXPECT_FALSE(zero.meets(100));  // nothing is known past the truncation
}

TEST(Series, StockCoefficients) {
    const Series e = cfgen::stock_series(StockSeries::exp, 10);
    for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(e[n], Rational(cfgen::Integer(1), oracle::fact(n)));
    const Series l = cfgen::stock_series(StockSeries::log1p, 6);
    EXPECT_EQ(l[0], Rational(0));
    EXPECT_EQ(l[4], Rational::parse("-1/4"));
    const Series a = cfgen::stock_series(StockSeries::arctan_over_x, 6);
    EXPECT_EQ(a[2], Rational::parse("-1/3"));
    EXPECT_EQ(a[3], Rational(0));
    EXPECT_EQ(cfgen::stock_series(StockSeries::geom, 5)[5], Rational(1));
}

TEST(Series, TanhHalfFromReciprocalExp) {
    // tanh(x/2) = (1 - e^{-x})/(1 + e^{-x})
    const std::size_t k = 14;
    const Series em = cfgen::series_rescale(cfgen::stock_series(StockSeries::exp, k), Rational(-1));
    Series one(k);
    one[0] = Rational(1);
    EXPECT_EQ(cfgen::stock_series(StockSeries::tanh_half, k), cfgen::series_div(one - em, one + em));
    EXPECT_EQ(cfgen::stock_series(StockSeries::tanh_half, k)[1], Rational::parse("1/2"));
    EXPECT_EQ(cfgen::stock_series(StockSeries::tanh_half, k)[3], Rational::parse("-1/24"));
}

TEST(Series, RescaleAndSubstitutePower) {
    const Series g = cfgen::stock_series(StockSeries::geom, 4);
    const Series r = cfgen::series_rescale(g, Rational(2));
    EXPECT_EQ(r[3], Rational(8));
    const Series s = cfgen::series_substitute_power(g, 2, 6);
    EXPECT_EQ(s[4], Rational(1));
    EXPECT_EQ(s[3], Rational(0));
    EXPECT_EQ(s.order(), 6u);
}

TEST(Series, ParseStockNames) {
    EXPECT_EQ(cfgen::parse_stock_series("exp"), StockSeries::exp);
    EXPECT_THROW(cfgen::parse_stock_series("nope"), cfgen::usage_error);
}
