#include <random>

#include <gtest/gtest.h>

#include <cfgen/families.hpp>
#include <cfgen/transform.hpp>

#include "oracles.hpp"

using cfgen::FamilyId;
using cfgen::LFTCoeffs;
using cfgen::Rational;
using cfgen::Series;
using cfgen::StockSeries;

namespace {

Series one(std::size_t k) {
    Series s(k);
    s[0] = Rational(1);
    return s;
}

}  // namespace

TEST(Transform, BernoulliToExponentialRatio) {
    const LFTCoeffs t{Rational(-1), Rational(1), Rational(1), Rational(1)};
    const auto image = cfgen::lft_transform(cfgen::build_bernoulli(1, Rational(0), 12), t);
    EXPECT_EQ(cfgen::render(image, 3), "(x)/(4+x - (4x)/(3+x - (3x)/(4+x ...)))");
    // (e^x - x - 1)/(e^x + x - 1)
    const std::size_t k = 12;
    // both numerator and denominator vanish at 0; divide by x first
    const Series em1_x = cfgen::stock_series(StockSeries::expm1_over_x, k);
    Series num = em1_x;
    num[0] -= Rational(1);
    Series den = em1_x;
    den[0] += Rational(1);
    const Series target = cfgen::series_div(num, den);
    const auto t12 = cfgen::convergent_taylor(cfgen::convergents(image, 12).back(), k);
    EXPECT_EQ(t12, target);
}

TEST(Transform, ReciprocalExponentialToTanhHalf) {
    const LFTCoeffs t{Rational(-1), Rational(1), Rational(1), Rational(1)};
    const auto image = cfgen::lft_transform(cfgen::build_bernoulli(0, Rational(0), 12), t);
    EXPECT_EQ(cfgen::render(image, 3), "(x)/(2+x - (2x)/(2+x - (2x)/(3+x ...)))");
    const auto t12 = cfgen::convergent_taylor(cfgen::convergents(image, 12).back(), 12);
    EXPECT_EQ(t12, cfgen::stock_series(StockSeries::tanh_half, 12));
}

TEST(Transform, CauchyToLogRatio) {
    const LFTCoeffs t{Rational(1), Rational(-1), Rational(1), Rational(1)};
    const auto image = cfgen::lft_transform(cfgen::build_cauchy(1, Rational(0), 12), t);
    EXPECT_EQ(cfgen::render(image, 3), "(x)/(4-x + (8x)/(3-2x + (9x)/(4-3x ...)))");
    // (x - log(1+x))/(x + log(1+x)) = (1 - L)/(1 + L), L = log(1+x)/x
    const std::size_t k = 12;
    const Series L = cfgen::stock_series(StockSeries::log1p_over_x, k + 1);
    const Series target = cfgen::series_div(one(k + 1) - L, one(k + 1) + L).truncate(k);
    const auto t12 = cfgen::convergent_taylor(cfgen::convergents(image, 12).back(), k);
    EXPECT_EQ(t12, target);
}

TEST(Transform, GeneralHeadFormula) {
    const LFTCoeffs t{Rational(2), Rational(3), Rational(5), Rational(7)};
    const auto cf = cfgen::build_arctan(5);
    const auto image = cfgen::lft_transform(cf, t);
    EXPECT_EQ(image.head(), cfgen::Poly(Rational(5, 12)));
    const auto& gh = *cf.meta().gh;
    const auto& first = image.terms()[0];
    // den_1 = (c+d) g_1 + d h_1 y, displayed num_1 = ((ad-bc)/(c+d)) h_1 y
    EXPECT_EQ(first.den, (cfgen::Poly{Rational(12) * gh.g[1], Rational(7) * gh.h[1]}));
    EXPECT_EQ(-first.num, cfgen::Poly::monomial(Rational(-1, 12) * gh.h[1], 1));
    EXPECT_EQ(image.terms()[1].num, cf.terms()[1].num.scale(Rational(12)));
    for (std::size_t k = 2; k < 5; ++k) EXPECT_EQ(image.terms()[k], cf.terms()[k]);
}

TEST(Transform, MatrixProductAndConvergentImages) {
    std::mt19937_64 rng(41);
    for (const auto& spec : cfgen::parameter_grid()) {
        const auto cf = cfgen::build(spec, 8);
        if (cf.meta().shape != cfgen::CFShape::pure_gh || cf.depth() < 2) continue;
        LFTCoeffs t{oracle::random_rational(rng), oracle::random_rational(rng), oracle::random_rational(rng),
                    oracle::random_rational(rng)};
        if (t.det().is_zero() || (t.c + t.d).is_zero()) continue;
        EXPECT_TRUE(cfgen::matrix_product_check(cf, t, cf.depth())) << spec.label();
        const auto image = cfgen::lft_transform(cf, t);
        const auto p = cfgen::convergents(cf, cf.depth());
        const auto pt = cfgen::convergents(image, cf.depth());
        for (std::size_t n = 1; n <= cf.depth(); ++n) EXPECT_TRUE(cfgen::convergent_image_check(p[n], pt[n], t));
    }
}

TEST(Transform, DefectCarriesOverToMappedTarget) {
    const LFTCoeffs t{Rational(3), Rational(-1), Rational(2), Rational(5)};
    for (long N = 1; N <= 3; ++N) {
        const auto cf = cfgen::build_bernoulli(N, Rational(0), 8);
        const auto image = cfgen::lft_transform(cf, t);
        const Series mapped = cfgen::lft_apply_value(t, cfgen::target_series({FamilyId::bernoulli, N}, 10));
        const auto pairs = cfgen::convergents(image, 8);
        for (std::size_t n = 1; n <= 8; ++n) {
            const Series taylor = cfgen::convergent_taylor(pairs[n], 10);
            EXPECT_TRUE(cfgen::series_order(taylor - mapped).meets(n + 1)) << "N=" << N << " n=" << n;
        }
    }
}

TEST(Transform, InverseMapRestoresTheSeries) {
    const LFTCoeffs t{Rational(1), Rational(2), Rational(-1), Rational(4)};
    const auto cf = cfgen::build_cauchy(2, Rational(1, 2), 8);
    const auto back = cfgen::lft_transform(cfgen::lft_transform(cf, t), t.inverse());
    const auto p = cfgen::convergents(cf, 8).back();
    const auto pb = cfgen::convergents(back, 8).back();
    EXPECT_EQ(cfgen::convergent_taylor(p, 12), cfgen::convergent_taylor(pb, 12));
}

TEST(Transform, Preconditions) {
    const auto cf = cfgen::build_bernoulli(1, Rational(0), 4);
    EXPECT_THROW(cfgen::lft_transform(cf, {Rational(1), Rational(1), Rational(1), Rational(1)}), cfgen::usage_error);
    EXPECT_THROW(cfgen::lft_transform(cf, {Rational(1), Rational(0), Rational(1), Rational(-1)}), cfgen::usage_error);
    EXPECT_THROW(cfgen::lft_transform(cfgen::build_harmonic(1, Rational(1), Rational(1), 4), {}), cfgen::shape_error);
    EXPECT_THROW(cfgen::lft_transform(cfgen::build_zeta(2, 4), {}), cfgen::shape_error);
    EXPECT_THROW(cfgen::lft_apply_value(LFTCoeffs{Rational(1), Rational(0), Rational(1), Rational(-1)}, Rational(1)),
                 cfgen::pole_error);
}
