#include <gtest/gtest.h>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "pqell/special.hpp"

using namespace pqell;

TEST(LogGamma, MatchesStdLgammaAcrossRange)
{
    for (double x = 0.01; x < 60.0; x *= 1.07) {
        const double ref = std::lgamma(x);
        EXPECT_NEAR(log_gamma(x), ref, 1e-14 * std::max(1.0, std::abs(ref))) << "x=" << x;
    }
}

TEST(LogGamma, RelativeAccuracyNearZerosAtOneAndTwo)
{
    for (double x : {0.9, 0.97, 0.999, 1.001, 1.05, 1.1, 1.95, 1.999, 2.0005, 2.1}) {
        const double ref = boost::math::lgamma(x);
        EXPECT_NEAR(log_gamma(x), ref, 4e-15 * std::abs(ref) + 1e-300) << "x=" << x;
    }
    EXPECT_EQ(log_gamma(1.0), 0.0);
    EXPECT_EQ(log_gamma(2.0), 0.0);
}

TEST(Gamma, KnownValues)
{
    EXPECT_NEAR(pqell::gamma(0.5), std::sqrt(M_PI), 1e-15);
    EXPECT_NEAR(pqell::gamma(5.0), 24.0, 1e-13);
    EXPECT_NEAR(pqell::gamma(1.0 / 3.0), boost::math::tgamma(1.0 / 3.0), 1e-14);
}

TEST(Beta, MatchesBoostAndIsSymmetric)
{
    for (double a : {0.05, 0.3, 1.0 / 3.0, 0.8, 1.5, 4.0, 17.5})
        for (double b : {0.1, 0.4444444, 1.0, 2.25, 9.0}) {
            const double ref = boost::math::beta(a, b);
            EXPECT_NEAR(beta(a, b), ref, 2e-14 * ref) << a << "," << b;
            EXPECT_EQ(beta(a, b), beta(b, a));
        }
}

TEST(Beta, ClosedForms)
{
    EXPECT_NEAR(beta(0.5, 0.5), M_PI, 1e-12 * M_PI);
    for (double y : {0.25, 1.0, 3.5}) EXPECT_NEAR(beta(1.0, y), 1.0 / y, 1e-12 / y);
}

TEST(Beta, MatchesSingularEndpointQuadrature)
{
    // int_0^1 t^(-2/3) (1-t)^(-5/9) dt
    EXPECT_NEAR(beta(1.0 / 3.0, 4.0 / 9.0), boost::math::beta(1.0 / 3.0, 4.0 / 9.0), 1e-12 * 4.48);
}

TEST(LogGamma, Recurrence)
{
    for (double x = 0.1; x <= 50.0; x += 0.37) EXPECT_NEAR(log_gamma(x + 1) - log_gamma(x) - std::log(x), 0.0, 1e-12);
}

TEST(Pochhammer, SplitIdentityAndBinomialDuality)
{
    for (double a : {-2.5, -0.5, 0.3, 1.7})
        for (std::uint32_t m : {0u, 3u, 10u})
            for (std::uint32_t n : {1u, 5u}) {
                const double whole = pochhammer(a, m + n);
                EXPECT_NEAR(whole, pochhammer(a, m) * pochhammer(a + m, n), 1e-12 * std::abs(whole) + 1e-300);
            }
    for (double a = -3.0; a <= 3.0; a += 0.35)
        for (std::uint32_t k = 0; k <= 30; ++k) {
            const double lhs = gen_binomial(a, k);
            const double rhs = ((k % 2) ? -1.0 : 1.0) * pochhammer(-a, k) / boost::math::factorial<double>(k);
            EXPECT_NEAR(lhs, rhs, 1e-13 * std::abs(rhs) + 1e-300) << a << " " << k;
        }
    EXPECT_NEAR(pochhammer(-0.5, 3), -0.375, 1e-16);
    EXPECT_NEAR(gen_binomial(-0.5, 2), 0.375, 1e-16);
    EXPECT_EQ(gen_binomial(3.0, 2), 3.0);
}

TEST(PositiveReal, RejectsNonPositiveAndNonFinite)
{
    EXPECT_THROW((void)PositiveReal(0.0), DomainError);
    EXPECT_THROW((void)PositiveReal(-1.0), DomainError);
    EXPECT_THROW((void)PositiveReal(std::nan("")), DomainError);
    EXPECT_THROW((void)PositiveReal(INFINITY), DomainError);
    EXPECT_THROW(log_gamma(-0.5), DomainError);
}

TEST(Pochhammer, SmallAndLargeOrders)
{
    EXPECT_EQ(pochhammer(3.0, 0), 1.0);
    EXPECT_EQ(pochhammer(1.0, 5), 120.0);
    EXPECT_NEAR(pochhammer(0.5, 3), 0.5 * 1.5 * 2.5, 1e-15);
    EXPECT_EQ(pochhammer(-2.0, 3), 0.0);
    const double ref = boost::math::tgamma_delta_ratio(0.75, 100.0);  // Gamma(a)/Gamma(a+n)
    EXPECT_NEAR(pochhammer(0.75, 100) * ref, 1.0, 1e-12);
}

TEST(GenBinomial, IntegerAndFractionalTop)
{
    EXPECT_EQ(gen_binomial(5.0, 2), 10.0);
    EXPECT_EQ(gen_binomial(5.0, 7), 0.0);
    EXPECT_NEAR(gen_binomial(-0.5, 3), -0.3125, 1e-16);
    EXPECT_NEAR(gen_binomial(0.5, 2), -0.125, 1e-16);
}
