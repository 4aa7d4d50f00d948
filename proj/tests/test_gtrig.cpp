#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "pqell/gtrig.hpp"

using namespace pqell;

TEST(PQParams, Validation)
{
    EXPECT_THROW((void)PQParams(1.0, 2.0), DomainError);
    EXPECT_THROW((void)PQParams(2.0, 1.0), DomainError);
    EXPECT_THROW((void)PQParams(std::nan(""), 2.0), DomainError);
    EXPECT_NO_THROW(PQParams::relaxed(2.0, 1.0));
    EXPECT_THROW(PQParams::relaxed(2.0, 0.0), DomainError);
    EXPECT_EQ(PQParams(1.5, 2.25), PQParams(1.5, 2.25));
}

TEST(HalfPeriod, ClassicalAndFrozen)
{
    EXPECT_NEAR(PQParams(2, 2).half_period(), std::numbers::pi, 1e-14);
    // 40-digit reference: (2/q) B(1 - 1/p, 1/q)
    EXPECT_NEAR(pi_pq(PQParams(1.5, 2.25)).pi_pq, 3.987421887527027916932947931166236691546, 4e-15);
    // pi_{p,p} = 2 pi / (p sin(pi/p))
    EXPECT_NEAR(PQParams(3, 3).half_period(), 2 * std::numbers::pi / (3 * std::sin(std::numbers::pi / 3)), 1e-14);
}

TEST(SinPQ, ReducesToCircularFunctions)
{
    const PQParams pq(2, 2);
    for (double x = -7.0; x < 7.0; x += 0.37) {
        EXPECT_NEAR(sin_pq(pq, x), std::sin(x), 1e-14) << x;
        // cos is recovered from sin, so it loses digits where sin is near 1
        EXPECT_NEAR(cos_pq(pq, x), std::cos(x), 1e-13) << x;
    }
    EXPECT_NEAR(tan_pq(pq, 0.7), std::tan(0.7), 1e-14);
    EXPECT_NEAR(arcsin_pq(pq, 0.3), std::asin(0.3), 1e-15);
}

TEST(SinPQ, FrozenValues)
{
    const PQParams pq(1.5, 2.25);
    EXPECT_NEAR(sin_pq(pq, 1.0), 0.8260889626024109473499348762633336155205, 1e-14);
    EXPECT_NEAR(arcsin_pq(pq, 0.5), 0.5241422002243744871249895335472472788868, 1e-15);
    EXPECT_NEAR(arcsn_pq(pq, 0.5, 0.7), 0.5352553066431869451119752694148892592508, 1e-15);
}

TEST(SinPQ, QuarterPeriodAndSymmetry)
{
    const PQParams pq(3.0, 1.5);
    const double half = 0.5 * pq.half_period();
    EXPECT_EQ(sin_pq(pq, half), 1.0);
    EXPECT_EQ(cos_pq(pq, half), 0.0);
    EXPECT_NEAR(sin_pq(pq, pq.half_period()), 0.0, 1e-15);
    for (double x : {0.1, 0.9, 2.5}) {
        EXPECT_NEAR(sin_pq(pq, -x), -sin_pq(pq, x), 1e-15);
        EXPECT_NEAR(cos_pq(pq, -x), cos_pq(pq, x), 1e-15);
        EXPECT_NEAR(sin_pq(pq, pq.half_period() - x), sin_pq(pq, x), 1e-14);
    }
}

TEST(SinPQ, PythagoreanIdentity)
{
    for (double p : {1.25, 2.0, 4.0})
        for (double q : {1.25, 2.25, 4.0}) {
            const PQParams pq(p, q);
            for (double x = -5.0; x < 5.0; x += 0.61)
                EXPECT_NEAR(std::pow(std::abs(cos_pq(pq, x)), p) + std::pow(std::abs(sin_pq(pq, x)), q), 1.0, 1e-12);
        }
}

TEST(SinPQ, InvertsArcsin)
{
    const PQParams pq(1.25, 4.0);
    for (double x : {0.05, 0.3, 0.6, 0.95, 0.999999})
        EXPECT_NEAR(sin_pq(pq, arcsin_pq(pq, x)), x, 1e-14);
}

TEST(TanPQ, PoleIsReported)
{
    const PQParams pq(1.5, 2.25);
    EXPECT_THROW(tan_pq(pq, 0.5 * pq.half_period()), PoleError);
    EXPECT_THROW(tan_pq(pq, -1.5 * pq.half_period()), DomainError);
}

TEST(Arcsn, ReducesToArcsinAtZeroModulus)
{
    const PQParams pq(1.5, 2.25);
    EXPECT_NEAR(arcsn_pq(pq, 0.4, 0.0), arcsin_pq(pq, 0.4), 1e-15);
    EXPECT_NEAR(arcsn_pq(pq, 1.0, 0.0), 0.5 * pq.half_period(), 1e-14);
}

TEST(Sn, RoundTripAndDomain)
{
    const PQParams pq(2.25, 1.5);
    for (double r : {0.0, 0.4, 0.95})
        for (double x : {0.01, 0.5, 0.99}) EXPECT_NEAR(sn_pq(pq, arcsn_pq(pq, x, r), r), x, 1e-13);
    EXPECT_THROW(sn_pq(pq, 0.1, 1.0), DomainError);
    EXPECT_THROW(sn_pq(pq, 100.0, 0.5), DomainError);
    EXPECT_THROW(arcsn_pq(pq, 1.5, 0.5), DomainError);
}

TEST(Sn, ClassicalJacobi)
{
    // am(0.75 | m = 0.25) = asin(sn(0.75, k = 0.5))
    const PQParams pq(2, 2);
    EXPECT_NEAR(std::asin(sn_pq(pq, 0.75, 0.5)), 0.7343587626602809016553390063, 1e-13);
}
