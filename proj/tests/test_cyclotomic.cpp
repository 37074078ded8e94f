#include <glnq/cyclotomic.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace glnq;

TEST(Cyclotomic, Polynomials)
{
    EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long>{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<long>{1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long>{1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long>{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, RootsOfUnity)
{
    for (long m = 1; m <= 24; ++m) {
        CycValue z = CycValue::zeta(m, 1);
        CycValue p = CycValue::rational(1, m);
        CycValue sum(m);
        for (long k = 0; k < m; ++k) {
            sum = sum + p;
            p = p * z;
        }
        EXPECT_EQ(p, CycValue::rational(1, m)) << m;
        EXPECT_TRUE(sum.is_zero() || m == 1) << m;
    }
}

TEST(Cyclotomic, InverseAndRational)
{
    CycValue a = CycValue::zeta(5, 1) + CycValue::rational(2, 5);
    EXPECT_EQ(a * a.inverse(), CycValue::rational(1, 5));
    EXPECT_FALSE(a.is_rational());
    // zeta_3 + zeta_3^2 = -1
    CycValue b = CycValue::zeta(3, 1) + CycValue::zeta(3, 2);
    ASSERT_TRUE(b.is_rational());
    EXPECT_EQ(b.to_rational(), -1);
    EXPECT_THROW(a.to_rational(), std::domain_error);
    EXPECT_THROW(CycValue(7).inverse(), std::domain_error);
}

TEST(Cyclotomic, MixedConductors)
{
    // zeta_4 * zeta_4 = zeta_2 = -1, computed across conductors 4 and 2
    CycValue i = CycValue::zeta(4, 1);
    EXPECT_EQ(i * i, CycValue::rational(-1, 2));
    EXPECT_EQ(CycValue::zeta(6, 2), CycValue::zeta(3, 1));
    CycValue s = CycValue::zeta(3, 1) + CycValue::zeta(4, 1);
    EXPECT_EQ(s - CycValue::zeta(4, 1), CycValue::zeta(3, 1));
}

TEST(Cyclotomic, GroupRingSumReduces)
{
    GroupRingSum g(6);
    for (long k = 0; k < 6; ++k)
        g.add(k, 3);
    EXPECT_TRUE(g.value().is_zero());
    GroupRingSum h(4);
    h.add(1, 1);
    h.add(3, 1);
    EXPECT_TRUE(h.value().is_zero());
}

TEST(Cyclotomic, ThetaIsACharacter)
{
    Field F(7);
    for (long k = 0; k < 6; ++k)
        for (Elem a = 1; a < 7; ++a)
            for (Elem b = 1; b < 7; ++b)
                EXPECT_EQ(theta(F, k, F.mul(a, b)), theta(F, k, a) * theta(F, k, b));
    // sum over characters vanishes off the identity
    for (Elem a = 2; a < 7; ++a) {
        CycValue s(6);
        for (long k = 0; k < 6; ++k)
            s = s + theta(F, k, a);
        EXPECT_TRUE(s.is_zero());
    }
}

TEST(Cyclotomic, Json)
{
    auto j = (CycValue::zeta(4, 1) + CycValue::rational(make_rational(1, 2), 4)).to_json();
    EXPECT_EQ(j["conductor"], 4);
    EXPECT_EQ(j["coeffs"]["0"], "1/2");
    EXPECT_EQ(j["coeffs"]["1"], "1");
}
