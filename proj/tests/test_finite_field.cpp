#include <glnq/finite_field.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace glnq;

class FieldAxioms : public ::testing::TestWithParam<int> {};

TEST_P(FieldAxioms, Hold)
{
    Field F(GetParam());
    const int q = F.q();
    for (Elem a = 0; a < static_cast<Elem>(q); ++a) {
        EXPECT_EQ(F.add(a, 0), a);
        EXPECT_EQ(F.mul(a, 1), a);
        EXPECT_EQ(F.add(a, F.neg(a)), 0u);
        if (a != 0) {
            EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
            EXPECT_EQ(F.gen_pow(F.dlog(a)), a);
            EXPECT_EQ(F.pow(a, q - 1), 1u);
        }
        EXPECT_EQ(F.pow(a, q), a);
        for (Elem b = 0; b < static_cast<Elem>(q); ++b) {
            EXPECT_EQ(F.add(a, b), F.add(b, a));
            EXPECT_EQ(F.mul(a, b), F.mul(b, a));
            for (Elem c = 0; c < static_cast<Elem>(q); c += 3)
                EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
        }
    }
    EXPECT_EQ(F.order(F.generator()), q - 1);
    // frobenius is additive
    for (Elem a = 0; a < static_cast<Elem>(q); ++a)
        for (Elem b = 0; b < static_cast<Elem>(q); ++b)
            EXPECT_EQ(F.frobenius(F.add(a, b)), F.add(F.frobenius(a), F.frobenius(b)));
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms, ::testing::Values(2, 3, 4, 5, 7, 8, 9, 16, 25, 27));

TEST(Field, RejectsNonPrimePowers)
{
    EXPECT_THROW(Field(6), std::invalid_argument);
    EXPECT_THROW(Field(1), std::invalid_argument);
    EXPECT_FALSE(is_prime_power(12));
    EXPECT_TRUE(is_prime_power(49));
    auto pp = factor_prime_power(81);
    ASSERT_TRUE(pp);
    EXPECT_EQ(pp->p, 3);
    EXPECT_EQ(pp->e, 4);
}

TEST(Field, ParseAndFormat)
{
    Field F5(5);
    EXPECT_EQ(F5.parse("-1"), 4u);
    EXPECT_EQ(F5.parse("7"), 2u);
    EXPECT_EQ(F5.format(3), "3");
    Field F4(4);
    EXPECT_EQ(F4.parse("g"), F4.generator());
    EXPECT_EQ(F4.parse("g^2"), F4.mul(F4.generator(), F4.generator()));
    EXPECT_EQ(F4.parse(F4.format(F4.gen_pow(2))), F4.gen_pow(2));
    EXPECT_THROW(F4.parse("x"), std::invalid_argument);
    EXPECT_THROW(F4.parse(""), std::invalid_argument);
}

TEST(Irreducibles, CountsMatchNecklaces)
{
    for (int q : {2, 3, 4, 5})
        for (int d = 1; d <= 4; ++d) {
            Field F(q);
            auto irr = irreducibles(F, d);
            EXPECT_EQ(static_cast<long>(irr.size()), necklace_count(q, d)) << q << " " << d;
            for (const auto& f : irr) {
                EXPECT_EQ(f.degree(), d);
                EXPECT_EQ(f.coeffs.back(), 1u);
                EXPECT_TRUE(is_irreducible(F, f.coeffs));
            }
        }
    EXPECT_EQ(necklace_count(2, 4), 3);
    EXPECT_EQ(necklace_count(3, 2), 3);
}

TEST(Polynomials, Arithmetic)
{
    Field F(3);
    Poly a = parse_poly(F, "1,1");     // t + 1
    Poly b = parse_poly(F, "2,1");     // t + 2
    Poly prod = poly_mul(F, a, b);     // t^2 + 2 = t^2 - 1
    EXPECT_EQ(format_poly(F, prod), "2,0,1");
    auto [quo, rem] = poly_divmod(F, prod, a);
    EXPECT_EQ(quo, b);
    EXPECT_TRUE(rem.empty());
    EXPECT_EQ(poly_gcd(F, prod, poly_mul(F, a, a)), a);
    EXPECT_FALSE(is_irreducible(F, prod));
    EXPECT_TRUE(is_irreducible(F, parse_poly(F, "1,0,1")));
    EXPECT_EQ(poly_pow(F, a, 3), parse_poly(F, "1,0,0,1"));
}
