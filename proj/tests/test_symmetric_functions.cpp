#include <glnq/symmetric_functions.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace glnq;

TEST(SnCharacter, MatchesFrobeniusFormula)
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            for (const auto& rho : enumerate_partitions(n))
                EXPECT_EQ(sn_character(lambda, rho), oracle::frobenius_character(lambda, rho))
                    << lambda.to_string() << " " << rho.to_string();
}

TEST(SnCharacter, Orthogonality)
{
    for (int n = 1; n <= 6; ++n) {
        auto ps = enumerate_partitions(n);
        for (const auto& a : ps)
            for (const auto& b : ps) {
                Rational s = 0;
                for (const auto& rho : ps)
                    s += Rational(sn_character(a, rho) * sn_character(b, rho)) / Rational(z(rho));
                EXPECT_EQ(s, a == b ? 1 : 0);
            }
    }
}

TEST(SnCharacter, KnownValues)
{
    EXPECT_EQ(sn_character(Partition({2, 1}), Partition({1, 1, 1})), 2);
    EXPECT_EQ(sn_character(Partition({2, 1}), Partition({3})), -1);
    EXPECT_EQ(sn_character(Partition({1, 1, 1}), Partition({2, 1})), -1);
    EXPECT_EQ(sn_character(Partition({3, 2}), Partition({1, 1, 1, 1, 1})), 5);
    EXPECT_THROW(sn_character(Partition({2}), Partition({1, 1, 1})), std::invalid_argument);
}

TEST(CycleType, OfPermutations)
{
    EXPECT_EQ(cycle_type({1, 2, 0, 3}), Partition({3, 1}));
    EXPECT_EQ(cycle_type({0, 1, 2}), Partition({1, 1, 1}));
    EXPECT_EQ(cycle_type(oracle::permutation_of_type(Partition({3, 2, 1}))), Partition({3, 2, 1}));
}

TEST(Immanant, PermanentAndDeterminant)
{
    RationalMatrix ones(4, std::vector<Rational>(4, Rational(1)));
    EXPECT_EQ(immanant(ones, Partition({4})), 24);
    EXPECT_EQ(immanant(ones, Partition({1, 1, 1, 1})), 0);
    RationalMatrix a{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    EXPECT_EQ(immanant(a, Partition({1, 1, 1})), 2 * (12 - 1) - 1 * 4);
    EXPECT_EQ(immanant(a, Partition({3})), 2 * 13 + 1 * 4);
    EXPECT_THROW(immanant(a, Partition({2})), std::invalid_argument);
}

TEST(Immanant, CharacterAsImmanantOfPermutationMatrix)
{
    // the immanant of a permutation matrix P_pi is chi(pi^{-1}) = chi(pi)
    for (int n = 1; n <= 5; ++n)
        for (const auto& rho : enumerate_partitions(n)) {
            auto perm = oracle::permutation_of_type(rho);
            RationalMatrix p(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
            for (int i = 0; i < n; ++i)
                p[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = 1;
            for (const auto& lambda : enumerate_partitions(n))
                EXPECT_EQ(immanant(p, lambda), oracle::frobenius_character(lambda, rho));
        }
}

TEST(SchurQ, ProductFormEqualsPowerSum)
{
    for (int n = 1; n <= 6; ++n)
        for (int q : {2, 3, 5})
            for (const auto& lambda : enumerate_partitions(n))
                EXPECT_EQ(schur_q(lambda, q), schur_q_powersum(lambda, q)) << lambda.to_string() << " q=" << q;
}

TEST(SchurQ, BetaExpansion)
{
    for (int n = 1; n <= 5; ++n)
        for (int q : {2, 3, 5})
            for (const auto& rho : enumerate_partitions(n)) {
                Rational s = 0;
                for (const auto& lambda : enumerate_partitions(n))
                    s += Rational(sn_character(lambda, rho)) * schur_q(lambda, q);
                EXPECT_EQ(s, beta(rho, q));
            }
}

TEST(SchurQ, SmallCases)
{
    // {n : q} = 1/phi_n(q); {1^n : q} = q^{n(n-1)/2}/phi_n(q)
    EXPECT_EQ(schur_q(Partition({2}), 2), 1 / phi(2, 2));
    EXPECT_EQ(schur_q(Partition({1, 1}), 2), 2 / phi(2, 2));
    EXPECT_EQ(phi(3, 2), Rational(-1 * -3 * -7));
    EXPECT_EQ(phi(0, 7), 1);
}

TEST(RestrictionGram, TrivialBlocks)
{
    // restriction to S_n itself is the identity pairing
    for (int n = 1; n <= 5; ++n)
        for (const auto& a : enumerate_partitions(n))
            for (const auto& b : enumerate_partitions(n))
                EXPECT_EQ(restriction_gram(a, b, {n}), a == b ? 1 : 0);
    // restriction to the trivial group counts dim chi^a * dim chi^b
    EXPECT_EQ(restriction_gram(Partition({2, 1}), Partition({2, 1}), {1, 1, 1}), 4);
    EXPECT_EQ(restriction_gram(Partition({2}), Partition({1, 1}), {1, 1}), 1);
    EXPECT_THROW(restriction_gram(Partition({2}), Partition({1, 1}), {3}), std::invalid_argument);
}
