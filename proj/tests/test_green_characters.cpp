#include <glnq/green_characters.hpp>
#include <glnq/oracle.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace glnq;

namespace {

SplitSemisimpleClass inverse_class(const Field& F, const SplitSemisimpleClass& c)
{
    std::vector<std::pair<Elem, int>> eig;
    for (auto [a, k] : c.blocks)
        eig.emplace_back(F.inv(a), k);
    return make_split_semisimple(F, eig);
}

std::vector<SplitSemisimpleClass> all_split_classes(const Field& F, int n)
{
    std::vector<SplitSemisimpleClass> out;
    std::vector<std::pair<Elem, int>> cur;
    std::function<void(Elem, int)> rec = [&](Elem from, int left) {
        if (left == 0) {
            out.push_back(make_split_semisimple(F, cur));
            return;
        }
        for (Elem a = from; a < static_cast<Elem>(F.q()); ++a)
            for (int k = 1; k <= left; ++k) {
                cur.emplace_back(a, k);
                rec(a + 1, left - k);
                cur.pop_back();
            }
    };
    rec(1, n);
    return out;
}

} // namespace

TEST(Degrees, SumOfSquaresIsGroupOrder)
{
    for (int n = 1; n <= 4; ++n)
        for (int q : {2, 3, 4, 5}) {
            Integer total = 0;
            for (const auto& e : enumerate_dual_classes(n, q)) {
                Integer d = degree(e, q);
                EXPECT_GT(d, 0);
                total += d * d;
            }
            EXPECT_EQ(total, gl_order(n, q)) << n << " " << q;
        }
}

TEST(Degrees, GL2Spectrum)
{
    // GL_2(F_q): q-1 of degree 1, q-1 of degree q, (q-1)(q-2)/2 of degree q+1, q(q-1)/2 of degree q-1
    for (int q : {3, 4, 5, 7}) {
        std::map<Integer, int> count;
        for (const auto& e : enumerate_dual_classes(2, q))
            ++count[degree(e, q)];
        EXPECT_EQ(count[1], q - 1);
        EXPECT_EQ(count[q], q - 1);
        EXPECT_EQ(count[q + 1], (q - 1) * (q - 2) / 2);
        EXPECT_EQ(count[q - 1], q * (q - 1) / 2);
    }
}

TEST(CharacterValues, IdentityGivesDegree)
{
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 3}, {3, 4}}) {
        Field F(q);
        SemisimpleEvaluator ev(F, make_split_semisimple(F, {{1, n}}));
        for (const auto& e : enumerate_dual_classes(n, q)) {
            auto v = ev.value(e);
            ASSERT_TRUE(v.is_rational());
            EXPECT_EQ(v.to_rational(), Rational(degree(e, q))) << e.to_string();
        }
    }
}

TEST(CharacterValues, ColumnOrthogonality)
{
    // sum_chi chi(c) chi(d^{-1}) = |C(c)| [c = d], with |C(c)| = prod |GL_{n_i}(q)|
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}}) {
        Field F(q);
        auto classes = all_split_classes(F, n);
        auto duals = enumerate_dual_classes(n, q);
        std::vector<std::vector<CycValue>> values;
        for (const auto& c : classes) {
            SemisimpleEvaluator ev(F, c);
            std::vector<CycValue> row;
            for (const auto& e : duals)
                row.push_back(ev.value(e));
            values.push_back(row);
        }
        for (std::size_t i = 0; i < classes.size(); ++i) {
            auto inv = inverse_class(F, classes[i]);
            std::size_t ii = 0;
            for (; ii < classes.size(); ++ii)
                if (classes[ii].label(F) == inv.label(F))
                    break;
            ASSERT_LT(ii, classes.size());
            for (std::size_t j = 0; j < classes.size(); ++j) {
                CycValue s(q - 1);
                for (std::size_t k = 0; k < duals.size(); ++k)
                    s = s + values[j][k] * values[ii][k];
                Integer expected = 0;
                if (i == j) {
                    expected = 1;
                    for (auto [a, mult] : classes[i].blocks)
                        expected *= gl_order(mult, q);
                }
                ASSERT_TRUE(s.is_rational());
                EXPECT_EQ(s.to_rational(), Rational(expected))
                    << "n=" << n << " q=" << q << " " << classes[i].label(F).to_string(F) << " vs "
                    << classes[j].label(F).to_string(F);
            }
        }
    }
}

TEST(CharacterValues, CentralRatioForPrimaryTypes)
{
    // I_e(xi)/I_e(1) = theta^kappa(xi^{n/s}) for e = g^lambda with one s-simplex
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 3}, {2, 7}, {3, 4}}) {
        Field F(q);
        for (Elem xi = 1; xi < static_cast<Elem>(q); ++xi) {
            SemisimpleEvaluator ev(F, make_split_semisimple(F, {{xi, n}}));
            for (const auto& e : enumerate_dual_classes(n, q)) {
                if (e.simplices.size() != 1)
                    continue;
                const int s = e.simplices[0].s;
                auto ratio = ev.value(e) * CycValue::rational(1 / Rational(degree(e, q)), q - 1);
                EXPECT_EQ(ratio, theta(F, e.simplices[0].root, F.pow(xi, n / s))) << e.to_string();
            }
        }
    }
}

TEST(GreenPolynomials, SpecialCases)
{
    for (int q : {2, 3, 5})
        for (int n = 1; n <= 4; ++n)
            for (const auto& rho : enumerate_partitions(n)) {
                EXPECT_EQ(green_polynomial_special(Partition::rectangle(1, n), rho, q), phi(n, q) * beta(rho, q));
                EXPECT_EQ(green_polynomial_special(Partition({n}), rho, q), 1);
            }
    EXPECT_EQ(green_polynomial_special(Partition({2, 1}), Partition({3}), 2), phi(1, 2));
    EXPECT_THROW(green_polynomial_special(Partition({2, 1}), Partition({2, 1}), 2), std::invalid_argument);
}

TEST(TFunction, ReducedFormAgrees)
{
    Field F(5);
    for (int s : {1, 2})
        for (int d : {1, 2, 4})
            if (d % s == 0)
                for (long kappa : root_set(5, s))
                    for (Elem a = 1; a < 5; ++a)
                        EXPECT_EQ(t_function(F, s, d, kappa, a), t_function_reduced(F, s, d, kappa, a));
}
