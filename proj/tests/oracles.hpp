#ifndef GLNQ_TESTS_ORACLES_HPP
#define GLNQ_TESTS_ORACLES_HPP

// Independent reference computations used only by the tests.

#include <glnq/glnq.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using namespace glnq;

// Number of ways to drop the parts of rho into n labelled boxes so that box i
// receives total alpha_i; this is the coefficient of x^alpha in p_rho(x_1..x_n).
inline long powersum_coefficient(const std::vector<int>& rho, std::vector<int> alpha)
{
    for (int a : alpha)
        if (a < 0)
            return 0;
    std::function<long(std::size_t)> rec = [&](std::size_t k) -> long {
        if (k == rho.size()) {
            for (int a : alpha)
                if (a != 0)
                    return 0;
            return 1;
        }
        long total = 0;
        for (auto& a : alpha)
            if (a >= rho[k]) {
                a -= rho[k];
                total += rec(k + 1);
                a += rho[k];
            }
        return total;
    };
    return rec(0);
}

// Frobenius: chi^lambda(rho) = [x^{lambda + delta}] a_delta(x) p_rho(x), with
// a_delta = sum_sigma sgn(sigma) x^{sigma(delta)}.
inline long frobenius_character(const Partition& lambda, const Partition& rho)
{
    const int n = lambda.size();
    std::vector<int> target(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        target[static_cast<std::size_t>(i)] = (i < lambda.length() ? lambda[static_cast<std::size_t>(i)] : 0) + n - 1 - i;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    long total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    ++inversions;
        std::vector<int> alpha(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            alpha[static_cast<std::size_t>(i)] = target[static_cast<std::size_t>(i)] - (n - 1 - perm[static_cast<std::size_t>(i)]);
        long c = powersum_coefficient(rho.parts(), alpha);
        total += inversions % 2 ? -c : c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// A permutation of cycle type rho, written as an image vector.
inline std::vector<int> permutation_of_type(const Partition& rho)
{
    std::vector<int> perm;
    int start = 0;
    for (int part : rho.parts()) {
        for (int i = 0; i < part; ++i)
            perm.push_back(start + (i + 1) % part);
        start += part;
    }
    return perm;
}

// sum of theta^kappa(xi) over every kappa in 1..q^s-1 whose orbit under
// multiplication by q (mod q^s - 1) has exactly s elements.
inline CycValue direct_root_sum(const Field& F, int s, Elem xi)
{
    const long m = F.q() - 1;
    long mod = 1;
    for (int i = 0; i < s; ++i)
        mod *= F.q();
    mod -= 1;
    CycValue acc(m);
    for (long kappa = 1; kappa <= mod; ++kappa) {
        int orbit = 0;
        long x = kappa;
        do {
            x = x * F.q() % mod;
            if (x == 0)
                x = mod;
            ++orbit;
        } while (x != kappa);
        if (orbit == s)
            acc = acc + theta(F, kappa, xi);
    }
    return acc;
}

// |GL_n(F_q)| as a product of (q^n - q^i), in 64-bit arithmetic.
inline std::uint64_t gl_order_u64(int n, long q)
{
    std::uint64_t qn = 1;
    for (int i = 0; i < n; ++i)
        qn *= static_cast<std::uint64_t>(q);
    std::uint64_t r = 1, qi = 1;
    for (int i = 0; i < n; ++i) {
        r *= qn - qi;
        qi *= static_cast<std::uint64_t>(q);
    }
    return r;
}

// Number of conjugacy classes of GL_n(F_q): coefficient of x^n in
// prod_d (sum_m p(m) x^{dm})^{N_d}, N_d = monic irreducibles of degree d other than t.
inline std::uint64_t class_count(int n, long q)
{
    std::vector<std::uint64_t> N(static_cast<std::size_t>(n + 1), 0);
    for (int d = 1; d <= n; ++d) {
        long total = 0;
        for (long r : divisors(d))
            total += mobius(d / r) * static_cast<long>(integer_pow(q, static_cast<unsigned long>(r)).get_ui());
        N[static_cast<std::size_t>(d)] = static_cast<std::uint64_t>(total / d) - (d == 1 ? 1 : 0);
    }
    std::vector<std::uint64_t> f(static_cast<std::size_t>(n + 1), 0);
    f[0] = 1;
    for (int d = 1; d <= n; ++d)
        for (std::uint64_t copy = 0; copy < N[static_cast<std::size_t>(d)]; ++copy) {
            std::vector<std::uint64_t> g(static_cast<std::size_t>(n + 1), 0);
            for (int a = 0; a <= n; ++a)
                for (int m = 0; a + d * m <= n; ++m)
                    g[static_cast<std::size_t>(a + d * m)] += f[static_cast<std::size_t>(a)] * partition_number(m);
            f = g;
        }
    return f[static_cast<std::size_t>(n)];
}

} // namespace oracle

#endif
