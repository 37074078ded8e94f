#ifndef GLNQ_SYMMETRIC_FUNCTIONS_HPP
#define GLNQ_SYMMETRIC_FUNCTIONS_HPP

// Characters of S_n, immanants, and the Schur functions {lambda : q}
// specialised at 1, q, q^2, ...

#include <glnq/numeric.hpp>
#include <glnq/partitions.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace glnq {

namespace detail {

// Murnaghan-Nakayama on beta-sets. Rim hooks of length k correspond to
// moving one bead from b to b-k onto an empty position; the sign counts
// the beads jumped over.
inline long mn_recurse(const std::vector<int>& lambda, const std::vector<int>& rho, std::size_t pos,
                       std::map<std::pair<std::vector<int>, std::vector<int>>, long>& memo)
{
    if (pos == rho.size())
        return lambda.empty() ? 1 : 0;

    std::vector<int> rest(rho.begin() + static_cast<long>(pos), rho.end());
    auto key = std::make_pair(lambda, rest);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    const int k = rho[pos];
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beads(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        beads[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
    std::set<int> occupied(beads.begin(), beads.end());

    long total = 0;
    for (int i = 0; i < len; ++i) {
        int b = beads[static_cast<std::size_t>(i)];
        int target = b - k;
        if (target < 0 || occupied.count(target))
            continue;
        int jumped = 0;
        for (int other : beads)
            if (other > target && other < b)
                ++jumped;
        std::vector<int> nb = beads;
        nb[static_cast<std::size_t>(i)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> next;
        for (int j = 0; j < len; ++j) {
            int part = nb[static_cast<std::size_t>(j)] - (len - 1 - j);
            if (part > 0)
                next.push_back(part);
        }
        long sub = mn_recurse(next, rho, pos + 1, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace detail

/// chi^lambda evaluated at cycle type rho (Murnaghan-Nakayama, memoised per thread).
inline long sn_character(const Partition& lambda, const Partition& rho)
{
    if (lambda.size() != rho.size())
        throw std::invalid_argument("sn_character: |lambda| != |rho|");
    thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo;
    return detail::mn_recurse(lambda.parts(), rho.parts(), 0, memo);
}

/// Cycle type of a permutation given in one-line notation (0-based images).
inline Partition cycle_type(const std::vector<int>& perm)
{
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> cycles;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        cycles.push_back(len);
    }
    return Partition(std::move(cycles));
}

using RationalMatrix = std::vector<std::vector<Rational>>;

/// |A|^(lambda) = sum_sigma chi(sigma) prod_i a_{i,sigma(i)}, with the
/// class function chi supplied by the caller (by cycle type).
template <class CharFn>
Rational immanant_with(const RationalMatrix& a, CharFn&& chi)
{
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("immanant: matrix is not square");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        Rational prod = 1;
        for (std::size_t i = 0; i < n && prod != 0; ++i)
            prod *= a[i][static_cast<std::size_t>(perm[i])];
        if (prod != 0)
            total += prod * Rational(chi(cycle_type(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline Rational immanant(const RationalMatrix& a, const Partition& lambda)
{
    if (static_cast<int>(a.size()) != lambda.size())
        throw std::invalid_argument("immanant: dimension does not match |lambda|");
    return immanant_with(a, [&](const Partition& rho) { return sn_character(lambda, rho); });
}

/// phi_k(t) = (1-t)(1-t^2)...(1-t^k); phi_0 = 1.
inline Rational phi(int k, const Rational& q)
{
    Rational r = 1;
    for (int i = 1; i <= k; ++i)
        r *= 1 - rational_pow(q, i);
    return r;
}

/// {lambda : q} from the closed product form
///   q^{n_lambda} prod_{r<s} (1 - q^{l_r - l_s - r + s}) / prod_r phi_{l_r + l - r}(q).
inline Rational schur_q(const Partition& lambda, const Rational& q)
{
    const int l = lambda.length();
    Rational num = rational_pow(q, n_weight(lambda));
    for (int r = 0; r < l; ++r)
        for (int s = r + 1; s < l; ++s)
            num *= 1 - rational_pow(q, lambda[static_cast<std::size_t>(r)] - lambda[static_cast<std::size_t>(s)] - r + s);
    Rational den = 1;
    for (int r = 0; r < l; ++r)
        den *= phi(lambda[static_cast<std::size_t>(r)] + l - 1 - r, q);
    if (den == 0)
        throw std::domain_error("schur_q: pole (some 1 - q^i vanishes)");
    return num / den;
}

/// {lambda : q} = sum_rho chi^lambda_rho beta_rho(q) / z_rho.
inline Rational schur_q_powersum(const Partition& lambda, const Rational& q)
{
    Rational total = 0;
    for (const auto& rho : enumerate_partitions(lambda.size()))
        total += Rational(sn_character(lambda, rho)) * beta(rho, q) / Rational(z(rho));
    return total;
}

/// <Res chi^lambda, Res chi^mu> over the Young subgroup S_{n_1} x ... x S_{n_l}.
inline Integer restriction_gram(const Partition& lambda, const Partition& mu, const std::vector<int>& composition)
{
    int total_size = 0;
    for (int c : composition) {
        if (c < 0)
            throw std::invalid_argument("restriction_gram: negative block size");
        total_size += c;
    }
    if (lambda.size() != mu.size() || lambda.size() != total_size)
        throw std::invalid_argument("restriction_gram: size mismatch");

    Rational acc = 0;
    for (const auto& tuple : partition_tuples(composition)) {
        Partition joined;
        Rational weight = 1;
        for (const auto& rho : tuple) {
            joined = partition_union(joined, rho);
            weight /= Rational(z(rho));
        }
        acc += weight * Rational(sn_character(lambda, joined) * sn_character(mu, joined));
    }
    if (!is_integer(acc) || acc < 0)
        throw std::logic_error("restriction_gram: inner product is not a non-negative integer");
    return acc.get_num();
}

} // namespace glnq

#endif
