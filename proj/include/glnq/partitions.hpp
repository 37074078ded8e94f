#ifndef GLNQ_PARTITIONS_HPP
#define GLNQ_PARTITIONS_HPP

#include <glnq/numeric.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glnq {

/// Integer partition, stored as a descending list of positive parts.
/// The empty list is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts)
        : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p < 1)
                throw std::invalid_argument("partition parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts))
    {
    }

    /// Builds {1^{r_1} 2^{r_2} ...} from a part -> count map.
    static Partition from_multiplicities(const std::map<int, int>& mult)
    {
        std::vector<int> parts;
        for (auto [part, count] : mult) {
            if (count < 0)
                throw std::invalid_argument("negative multiplicity");
            parts.insert(parts.end(), static_cast<std::size_t>(count), part);
        }
        return Partition(std::move(parts));
    }

    /// {k^r}
    static Partition rectangle(int part, int count)
    {
        return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }

    int size() const
    {
        int s = 0;
        for (int p : parts_)
            s += p;
        return s;
    }

    int operator[](std::size_t i) const { return parts_[i]; }

    int multiplicity(int part) const
    {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
    }

    /// (part, r_part) pairs in ascending part order.
    std::vector<std::pair<int, int>> multiplicities() const
    {
        std::vector<std::pair<int, int>> out;
        for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
            if (!out.empty() && out.back().first == *it)
                ++out.back().second;
            else
                out.emplace_back(*it, 1);
        }
        return out;
    }

    std::string to_string() const
    {
        std::string s = "{";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + "}";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

/// All partitions of n in reverse-lexicographic order: {n}, {n-1,1}, ..., {1^n}.
inline std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Order of the centralizer of a permutation of cycle type rho.
inline Integer z(const Partition& rho)
{
    Integer r = 1;
    for (auto [part, count] : rho.multiplicities())
        r *= integer_pow(part, static_cast<unsigned long>(count)) * factorial(count);
    return r;
}

/// beta_rho(q) = prod_i 1/(1-q^i)^{r_i}.
inline Rational beta(const Partition& rho, const Rational& q)
{
    Rational denom = 1;
    for (int part : rho.parts())
        denom *= 1 - rational_pow(q, part);
    if (denom == 0)
        throw std::domain_error("beta: 1 - q^i vanishes for a part of rho");
    return 1 / denom;
}

/// n_lambda = lambda_2 + 2 lambda_3 + ... + (l-1) lambda_l
inline int n_weight(const Partition& lambda)
{
    int w = 0;
    for (int i = 0; i < lambda.length(); ++i)
        w += i * lambda[static_cast<std::size_t>(i)];
    return w;
}

/// s.rho: every part multiplied by s.
inline Partition scale(int s, const Partition& rho)
{
    if (s < 1)
        throw std::invalid_argument("scale: factor must be positive");
    std::vector<int> parts = rho.parts();
    for (int& p : parts)
        p *= s;
    return Partition(std::move(parts));
}

/// Multiset union of parts (the "rho_1 + rho_2" of partition algebra).
inline Partition partition_union(const Partition& a, const Partition& b)
{
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(parts));
}

/// p(m) by Euler's pentagonal-number recurrence.
inline std::uint64_t partition_number(int m)
{
    if (m < 0)
        throw std::invalid_argument("partition_number: m must be non-negative");
    std::vector<std::int64_t> p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= m; ++k) {
        std::int64_t acc = 0;
        for (int j = 1;; ++j) {
            int g1 = j * (3 * j - 1) / 2;
            int g2 = j * (3 * j + 1) / 2;
            if (g1 > k)
                break;
            std::int64_t sign = (j % 2 == 1) ? 1 : -1;
            acc += sign * p[static_cast<std::size_t>(k - g1)];
            if (g2 <= k)
                acc += sign * p[static_cast<std::size_t>(k - g2)];
        }
        p[static_cast<std::size_t>(k)] = acc;
    }
    return static_cast<std::uint64_t>(p[static_cast<std::size_t>(m)]);
}

/// All tuples (rho_1, ..., rho_k) with rho_i a partition of sizes[i].
inline std::vector<std::vector<Partition>> partition_tuples(const std::vector<int>& sizes)
{
    std::vector<std::vector<Partition>> out{{}};
    for (int sz : sizes) {
        auto options = enumerate_partitions(sz);
        std::vector<std::vector<Partition>> next;
        next.reserve(out.size() * options.size());
        for (const auto& prefix : out)
            for (const auto& opt : options) {
                auto t = prefix;
                t.push_back(opt);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

} // namespace glnq

#endif
