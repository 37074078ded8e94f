#ifndef GLNQ_CLASS_COMBINATORICS_HPP
#define GLNQ_CLASS_COMBINATORICS_HPP

// Simplices, dual classes, types and modes: the indexing layer for Green's
// character formulas.

#include <glnq/class_label.hpp>
#include <glnq/cyclotomic.hpp>
#include <glnq/finite_field.hpp>
#include <glnq/numeric.hpp>
#include <glnq/partitions.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glnq {

/// An s-simplex {k, kq, ..., kq^{s-1}} of residues mod q^s - 1, represented
/// in 1..q^s-1 and keyed by its least element.
struct Simplex {
    int s = 0;
    long root = 0;
    std::vector<long> roots;

    friend bool operator==(const Simplex& a, const Simplex& b) { return a.s == b.s && a.root == b.root; }
    friend bool operator<(const Simplex& a, const Simplex& b) { return a.s != b.s ? a.s < b.s : a.root < b.root; }
};

/// All s-simplices for F_q, ordered by canonical root.
inline std::vector<Simplex> simplex_set(long q, int s)
{
    if (s < 1)
        throw std::invalid_argument("simplex_set: s must be positive");
    static std::mutex mu;
    static std::map<std::pair<long, int>, std::vector<Simplex>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find({q, s}); it != cache.end())
            return it->second;
    }
    const long mod = static_cast<long>(checked_pow(static_cast<std::uint64_t>(q), s)) - 1;
    std::vector<char> seen(static_cast<std::size_t>(mod) + 1, 0);
    std::vector<Simplex> out;
    for (long k = 1; k <= mod; ++k) {
        if (seen[static_cast<std::size_t>(k)])
            continue;
        std::vector<long> orbit;
        long x = k;
        do {
            orbit.push_back(x);
            seen[static_cast<std::size_t>(x)] = 1;
            x = (x * q) % mod;
            if (x == 0)
                x = mod;
        } while (x != k);
        if (static_cast<int>(orbit.size()) == s)
            out.push_back(Simplex{s, k, orbit});
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(q, s), out);
    return out;
}

/// The root set K_s: union of all s-simplices.
inline std::vector<long> root_set(long q, int s)
{
    std::vector<long> out;
    for (const auto& g : simplex_set(q, s))
        out.insert(out.end(), g.roots.begin(), g.roots.end());
    std::sort(out.begin(), out.end());
    return out;
}

/// (s, lambda) pairs sorted by s, then by lambda descending-lexicographically.
class TypeLabel {
public:
    using Slot = std::pair<int, Partition>;

    TypeLabel() = default;

    explicit TypeLabel(std::vector<Slot> slots)
        : slots_(std::move(slots))
    {
        for (const auto& [s, lam] : slots_)
            if (s < 1 || lam.empty())
                throw std::invalid_argument("type label: slots need s >= 1 and a nonempty partition");
        std::sort(slots_.begin(), slots_.end(), slot_less);
    }

    const std::vector<Slot>& slots() const { return slots_; }
    std::size_t size() const { return slots_.size(); }

    int degree() const
    {
        int n = 0;
        for (const auto& [s, lam] : slots_)
            n += s * lam.size();
        return n;
    }

    /// All s_i pairwise distinct.
    bool is_distinct() const
    {
        for (std::size_t i = 1; i < slots_.size(); ++i)
            if (slots_[i].first == slots_[i - 1].first)
                return false;
        return true;
    }

    /// gcd of s_i |lambda_i|.
    long weight_gcd() const
    {
        long g = 0;
        for (const auto& [s, lam] : slots_)
            g = std::gcd(g, static_cast<long>(s) * lam.size());
        return g;
    }

    /// "(lambda_1,...),(s_1,...)" e.g. "({1},{1}),(1,1)".
    std::string to_string() const
    {
        std::string a = "(", b = "(";
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            if (i) {
                a += ",";
                b += ",";
            }
            a += slots_[i].second.to_string();
            b += std::to_string(slots_[i].first);
        }
        return a + ")," + b + ")";
    }

    friend bool operator==(const TypeLabel& a, const TypeLabel& b) { return a.slots_ == b.slots_; }
    friend bool operator<(const TypeLabel& a, const TypeLabel& b)
    {
        return std::lexicographical_compare(a.slots_.begin(), a.slots_.end(), b.slots_.begin(), b.slots_.end(),
                                            slot_less);
    }

    static bool slot_less(const Slot& a, const Slot& b)
    {
        if (a.first != b.first)
            return a.first < b.first;
        return a.second > b.second;
    }

private:
    std::vector<Slot> slots_;
};

/// Green's dual class: distinct simplices with attached partitions.
struct DualClass {
    TypeLabel type;
    std::vector<Simplex> simplices; // aligned with type.slots()

    int degree() const { return type.degree(); }

    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < simplices.size(); ++i) {
            if (i)
                s += " ";
            s += "g" + std::to_string(simplices[i].s) + "[" + std::to_string(simplices[i].root) + "]^" +
                 type.slots()[i].second.to_string();
        }
        return s;
    }
};

/// All types of degree n, sorted.
inline std::vector<TypeLabel> enumerate_types(int n)
{
    if (n < 1)
        throw std::invalid_argument("enumerate_types: n must be positive");
    std::vector<TypeLabel::Slot> kinds;
    for (int s = 1; s <= n; ++s)
        for (int k = 1; s * k <= n; ++k)
            for (const auto& lam : enumerate_partitions(k))
                kinds.emplace_back(s, lam);
    std::sort(kinds.begin(), kinds.end(), TypeLabel::slot_less);

    std::vector<TypeLabel> out;
    std::vector<TypeLabel::Slot> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int remaining) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::size_t i = from; i < kinds.size(); ++i) {
            int w = kinds[i].first * kinds[i].second.size();
            if (w > remaining)
                continue;
            cur.push_back(kinds[i]);
            rec(i, remaining - w);
            cur.pop_back();
        }
    };
    rec(0, n);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Assigns pairwise distinct items (indices into pools[s]) to the slots of a
// type; slots with identical (s, lambda) receive increasing indices so each
// unordered choice appears once.
inline void for_each_assignment(const TypeLabel& type, const std::map<int, std::size_t>& pool_sizes,
                                const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    const auto& slots = type.slots();
    std::vector<std::size_t> choice(slots.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == slots.size()) {
            visit(choice);
            return;
        }
        const int s = slots[i].first;
        auto it = pool_sizes.find(s);
        const std::size_t pool = it == pool_sizes.end() ? 0 : it->second;
        std::size_t lo = 0;
        if (i > 0 && slots[i - 1] == slots[i])
            lo = choice[i - 1] + 1;
        for (std::size_t c = lo; c < pool; ++c) {
            bool used = false;
            for (std::size_t j = 0; j < i; ++j)
                if (slots[j].first == s && choice[j] == c) {
                    used = true;
                    break;
                }
            if (used)
                continue;
            choice[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
}

} // namespace detail

/// Calls visit(e) for every dual class of the given type.
inline void for_each_dual_class(long q, const TypeLabel& type, const std::function<void(const DualClass&)>& visit)
{
    std::map<int, std::vector<Simplex>> pools;
    std::map<int, std::size_t> sizes;
    for (const auto& [s, lam] : type.slots())
        if (!pools.count(s)) {
            pools[s] = simplex_set(q, s);
            sizes[s] = pools[s].size();
        }
    DualClass e;
    e.type = type;
    e.simplices.resize(type.size());
    detail::for_each_assignment(type, sizes, [&](const std::vector<std::size_t>& choice) {
        for (std::size_t i = 0; i < choice.size(); ++i)
            e.simplices[i] = pools[type.slots()[i].first][choice[i]];
        visit(e);
    });
}

inline std::vector<DualClass> dual_classes_of_type(long q, const TypeLabel& type)
{
    std::vector<DualClass> out;
    for_each_dual_class(q, type, [&](const DualClass& e) { out.push_back(e); });
    return out;
}

/// All dual classes of degree n, grouped by type in enumerate_types order.
inline std::vector<DualClass> enumerate_dual_classes(int n, long q)
{
    std::vector<DualClass> out;
    for (const auto& t : enumerate_types(n))
        for_each_dual_class(q, t, [&](const DualClass& e) { out.push_back(e); });
    return out;
}

/// Monic irreducibles of degree d other than t.
inline std::vector<MonicPoly> class_polynomials(const Field& F, int d)
{
    auto polys = irreducibles(F, d);
    if (d == 1)
        polys.erase(std::remove_if(polys.begin(), polys.end(), [](const MonicPoly& f) { return f.coeffs[0] == 0; }),
                    polys.end());
    return polys;
}

/// All conjugacy-class labels of GL_n(F_q), via the same type engine with
/// irreducible polynomials in place of simplices.
inline std::vector<ConjClassLabel> enumerate_conj_classes(const Field& F, int n)
{
    std::vector<ConjClassLabel> out;
    std::map<int, std::vector<MonicPoly>> pools;
    std::map<int, std::size_t> sizes;
    for (int d = 1; d <= n; ++d) {
        pools[d] = class_polynomials(F, d);
        sizes[d] = pools[d].size();
    }
    for (const auto& t : enumerate_types(n))
        detail::for_each_assignment(t, sizes, [&](const std::vector<std::size_t>& choice) {
            std::vector<ConjClassLabel::Entry> entries;
            for (std::size_t i = 0; i < choice.size(); ++i)
                entries.emplace_back(pools[t.slots()[i].first][choice[i]].coeffs, t.slots()[i].second);
            out.emplace_back(n, std::move(entries));
        });
    return out;
}

/// id_s for an element of F_{q^s}^x given by its discrete log l (mod q^s - 1):
/// the largest r | s with (q^r - 1) | l, or 0 when there is none.
inline long id_s_from_log(long q, int s, long l)
{
    long best = 0;
    for (long r : divisors(s)) {
        long m = static_cast<long>(checked_pow(static_cast<std::uint64_t>(q), static_cast<int>(r))) - 1;
        if (l % m == 0)
            best = r;
    }
    return best;
}

/// id_s for xi in the base field F_q, embedded in F_{q^s}.
inline long id_s(const Field& F, int s, Elem xi)
{
    if (xi == 0)
        throw std::domain_error("id_s: argument must be nonzero");
    const long q = F.q();
    const long big = static_cast<long>(checked_pow(static_cast<std::uint64_t>(q), s)) - 1;
    return id_s_from_log(q, s, static_cast<long>(F.dlog(xi)) * (big / (q - 1)));
}

/// sum_{r | id} mu(s/r)(q^r - 1); zero when id = 0.
inline long mobius_root_sum(long q, int s, long id)
{
    if (id == 0)
        return 0;
    long total = 0;
    for (long r : divisors(id))
        total += mobius(s / r) * (static_cast<long>(checked_pow(static_cast<std::uint64_t>(q), static_cast<int>(r))) - 1);
    return total;
}

inline long mobius_root_sum(const Field& F, int s, Elem xi) { return mobius_root_sum(F.q(), s, id_s(F, s, xi)); }

/// sum over K_s of theta^k(xi) by direct enumeration (xi in F_q).
inline CycValue root_sum_direct(const Field& F, int s, Elem xi)
{
    GroupRingSum acc(F.q() - 1);
    const long j = F.dlog(xi);
    for (long k : root_set(F.q(), s))
        acc.add(k % (F.q() - 1) * j, 1);
    return acc.value();
}

/// A mode of a partition rho into a type or a class: rho_i is the partition
/// of |lambda_i| (resp. n_i) carried by slot i, so that rho is the union of
/// the scaled parts deg(slot_i) . rho_i.
struct Mode {
    std::vector<Partition> parts;
    Partition rho;
};

/// Modes of all partitions into slots with the given degrees and sizes.
inline std::vector<Mode> enumerate_modes(const std::vector<int>& degrees, const std::vector<int>& sizes)
{
    if (degrees.size() != sizes.size())
        throw std::invalid_argument("enumerate_modes: degrees and sizes differ in length");
    std::vector<Mode> out;
    for (auto& tuple : partition_tuples(sizes)) {
        Partition rho;
        for (std::size_t i = 0; i < tuple.size(); ++i)
            rho = partition_union(rho, scale(degrees[i], tuple[i]));
        out.push_back(Mode{std::move(tuple), std::move(rho)});
    }
    return out;
}

/// Modes of rho into a conjugacy class: every part lands on some f with
/// d(f) dividing it, and the parts on f sum to d(f)|nu(f)|.
inline std::vector<Mode> enumerate_modes(const Partition& rho, const ConjClassLabel& c)
{
    std::vector<int> degrees, sizes;
    for (const auto& [f, nu] : c.entries()) {
        degrees.push_back(poly_degree(f));
        sizes.push_back(nu.size());
    }
    std::vector<Mode> out;
    for (auto& m : enumerate_modes(degrees, sizes))
        if (m.rho == rho)
            out.push_back(std::move(m));
    return out;
}

/// Modes of rho into a type (parts substituted by simplex slots).
inline std::vector<Mode> enumerate_modes_dual(const Partition& rho, const TypeLabel& t)
{
    std::vector<int> degrees, sizes;
    for (const auto& [s, lam] : t.slots()) {
        degrees.push_back(s);
        sizes.push_back(lam.size());
    }
    std::vector<Mode> out;
    for (auto& m : enumerate_modes(degrees, sizes))
        if (m.rho == rho)
            out.push_back(std::move(m));
    return out;
}

} // namespace glnq

#endif
