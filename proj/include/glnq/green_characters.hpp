#ifndef GLNQ_GREEN_CHARACTERS_HPP
#define GLNQ_GREEN_CHARACTERS_HPP

// Irreducible characters I_e of GL_n(F_q) via Green's formulas: degrees for
// every dual class, values at split semisimple classes.
//
//   I_e(c) = (-1)^{n - sum|lambda_i|} sum_{rho, m, m'} chi(m,e) Q(m',c) B_rho(m, m')
//
// With eigenvalues in F_q every theta-value has conductor q - 1, so the
// exponent of theta^{k}(a) is k * dlog(a) mod (q - 1).

#include <glnq/class_combinatorics.hpp>
#include <glnq/class_label.hpp>
#include <glnq/cyclotomic.hpp>
#include <glnq/finite_field.hpp>
#include <glnq/numeric.hpp>
#include <glnq/partitions.hpp>
#include <glnq/symmetric_functions.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glnq {

/// Green's T_{s,d}(k : a) for a in F_q, summed term by term.
inline CycValue t_function(const Field& F, int s, int d, long kappa, Elem a)
{
    if (s < 1 || d < 1)
        throw std::invalid_argument("t_function: s and d must be positive");
    const long m = F.q() - 1;
    // exponent 1 + q^s + ... + q^{(d-1)s}, reduced mod q - 1 only through the group order
    long e = 0, qs = 1;
    for (int i = 0; i < s; ++i)
        qs = qs * F.q() % m;
    for (int i = 0, pw = 1; i < d; ++i) {
        e = (e + pw) % m;
        pw = static_cast<int>(static_cast<long>(pw) * qs % m);
    }
    const Elem arg = F.pow(a, e);
    GroupRingSum acc(m);
    long k = positive_mod(kappa, m);
    for (int j = 0; j < s; ++j) {
        acc.add(k * F.dlog(arg), 1);
        k = k * F.q() % m;
    }
    return acc.value();
}

/// s * theta^k(a^d), the reduced form of t_function for a in F_q.
inline CycValue t_function_reduced(const Field& F, int s, int d, long kappa, Elem a)
{
    return Rational(s) * theta(F, kappa, F.pow(a, d));
}

/// S_d(h : xi) = theta^h(xi) + theta^{hq}(xi) + ... + theta^{hq^{d-1}}(xi).
inline CycValue s_d_function(const Field& F, int d, long h, Elem xi)
{
    if (d < 1)
        throw std::invalid_argument("s_d_function: d must be positive");
    const long m = F.q() - 1;
    GroupRingSum acc(m);
    long k = positive_mod(h, m);
    for (int i = 0; i < d; ++i) {
        acc.add(k * F.dlog(xi), 1);
        k = k * F.q() % m;
    }
    return acc.value();
}

/// (-1)^{n - sum|lambda_i|} phi_n(q) prod {lambda_i : q^{s_i}}, as an exact rational.
inline Rational degree_rational(const TypeLabel& t, long q)
{
    const int n = t.degree();
    int lam_total = 0;
    Rational value = phi(n, q);
    for (const auto& [s, lam] : t.slots()) {
        lam_total += lam.size();
        value *= schur_q(lam, rational_pow(Rational(q), s));
    }
    if ((n - lam_total) % 2 != 0)
        value = -value;
    return value;
}

/// Degree of I_e; depends only on the type. Throws std::logic_error if the
/// formula does not produce a positive integer.
inline Integer degree(const TypeLabel& t, long q)
{
    Rational v = degree_rational(t, q);
    if (!is_integer(v) || v <= 0)
        throw std::logic_error("degree of type " + t.to_string() + " is " + to_string(v) +
                               ", not a positive integer");
    return v.get_num();
}

inline Integer degree(const DualClass& e, long q) { return degree(e.type, q); }

/// Q^nu_rho(q) for the special shapes nu = {n}, nu = {1^n} and rho = {n}.
inline Rational green_polynomial_special(const Partition& nu, const Partition& rho, const Rational& q)
{
    if (nu.size() != rho.size())
        throw std::invalid_argument("green polynomial: |nu| != |rho|");
    if (nu[0] == 1)
        return phi(nu.size(), q) * beta(rho, q);
    if (nu.length() == 1)
        return 1;
    if (rho.length() == 1)
        return phi(nu.length() - 1, q);
    throw std::invalid_argument("green polynomial Q^" + nu.to_string() + "_" + rho.to_string() +
                                " is outside the supported special cases");
}

/// chi(m, e) = prod_i chi^{lambda_i}_{rho_i} / z(rho_i).
inline Rational chi_m_e(const Mode& m, const TypeLabel& t)
{
    if (m.parts.size() != t.size())
        throw std::invalid_argument("chi_m_e: mode does not match the type");
    Rational r = 1;
    for (std::size_t i = 0; i < m.parts.size(); ++i) {
        const auto& lam = t.slots()[i].second;
        if (m.parts[i].size() != lam.size())
            throw std::invalid_argument("chi_m_e: mode does not match the type");
        r *= Rational(sn_character(lam, m.parts[i])) / Rational(z(m.parts[i]));
    }
    return r;
}

/// Q(m', c) = prod_i Q^{nu_i}_{rho_i}(q^{d(f_i)}) / z(rho_i).
inline Rational q_m_c(const Mode& m, const ConjClassLabel& c, long q)
{
    if (m.parts.size() != c.entries().size())
        throw std::invalid_argument("q_m_c: mode does not match the class");
    Rational r = 1;
    for (std::size_t i = 0; i < m.parts.size(); ++i) {
        const auto& [f, nu] = c.entries()[i];
        r *= green_polynomial_special(nu, m.parts[i], rational_pow(Rational(q), poly_degree(f))) /
             Rational(z(m.parts[i]));
    }
    return r;
}

namespace detail {

// One part of rho seen from either side of B: its size and the exponent it
// contributes (alpha = k_g * tau on the dual side, dlog(a) on the class side).
struct TaggedPart {
    int size;
    long exponent;
};

inline std::vector<TaggedPart> dual_parts(const Mode& m, const DualClass& e, long modulus)
{
    std::vector<TaggedPart> out;
    for (std::size_t i = 0; i < m.parts.size(); ++i) {
        const int s = e.type.slots()[i].first;
        for (int tau : m.parts[i].parts())
            out.push_back({tau * s, e.simplices[i].root % modulus * tau % modulus});
    }
    return out;
}

inline std::vector<TaggedPart> class_parts(const Field& F, const Mode& m, const SplitSemisimpleClass& c)
{
    std::vector<TaggedPart> out;
    for (std::size_t i = 0; i < m.parts.size(); ++i)
        for (int tau : m.parts[i].parts())
            out.push_back({tau, F.dlog(c.blocks[i].first)});
    return out;
}

// Exponent histogram of sum over size-preserving bijections sigma of
// sum_p alpha_p * j_{sigma(p)}, mod `modulus`.
inline std::vector<long> bijection_histogram(const std::vector<TaggedPart>& dual,
                                             const std::vector<TaggedPart>& cls, long modulus)
{
    std::map<int, std::pair<std::vector<long>, std::vector<long>>> by_size;
    for (const auto& p : dual)
        by_size[p.size].first.push_back(p.exponent);
    for (const auto& p : cls)
        by_size[p.size].second.push_back(p.exponent);

    std::vector<long> total(static_cast<std::size_t>(modulus), 0);
    total[0] = 1;
    for (auto& [size, sides] : by_size) {
        auto& [alphas, js] = sides;
        if (alphas.size() != js.size())
            throw std::logic_error("bijection_histogram: part multisets differ");
        std::vector<long> hist(static_cast<std::size_t>(modulus), 0);
        std::vector<std::size_t> perm(js.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            long ex = 0;
            for (std::size_t p = 0; p < alphas.size(); ++p)
                ex = (ex + alphas[p] * js[perm[p]]) % modulus;
            ++hist[static_cast<std::size_t>(ex)];
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::vector<long> next(static_cast<std::size_t>(modulus), 0);
        for (long a = 0; a < modulus; ++a) {
            if (!total[static_cast<std::size_t>(a)])
                continue;
            for (long b = 0; b < modulus; ++b)
                if (hist[static_cast<std::size_t>(b)])
                    next[static_cast<std::size_t>((a + b) % modulus)] +=
                        total[static_cast<std::size_t>(a)] * hist[static_cast<std::size_t>(b)];
        }
        total = std::move(next);
    }
    return total;
}

inline long part_size_product(const Partition& rho)
{
    long r = 1;
    for (int p : rho.parts())
        r *= p;
    return r;
}

} // namespace detail

/// B_rho(h^rho m : xi^rho m') for a split semisimple class c.
inline CycValue b_rho_semisimple(const Field& F, const Mode& m, const DualClass& e, const Mode& mc,
                                 const SplitSemisimpleClass& c)
{
    if (m.rho != mc.rho)
        throw std::invalid_argument("b_rho_semisimple: modes are of different partitions");
    const long mod = F.q() - 1;
    auto hist = detail::bijection_histogram(detail::dual_parts(m, e, mod), detail::class_parts(F, mc, c), mod);
    const long scale = detail::part_size_product(m.rho);
    std::vector<Rational> ring(static_cast<std::size_t>(mod), Rational(0));
    for (long k = 0; k < mod; ++k)
        ring[static_cast<std::size_t>(k)] = Rational(hist[static_cast<std::size_t>(k)] * scale);
    return CycValue::from_group_ring(mod, ring);
}

/// Evaluates characters of one degree n at one split semisimple class.
/// Class-side modes are prepared once and reused for every dual class.
class SemisimpleEvaluator {
public:
    SemisimpleEvaluator(const Field& F, const SplitSemisimpleClass& c)
        : field_(&F)
        , cls_(c)
        , label_(c.label(F))
    {
        std::vector<int> degrees(c.blocks.size(), 1), sizes;
        for (auto [a, k] : c.blocks)
            sizes.push_back(k);
        for (auto& m : enumerate_modes(degrees, sizes)) {
            Rational coeff = q_m_c(m, label_, F.q());
            auto parts = detail::class_parts(F, m, c);
            class_modes_[m.rho].push_back({std::move(m), coeff, std::move(parts)});
        }
    }

    const SplitSemisimpleClass& cls() const { return cls_; }

    /// Exact I_e(c) accumulated into a group-ring sum with conductor q - 1.
    GroupRingSum value_ring(const DualClass& e) const
    {
        if (e.degree() != cls_.n)
            throw std::invalid_argument("character and class have different degrees");
        const long mod = field_->q() - 1;
        GroupRingSum acc(mod);
        int lam_total = 0;
        std::vector<int> degrees, sizes;
        for (const auto& [s, lam] : e.type.slots()) {
            degrees.push_back(s);
            sizes.push_back(lam.size());
            lam_total += lam.size();
        }
        const Rational sign = (cls_.n - lam_total) % 2 == 0 ? 1 : -1;
        for (const auto& m : dual_modes(e.type)) {
            auto it = class_modes_.find(m.mode.rho);
            if (it == class_modes_.end())
                continue;
            auto dparts = detail::dual_parts(m.mode, e, mod);
            const Rational base = sign * m.chi * Rational(detail::part_size_product(m.mode.rho));
            for (const auto& cm : it->second) {
                auto hist = detail::bijection_histogram(dparts, cm.parts, mod);
                const Rational coeff = base * cm.coeff;
                for (long k = 0; k < mod; ++k)
                    if (hist[static_cast<std::size_t>(k)])
                        acc.add(k, coeff * Rational(hist[static_cast<std::size_t>(k)]));
            }
        }
        return acc;
    }

    CycValue value(const DualClass& e) const { return value_ring(e).value(); }

private:
    struct ClassMode {
        Mode mode;
        Rational coeff;
        std::vector<detail::TaggedPart> parts;
    };
    struct DualMode {
        Mode mode;
        Rational chi;
    };

    const std::vector<DualMode>& dual_modes(const TypeLabel& t) const
    {
        auto it = dual_cache_.find(t);
        if (it != dual_cache_.end())
            return it->second;
        std::vector<int> degrees, sizes;
        for (const auto& [s, lam] : t.slots()) {
            degrees.push_back(s);
            sizes.push_back(lam.size());
        }
        std::vector<DualMode> out;
        for (auto& m : enumerate_modes(degrees, sizes)) {
            if (!class_modes_.count(m.rho))
                continue;
            Rational chi = chi_m_e(m, t);
            if (chi != 0)
                out.push_back({std::move(m), chi});
        }
        return dual_cache_.emplace(t, std::move(out)).first->second;
    }

    const Field* field_;
    SplitSemisimpleClass cls_;
    ConjClassLabel label_;
    std::map<Partition, std::vector<ClassMode>> class_modes_;
    mutable std::map<TypeLabel, std::vector<DualMode>> dual_cache_;
};

/// I_e(c) for c split semisimple.
inline CycValue char_value_semisimple(const Field& F, const DualClass& e, const SplitSemisimpleClass& c)
{
    return SemisimpleEvaluator(F, c).value(e);
}

} // namespace glnq

#endif
