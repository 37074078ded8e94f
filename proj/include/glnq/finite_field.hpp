#ifndef GLNQ_FINITE_FIELD_HPP
#define GLNQ_FINITE_FIELD_HPP

// Exact arithmetic in F_q, q = p^e, plus polynomials over F_q.
//
// An element is encoded by the integer sum_i c_i p^i of its coordinates in
// F_p[x]/(modulus). Code 0 is zero, code 1 is one. Multiplication goes
// through discrete-log tables relative to the fixed generator.

#include <glnq/numeric.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glnq {

using Elem = std::uint32_t;

struct PrimePower {
    int p = 0;
    int e = 0;
};

inline std::optional<PrimePower> factor_prime_power(long q)
{
    if (q < 2)
        return std::nullopt;
    long p = 0;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0)
        return PrimePower{static_cast<int>(q), 1};
    int e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1)
        return std::nullopt;
    return PrimePower{static_cast<int>(p), e};
}

inline bool is_prime_power(long q) { return factor_prime_power(q).has_value(); }

namespace detail {

// Dense polynomials over the prime field F_p, ascending coefficients.
using PrimePoly = std::vector<int>;

inline void trim(PrimePoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline PrimePoly prime_poly_mod(PrimePoly a, const PrimePoly& m, int p)
{
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    // m is monic
    while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
        int shift = static_cast<int>(a.size()) - 1 - dm;
        int c = a.back();
        for (int i = 0; i <= dm; ++i) {
            auto& slot = a[static_cast<std::size_t>(shift + i)];
            slot = static_cast<int>(positive_mod(slot - static_cast<long>(c) * m[static_cast<std::size_t>(i)], p));
        }
        trim(a);
    }
    return a;
}

inline std::vector<PrimePoly> prime_irreducibles(int p, int d);

inline bool prime_poly_irreducible(const PrimePoly& f, int p)
{
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d)
        for (const auto& g : prime_irreducibles(p, d))
            if (prime_poly_mod(f, g, p).empty())
                return false;
    return true;
}

// Monic polynomials of degree d over F_p, enumerated so that the
// coefficient tuple (a_0, ..., a_{d-1}) increases lexicographically.
inline std::vector<PrimePoly> monic_prime_polys_lex(int p, int d)
{
    std::vector<PrimePoly> out;
    PrimePoly cur(static_cast<std::size_t>(d) + 1, 0);
    cur[static_cast<std::size_t>(d)] = 1;
    while (true) {
        out.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == p - 1) {
            cur[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0)
            break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

inline std::vector<PrimePoly> prime_irreducibles(int p, int d)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<PrimePoly>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find({p, d}); it != cache.end())
            return it->second;
    }
    std::vector<PrimePoly> out;
    for (auto& f : monic_prime_polys_lex(p, d))
        if (prime_poly_irreducible(f, p))
            out.push_back(f);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(p, d), out);
    return out;
}

} // namespace detail

/// F_q with a deterministic modulus and primitive element.
///
/// The modulus is the lexicographically least monic irreducible of degree e
/// (coefficients compared as the tuple a_0, ..., a_{e-1}); the generator is
/// the least element of multiplicative order q-1 under the same ordering of
/// coordinate tuples.
class Field {
public:
    explicit Field(long q)
    {
        auto pp = factor_prime_power(q);
        if (!pp)
            throw std::invalid_argument("make_field: " + std::to_string(q) + " is not a prime power");
        p_ = pp->p;
        e_ = pp->e;
        q_ = static_cast<int>(q);
        if (q > (1L << 20))
            throw std::invalid_argument("make_field: q too large for table-driven arithmetic");

        if (e_ == 1) {
            modulus_ = {0, 1};
        } else {
            for (auto& f : detail::monic_prime_polys_lex(p_, e_))
                if (detail::prime_poly_irreducible(f, p_)) {
                    modulus_ = f;
                    break;
                }
        }

        // Pick the generator: least coordinate tuple (a_0 most significant)
        // of order q-1.
        const int order = q_ - 1;
        std::vector<Elem> candidates;
        for (auto& t : detail::monic_prime_polys_lex(p_, e_)) {
            // reuse the lex enumeration of tuples (a_0..a_{e-1}); drop the monic 1
            Elem code = 0;
            long place = 1;
            for (int i = 0; i < e_; ++i) {
                code += static_cast<Elem>(t[static_cast<std::size_t>(i)] * place);
                place *= p_;
            }
            candidates.push_back(code);
        }
        generator_ = 0;
        for (Elem c : candidates) {
            if (c == 0)
                continue;
            if (slow_order(c) == order) {
                generator_ = c;
                break;
            }
        }
        if (q_ == 2)
            generator_ = 1;

        exp_.assign(static_cast<std::size_t>(order), 0);
        log_.assign(static_cast<std::size_t>(q_), -1);
        Elem x = 1;
        for (int k = 0; k < order; ++k) {
            exp_[static_cast<std::size_t>(k)] = x;
            log_[x] = k;
            x = slow_mul(x, generator_);
        }
        if (q_ <= 1024) {
            add_table_.assign(static_cast<std::size_t>(q_) * static_cast<std::size_t>(q_), 0);
            for (int a = 0; a < q_; ++a)
                for (int b = 0; b < q_; ++b)
                    add_table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b)] =
                        slow_add(static_cast<Elem>(a), static_cast<Elem>(b));
        }
    }

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    /// Monic modulus over F_p, ascending coefficients.
    const std::vector<int>& modulus() const { return modulus_; }
    Elem generator() const { return generator_; }
    bool is_prime_field() const { return e_ == 1; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const
    {
        if (!add_table_.empty())
            return add_table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b];
        return slow_add(a, b);
    }

    Elem neg(Elem a) const
    {
        if (e_ == 1)
            return a == 0 ? 0 : static_cast<Elem>(p_ - static_cast<int>(a));
        Elem out = 0;
        long place = 1;
        for (int i = 0; i < e_; ++i) {
            long c = (a / place) % p_;
            out += static_cast<Elem>(((p_ - c) % p_) * place);
            place *= p_;
        }
        return out;
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const
    {
        if (a == 0 || b == 0)
            return 0;
        int k = log_[a] + log_[b];
        if (k >= q_ - 1)
            k -= q_ - 1;
        return exp_[static_cast<std::size_t>(k)];
    }

    Elem inv(Elem a) const
    {
        if (a == 0)
            throw std::domain_error("inverse of zero in F_q");
        int k = log_[a];
        return exp_[static_cast<std::size_t>(k == 0 ? 0 : q_ - 1 - k)];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, long k) const
    {
        if (a == 0) {
            if (k < 0)
                throw std::domain_error("zero raised to a negative power");
            return k == 0 ? 1 : 0;
        }
        long idx = positive_mod(static_cast<long>(log_[a]) * positive_mod(k, q_ - 1), q_ - 1);
        return exp_[static_cast<std::size_t>(idx)];
    }

    /// g^k for the fixed generator g.
    Elem gen_pow(long k) const { return exp_[static_cast<std::size_t>(positive_mod(k, q_ - 1))]; }

    /// Discrete logarithm relative to the fixed generator, in [0, q-1).
    int dlog(Elem a) const
    {
        if (a == 0)
            throw std::domain_error("discrete log of zero");
        return log_[a];
    }

    /// Multiplicative order of a nonzero element.
    int order(Elem a) const
    {
        int k = dlog(a);
        return (q_ - 1) / std::gcd(k, q_ - 1);
    }

    Elem frobenius(Elem a) const { return pow(a, p_); }

    /// Embeds an integer into the prime subfield.
    Elem from_int(long v) const { return static_cast<Elem>(positive_mod(v, p_)); }

    /// Coordinates (a_0, ..., a_{e-1}) of an element.
    std::vector<int> coordinates(Elem a) const
    {
        std::vector<int> c(static_cast<std::size_t>(e_));
        for (int i = 0; i < e_; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<int>(a % static_cast<Elem>(p_));
            a /= static_cast<Elem>(p_);
        }
        return c;
    }

    /// Text form: an integer for prime fields; "g^k" otherwise (0 and 1 stay numeric).
    std::string format(Elem a) const
    {
        if (e_ == 1 || a <= 1)
            return std::to_string(a);
        return "g^" + std::to_string(dlog(a));
    }

    /// Parses "k" (integer, reduced into the prime subfield), "g" or "g^k".
    Elem parse(const std::string& text) const
    {
        if (text.empty())
            throw std::invalid_argument("empty field element");
        if (text[0] == 'g') {
            if (text == "g")
                return generator_;
            if (text.size() < 3 || text[1] != '^')
                throw std::invalid_argument("bad field element: " + text);
            return gen_pow(std::stol(text.substr(2)));
        }
        std::size_t used = 0;
        long v = std::stol(text, &used);
        if (used != text.size())
            throw std::invalid_argument("bad field element: " + text);
        return from_int(v);
    }

    friend bool operator==(const Field& a, const Field& b) { return a.q_ == b.q_; }

private:
    Elem slow_add(Elem a, Elem b) const
    {
        if (e_ == 1)
            return static_cast<Elem>((a + b) % static_cast<Elem>(p_));
        Elem out = 0;
        long place = 1;
        for (int i = 0; i < e_; ++i) {
            long ca = (a / place) % p_;
            long cb = (b / place) % p_;
            out += static_cast<Elem>(((ca + cb) % p_) * place);
            place *= p_;
        }
        return out;
    }

    Elem slow_mul(Elem a, Elem b) const
    {
        if (e_ == 1)
            return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % static_cast<std::uint64_t>(p_));
        std::vector<int> ca(static_cast<std::size_t>(e_)), cb(static_cast<std::size_t>(e_));
        Elem ta = a, tb = b;
        for (int i = 0; i < e_; ++i) {
            ca[static_cast<std::size_t>(i)] = static_cast<int>(ta % static_cast<Elem>(p_));
            cb[static_cast<std::size_t>(i)] = static_cast<int>(tb % static_cast<Elem>(p_));
            ta /= static_cast<Elem>(p_);
            tb /= static_cast<Elem>(p_);
        }
        detail::PrimePoly prod(static_cast<std::size_t>(2 * e_), 0);
        for (int i = 0; i < e_; ++i)
            for (int j = 0; j < e_; ++j)
                prod[static_cast<std::size_t>(i + j)] =
                    (prod[static_cast<std::size_t>(i + j)] + ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(j)]) % p_;
        auto r = detail::prime_poly_mod(prod, modulus_, p_);
        Elem out = 0;
        long place = 1;
        for (std::size_t i = 0; i < r.size(); ++i) {
            out += static_cast<Elem>(r[i] * place);
            place *= p_;
        }
        return out;
    }

    int slow_order(Elem a) const
    {
        Elem x = a;
        for (int k = 1; k <= q_ - 1; ++k) {
            if (x == 1)
                return k;
            x = slow_mul(x, a);
        }
        return -1;
    }

    int p_ = 0;
    int e_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;
    Elem generator_ = 0;
    std::vector<Elem> exp_;
    std::vector<int> log_;
    std::vector<Elem> add_table_;
};

inline Field make_field(long q) { return Field(q); }

/// Shared, immutable field instance per q.
inline std::shared_ptr<const Field> shared_field(long q)
{
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[q];
    if (!slot)
        slot = std::make_shared<const Field>(q);
    return slot;
}

/// Element bundled with its field, for readable arithmetic outside hot loops.
class FqElement {
public:
    FqElement(const Field& f, Elem v)
        : field_(&f)
        , value_(v)
    {
    }

    const Field& field() const { return *field_; }
    Elem value() const { return value_; }

    friend FqElement operator+(FqElement a, FqElement b) { return {*a.field_, a.field_->add(a.value_, b.value_)}; }
    friend FqElement operator-(FqElement a, FqElement b) { return {*a.field_, a.field_->sub(a.value_, b.value_)}; }
    friend FqElement operator*(FqElement a, FqElement b) { return {*a.field_, a.field_->mul(a.value_, b.value_)}; }
    friend FqElement operator/(FqElement a, FqElement b) { return {*a.field_, a.field_->div(a.value_, b.value_)}; }
    FqElement pow(long k) const { return {*field_, field_->pow(value_, k)}; }
    friend bool operator==(FqElement a, FqElement b) { return a.value_ == b.value_; }

private:
    const Field* field_;
    Elem value_;
};

// --------------------------------------------------------------------------
// Polynomials over F_q: ascending coefficients, no trailing zeros.

using Poly = std::vector<Elem>;

inline void poly_trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline int poly_degree(const Poly& a) { return a.empty() ? -1 : static_cast<int>(a.size()) - 1; }

inline Poly poly_add(const Field& F, const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    poly_trim(r);
    return r;
}

inline Poly poly_sub(const Field& F, const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    poly_trim(r);
    return r;
}

inline Poly poly_mul(const Field& F, const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    poly_trim(r);
    return r;
}

inline Poly poly_scale(const Field& F, const Poly& a, Elem c)
{
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = F.mul(a[i], c);
    poly_trim(r);
    return r;
}

/// Quotient and remainder; divisor must be nonzero.
inline std::pair<Poly, Poly> poly_divmod(const Field& F, Poly a, const Poly& b)
{
    if (b.empty())
        throw std::domain_error("polynomial division by zero");
    poly_trim(a);
    const int db = poly_degree(b);
    const Elem lead_inv = F.inv(b.back());
    if (poly_degree(a) < db)
        return {Poly{}, a};
    Poly quo(static_cast<std::size_t>(poly_degree(a) - db + 1), 0);
    while (poly_degree(a) >= db) {
        const int shift = poly_degree(a) - db;
        const Elem c = F.mul(a.back(), lead_inv);
        quo[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= db; ++i) {
            auto& slot = a[static_cast<std::size_t>(shift + i)];
            slot = F.sub(slot, F.mul(c, b[static_cast<std::size_t>(i)]));
        }
        poly_trim(a);
    }
    poly_trim(quo);
    return {quo, a};
}

inline Poly poly_mod(const Field& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).second; }

inline Poly poly_monic(const Field& F, const Poly& a)
{
    if (a.empty())
        return a;
    return poly_scale(F, a, F.inv(a.back()));
}

inline Poly poly_gcd(const Field& F, Poly a, Poly b)
{
    while (!b.empty()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

inline Poly poly_pow(const Field& F, const Poly& a, int k)
{
    Poly r{1};
    for (int i = 0; i < k; ++i)
        r = poly_mul(F, r, a);
    return r;
}

/// Total order on polynomials: degree first, then coefficients a_0, a_1, ...
struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

/// Monic polynomial over F_q; `irreducible` is only set after verification.
struct MonicPoly {
    Poly coeffs;
    bool irreducible = false;

    int degree() const { return poly_degree(coeffs); }
    friend bool operator==(const MonicPoly& a, const MonicPoly& b) { return a.coeffs == b.coeffs; }
    friend bool operator<(const MonicPoly& a, const MonicPoly& b) { return PolyLess{}(a.coeffs, b.coeffs); }
};

/// Coefficients ascending, comma-separated: "1,1,1" is x^2+x+1.
inline std::string format_poly(const Field& F, const Poly& a)
{
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i)
            s += ',';
        s += F.format(a[i]);
    }
    return s;
}

inline Poly parse_poly(const Field& F, const std::string& text)
{
    Poly out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(F.parse(tok));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    poly_trim(out);
    return out;
}

namespace detail {

inline std::vector<Poly> all_monic(const Field& F, int d)
{
    std::vector<Poly> out;
    Poly cur(static_cast<std::size_t>(d) + 1, 0);
    cur[static_cast<std::size_t>(d)] = 1;
    const Elem q = static_cast<Elem>(F.q());
    while (true) {
        out.push_back(cur);
        int i = 0;
        while (i < d && cur[static_cast<std::size_t>(i)] == q - 1) {
            cur[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == d)
            break;
        ++cur[static_cast<std::size_t>(i)];
    }
    std::sort(out.begin(), out.end(), PolyLess{});
    return out;
}

} // namespace detail

/// All monic irreducibles of degree exactly d over F_q, ordered by PolyLess.
/// Irreducibility is decided by trial division against all irreducibles of
/// degree at most d/2.
inline std::vector<MonicPoly> irreducibles(const Field& F, int d)
{
    if (d < 1)
        throw std::invalid_argument("irreducibles: degree must be positive");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<MonicPoly>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find({F.q(), d}); it != cache.end())
            return it->second;
    }
    std::vector<std::vector<MonicPoly>> lower;
    for (int k = 1; 2 * k <= d; ++k)
        lower.push_back(irreducibles(F, k));
    std::vector<MonicPoly> out;
    for (auto& f : detail::all_monic(F, d)) {
        bool irr = true;
        for (const auto& group : lower) {
            for (const auto& g : group)
                if (poly_mod(F, f, g.coeffs).empty()) {
                    irr = false;
                    break;
                }
            if (!irr)
                break;
        }
        if (irr)
            out.push_back(MonicPoly{f, true});
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(F.q(), d), out);
    return out;
}

inline bool is_irreducible(const Field& F, const Poly& f)
{
    const int d = poly_degree(f);
    if (d < 1)
        return false;
    for (int k = 1; 2 * k <= d; ++k)
        for (const auto& g : irreducibles(F, k))
            if (poly_mod(F, f, g.coeffs).empty())
                return false;
    return true;
}

/// (1/d) sum_{r | d} mu(d/r) q^r
inline long necklace_count(long q, int d)
{
    long total = 0;
    for (long r : divisors(d))
        total += mobius(d / r) * static_cast<long>(checked_pow(static_cast<std::uint64_t>(q), static_cast<int>(r)));
    return total / d;
}

} // namespace glnq

#endif
