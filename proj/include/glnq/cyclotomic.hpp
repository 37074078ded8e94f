#ifndef GLNQ_CYCLOTOMIC_HPP
#define GLNQ_CYCLOTOMIC_HPP

// Exact elements of Q(zeta_M) in the power basis 1, z, ..., z^{phi(M)-1},
// reduced modulo the cyclotomic polynomial Phi_M. Two values with the same
// conductor are equal iff their coefficient vectors are equal.

#include <glnq/finite_field.hpp>
#include <glnq/numeric.hpp>

#include <json.hpp>

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glnq {

namespace detail {

using IntPoly = std::vector<long>;

inline IntPoly int_poly_exact_div(IntPoly a, const IntPoly& b)
{
    // b monic
    const std::size_t db = b.size() - 1;
    IntPoly quo(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        long c = a[k];
        quo[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i)
            a[k - db + i] -= c * b[i];
    }
    return quo;
}

} // namespace detail

/// Coefficients of Phi_M, ascending; computed by dividing x^M - 1 by Phi_d, d | M, d < M.
inline const std::vector<long>& cyclotomic_polynomial(long m)
{
    if (m < 1)
        throw std::invalid_argument("cyclotomic_polynomial: conductor must be positive");
    static std::mutex mu;
    static std::map<long, std::vector<long>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(m); it != cache.end())
            return it->second;
    }
    detail::IntPoly num(static_cast<std::size_t>(m) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(m)] = 1;
    for (long d : divisors(m))
        if (d < m)
            num = detail::int_poly_exact_div(num, cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(m, std::move(num)).first->second;
}

class CycValue {
public:
    CycValue()
        : CycValue(1)
    {
    }

    /// Zero at conductor m.
    explicit CycValue(long m)
        : conductor_(m)
        , coeffs_(static_cast<std::size_t>(cyclotomic_polynomial(m).size() - 1), Rational(0))
    {
    }

    /// The rational r at conductor m.
    static CycValue rational(const Rational& r, long m = 1)
    {
        CycValue v(m);
        v.coeffs_[0] = r;
        return v;
    }

    /// zeta_m^k
    static CycValue zeta(long m, long k)
    {
        std::vector<Rational> ring(static_cast<std::size_t>(m), Rational(0));
        ring[static_cast<std::size_t>(positive_mod(k, m))] = 1;
        return from_group_ring(m, ring);
    }

    /// Reduces sum_k ring[k] zeta_m^k into canonical form.
    static CycValue from_group_ring(long m, const std::vector<Rational>& ring)
    {
        if (static_cast<long>(ring.size()) != m)
            throw std::invalid_argument("from_group_ring: vector length must equal the conductor");
        return reduce(m, ring);
    }

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (c != 0)
                return false;
        return true;
    }

    bool is_rational() const
    {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                return false;
        return true;
    }

    Rational to_rational() const
    {
        if (!is_rational())
            throw std::domain_error("to_rational: value is not rational");
        return coeffs_[0];
    }

    /// Re-expresses the value at a multiple of its conductor.
    CycValue lift(long m) const
    {
        if (m % conductor_ != 0)
            throw std::invalid_argument("lift: target conductor must be a multiple");
        if (m == conductor_)
            return *this;
        const long step = m / conductor_;
        std::vector<Rational> ring(static_cast<std::size_t>(m), Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            ring[static_cast<std::size_t>(static_cast<long>(i) * step % m)] += coeffs_[i];
        return reduce(m, ring);
    }

    friend CycValue operator+(const CycValue& a, const CycValue& b)
    {
        auto [x, y] = common(a, b);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
            x.coeffs_[i] += y.coeffs_[i];
        return x;
    }

    friend CycValue operator-(const CycValue& a, const CycValue& b)
    {
        auto [x, y] = common(a, b);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
            x.coeffs_[i] -= y.coeffs_[i];
        return x;
    }

    CycValue operator-() const
    {
        CycValue r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    friend CycValue operator*(const CycValue& a, const CycValue& b)
    {
        auto [x, y] = common(a, b);
        const long m = x.conductor_;
        std::vector<Rational> ring(static_cast<std::size_t>(m), Rational(0));
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
                if (y.coeffs_[j] != 0)
                    ring[(i + j) % static_cast<std::size_t>(m)] += x.coeffs_[i] * y.coeffs_[j];
        }
        return reduce(m, ring);
    }

    friend CycValue operator*(const Rational& r, const CycValue& a)
    {
        CycValue out = a;
        for (auto& c : out.coeffs_)
            c *= r;
        return out;
    }

    CycValue& operator+=(const CycValue& b) { return *this = *this + b; }
    CycValue& operator-=(const CycValue& b) { return *this = *this - b; }
    CycValue& operator*=(const CycValue& b) { return *this = *this * b; }

    friend bool operator==(const CycValue& a, const CycValue& b)
    {
        auto [x, y] = common(a, b);
        return x.coeffs_ == y.coeffs_;
    }

    /// Multiplicative inverse, by solving (multiplication by *this) x = 1 over Q.
    CycValue inverse() const
    {
        if (is_zero())
            throw std::domain_error("inverse of zero cyclotomic value");
        const std::size_t d = coeffs_.size();
        // column j = this * z^j
        std::vector<std::vector<Rational>> mat(d, std::vector<Rational>(d + 1, Rational(0)));
        for (std::size_t j = 0; j < d; ++j) {
            CycValue col = *this * zeta(conductor_, static_cast<long>(j));
            for (std::size_t i = 0; i < d; ++i)
                mat[i][j] = col.coeffs_[i];
        }
        mat[0][d] = 1;
        for (std::size_t c = 0; c < d; ++c) {
            std::size_t piv = c;
            while (piv < d && mat[piv][c] == 0)
                ++piv;
            if (piv == d)
                throw std::domain_error("cyclotomic inverse: singular multiplication matrix");
            std::swap(mat[piv], mat[c]);
            Rational inv = 1 / mat[c][c];
            for (auto& v : mat[c])
                v *= inv;
            for (std::size_t r = 0; r < d; ++r) {
                if (r == c || mat[r][c] == 0)
                    continue;
                Rational f = mat[r][c];
                for (std::size_t k = c; k <= d; ++k)
                    mat[r][k] -= f * mat[c][k];
            }
        }
        CycValue out(conductor_);
        for (std::size_t i = 0; i < d; ++i)
            out.coeffs_[i] = mat[i][d];
        return out;
    }

    nlohmann::json to_json() const
    {
        nlohmann::json coeffs = nlohmann::json::object();
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                coeffs[std::to_string(i)] = glnq::to_string(coeffs_[i]);
        return {{"conductor", conductor_}, {"coeffs", coeffs}};
    }

    std::string to_string() const
    {
        if (is_rational())
            return glnq::to_string(coeffs_[0]);
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0)
                continue;
            if (!s.empty())
                s += " + ";
            s += "(" + glnq::to_string(coeffs_[i]) + ")";
            if (i)
                s += "*z" + std::to_string(conductor_) + "^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    static CycValue reduce(long m, std::vector<Rational> ring)
    {
        const auto& phi = cyclotomic_polynomial(m);
        const std::size_t deg = phi.size() - 1;
        for (std::size_t k = ring.size(); k-- > deg;) {
            if (ring[k] == 0)
                continue;
            Rational c = ring[k];
            for (std::size_t i = 0; i <= deg; ++i)
                ring[k - deg + i] -= c * phi[i];
        }
        CycValue out(m);
        for (std::size_t i = 0; i < deg; ++i)
            out.coeffs_[i] = ring[i];
        return out;
    }

    static std::pair<CycValue, CycValue> common(const CycValue& a, const CycValue& b)
    {
        if (a.conductor_ == b.conductor_)
            return {a, b};
        long m = std::lcm(a.conductor_, b.conductor_);
        return {a.lift(m), b.lift(m)};
    }

    long conductor_;
    std::vector<Rational> coeffs_;
};

/// theta^kappa(xi) = zeta_{q-1}^{kappa * dlog(xi)}, the fixed embedding on F_q^x.
inline CycValue theta(const Field& F, long kappa, Elem xi)
{
    if (xi == 0)
        throw std::domain_error("theta: argument must be nonzero");
    const long m = F.q() - 1;
    return CycValue::zeta(m, positive_mod(kappa, m) * F.dlog(xi) % m);
}

/// Accumulator in Q[Z/M]; reduced only once at the end.
class GroupRingSum {
public:
    explicit GroupRingSum(long m)
        : m_(m)
        , v_(static_cast<std::size_t>(m), Rational(0))
    {
    }

    void add(long exponent, const Rational& c) { v_[static_cast<std::size_t>(positive_mod(exponent, m_))] += c; }

    void add_scaled(const GroupRingSum& other, const Rational& c)
    {
        for (std::size_t i = 0; i < v_.size(); ++i)
            if (other.v_[i] != 0)
                v_[i] += c * other.v_[i];
    }

    long conductor() const { return m_; }
    const std::vector<Rational>& data() const { return v_; }
    CycValue value() const { return CycValue::from_group_ring(m_, v_); }

private:
    long m_;
    std::vector<Rational> v_;
};

} // namespace glnq

#endif
