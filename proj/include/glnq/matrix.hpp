#ifndef GLNQ_MATRIX_HPP
#define GLNQ_MATRIX_HPP

// Dense square matrices over an exact ring. A Ring supplies value_type,
// zero(), one(), add, sub, mul, inv (throws on zero) and is_zero.

#include <glnq/cyclotomic.hpp>
#include <glnq/finite_field.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glnq {

template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;

    SquareMatrix(int n, const T& fill)
        : n_(n)
        , data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill)
    {
    }

    int dim() const { return n_; }
    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * n_ + j)]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * n_ + j)]; }
    const std::vector<T>& data() const { return data_; }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

private:
    int n_ = 0;
    std::vector<T> data_;
};

struct FqRing {
    using value_type = Elem;
    const Field* field;

    explicit FqRing(const Field& f)
        : field(&f)
    {
    }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const { return field->add(a, b); }
    Elem sub(Elem a, Elem b) const { return field->sub(a, b); }
    Elem mul(Elem a, Elem b) const { return field->mul(a, b); }
    Elem inv(Elem a) const { return field->inv(a); }
    bool is_zero(Elem a) const { return a == 0; }
};

/// Q(zeta_M) at a fixed conductor.
struct CycRing {
    using value_type = CycValue;
    long conductor;

    explicit CycRing(long m)
        : conductor(m)
    {
    }
    CycValue zero() const { return CycValue(conductor); }
    CycValue one() const { return CycValue::rational(1, conductor); }
    CycValue add(const CycValue& a, const CycValue& b) const { return a + b; }
    CycValue sub(const CycValue& a, const CycValue& b) const { return a - b; }
    CycValue mul(const CycValue& a, const CycValue& b) const { return a * b; }
    CycValue inv(const CycValue& a) const { return a.inverse(); }
    bool is_zero(const CycValue& a) const { return a.is_zero(); }
};

using FqMatrix = SquareMatrix<Elem>;
using CycMatrix = SquareMatrix<CycValue>;

template <class R>
SquareMatrix<typename R::value_type> identity_matrix(const R& ring, int n)
{
    SquareMatrix<typename R::value_type> m(n, ring.zero());
    for (int i = 0; i < n; ++i)
        m(i, i) = ring.one();
    return m;
}

template <class R>
SquareMatrix<typename R::value_type> scalar_matrix(const R& ring, int n, const typename R::value_type& c)
{
    SquareMatrix<typename R::value_type> m(n, ring.zero());
    for (int i = 0; i < n; ++i)
        m(i, i) = c;
    return m;
}

template <class R>
SquareMatrix<typename R::value_type> diagonal_matrix(const R& ring, const std::vector<typename R::value_type>& d)
{
    const int n = static_cast<int>(d.size());
    SquareMatrix<typename R::value_type> m(n, ring.zero());
    for (int i = 0; i < n; ++i)
        m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

/// Permutation matrix with P e_j = e_{perm[j]}.
template <class R>
SquareMatrix<typename R::value_type> permutation_matrix(const R& ring, const std::vector<int>& perm)
{
    const int n = static_cast<int>(perm.size());
    SquareMatrix<typename R::value_type> m(n, ring.zero());
    for (int j = 0; j < n; ++j)
        m(perm[static_cast<std::size_t>(j)], j) = ring.one();
    return m;
}

template <class R>
SquareMatrix<typename R::value_type> mat_mul(const R& ring, const SquareMatrix<typename R::value_type>& a,
                                             const SquareMatrix<typename R::value_type>& b)
{
    const int n = a.dim();
    if (b.dim() != n)
        throw std::invalid_argument("mat_mul: dimension mismatch");
    SquareMatrix<typename R::value_type> c(n, ring.zero());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (ring.is_zero(a(i, k)))
                continue;
            for (int j = 0; j < n; ++j)
                if (!ring.is_zero(b(k, j)))
                    c(i, j) = ring.add(c(i, j), ring.mul(a(i, k), b(k, j)));
        }
    return c;
}

/// Gauss-Jordan inverse; throws std::domain_error on a singular matrix.
template <class R>
SquareMatrix<typename R::value_type> mat_inverse(const R& ring, const SquareMatrix<typename R::value_type>& a)
{
    const int n = a.dim();
    auto m = a;
    auto inv = identity_matrix(ring, n);
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && ring.is_zero(m(piv, c)))
            ++piv;
        if (piv == n)
            throw std::domain_error("mat_inverse: singular matrix");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        auto s = ring.inv(m(c, c));
        for (int j = 0; j < n; ++j) {
            m(c, j) = ring.mul(m(c, j), s);
            inv(c, j) = ring.mul(inv(c, j), s);
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || ring.is_zero(m(r, c)))
                continue;
            auto f = m(r, c);
            for (int j = 0; j < n; ++j) {
                m(r, j) = ring.sub(m(r, j), ring.mul(f, m(c, j)));
                inv(r, j) = ring.sub(inv(r, j), ring.mul(f, inv(c, j)));
            }
        }
    }
    return inv;
}

template <class R>
typename R::value_type mat_det(const R& ring, const SquareMatrix<typename R::value_type>& a)
{
    const int n = a.dim();
    auto m = a;
    auto det = ring.one();
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && ring.is_zero(m(piv, c)))
            ++piv;
        if (piv == n)
            return ring.zero();
        if (piv != c) {
            for (int j = 0; j < n; ++j)
                std::swap(m(piv, j), m(c, j));
            det = ring.sub(ring.zero(), det);
        }
        det = ring.mul(det, m(c, c));
        auto s = ring.inv(m(c, c));
        for (int r = c + 1; r < n; ++r) {
            if (ring.is_zero(m(r, c)))
                continue;
            auto f = ring.mul(m(r, c), s);
            for (int j = c; j < n; ++j)
                m(r, j) = ring.sub(m(r, j), ring.mul(f, m(c, j)));
        }
    }
    return det;
}

template <class R>
SquareMatrix<typename R::value_type> mat_pow(const R& ring, const SquareMatrix<typename R::value_type>& a, long k)
{
    auto base = k < 0 ? mat_inverse(ring, a) : a;
    if (k < 0)
        k = -k;
    auto r = identity_matrix(ring, a.dim());
    while (k > 0) {
        if (k & 1)
            r = mat_mul(ring, r, base);
        base = mat_mul(ring, base, base);
        k >>= 1;
    }
    return r;
}

/// [x, y] = x y x^{-1} y^{-1}
template <class R>
SquareMatrix<typename R::value_type> commutator(const R& ring, const SquareMatrix<typename R::value_type>& x,
                                                const SquareMatrix<typename R::value_type>& y)
{
    return mat_mul(ring, mat_mul(ring, mat_mul(ring, x, y), mat_inverse(ring, x)), mat_inverse(ring, y));
}

template <class R>
bool is_scalar_matrix(const R& ring, const SquareMatrix<typename R::value_type>& a, const typename R::value_type& c)
{
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            const auto& v = a(i, j);
            if (i == j ? !(v == c) : !ring.is_zero(v))
                return false;
        }
    return true;
}

/// Row-major base-q digit code of a matrix over F_q; requires q^{n^2} < 2^64.
inline std::uint64_t encode_matrix(const Field& F, const FqMatrix& a)
{
    std::uint64_t code = 0;
    const auto q = static_cast<std::uint64_t>(F.q());
    for (auto it = a.data().rbegin(); it != a.data().rend(); ++it)
        code = code * q + *it;
    return code;
}

inline FqMatrix decode_matrix(const Field& F, int n, std::uint64_t code)
{
    FqMatrix a(n, 0);
    const auto q = static_cast<std::uint64_t>(F.q());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a(i, j) = static_cast<Elem>(code % q);
            code /= q;
        }
    return a;
}

inline std::string format_matrix(const Field& F, const FqMatrix& a)
{
    std::string s = "[";
    for (int i = 0; i < a.dim(); ++i) {
        if (i)
            s += ";";
        for (int j = 0; j < a.dim(); ++j) {
            if (j)
                s += ",";
            s += F.format(a(i, j));
        }
    }
    return s + "]";
}

} // namespace glnq

#endif
