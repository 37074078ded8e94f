#ifndef GLNQ_CLASS_LABEL_HPP
#define GLNQ_CLASS_LABEL_HPP

// Conjugacy-class labels of GL_n(F_q): each monic irreducible f != t is
// assigned a partition nu(f), with sum of deg(f)|nu(f)| equal to n.

#include <glnq/finite_field.hpp>
#include <glnq/matrix.hpp>
#include <glnq/partitions.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glnq {

class ConjClassLabel {
public:
    using Entry = std::pair<Poly, Partition>;

    ConjClassLabel() = default;

    ConjClassLabel(int n, std::vector<Entry> entries)
        : n_(n)
        , entries_(std::move(entries))
    {
        std::sort(entries_.begin(), entries_.end(),
                  [](const Entry& a, const Entry& b) { return PolyLess{}(a.first, b.first); });
        int total = 0;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto& [f, nu] = entries_[i];
            if (poly_degree(f) < 1 || f.back() != 1)
                throw std::invalid_argument("class label: polynomials must be monic of positive degree");
            if (poly_degree(f) == 1 && f[0] == 0)
                throw std::invalid_argument("class label: t is not allowed (matrix would be singular)");
            if (nu.empty())
                throw std::invalid_argument("class label: empty partition");
            if (i && entries_[i - 1].first == f)
                throw std::invalid_argument("class label: repeated polynomial");
            total += poly_degree(f) * nu.size();
        }
        if (total != n_)
            throw std::invalid_argument("class label: degrees sum to " + std::to_string(total) + ", expected " +
                                        std::to_string(n_));
    }

    int n() const { return n_; }
    const std::vector<Entry>& entries() const { return entries_; }

    bool is_split_semisimple() const
    {
        for (const auto& [f, nu] : entries_)
            if (poly_degree(f) != 1 || nu[0] != 1)
                return false;
        return true;
    }

    bool is_central() const { return entries_.size() == 1 && is_split_semisimple(); }

    /// "coeffs^[parts];..." with ascending coefficients, e.g. "2,1^[1,1]".
    std::string to_string(const Field& F) const
    {
        std::string s;
        for (const auto& [f, nu] : entries_) {
            if (!s.empty())
                s += ';';
            std::string parts = nu.to_string();
            s += format_poly(F, f) + "^[" + parts.substr(1, parts.size() - 2) + "]";
        }
        return s;
    }

    friend bool operator==(const ConjClassLabel& a, const ConjClassLabel& b)
    {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    friend bool operator<(const ConjClassLabel& a, const ConjClassLabel& b)
    {
        if (a.entries_.size() != b.entries_.size())
            return a.entries_.size() < b.entries_.size();
        for (std::size_t i = 0; i < a.entries_.size(); ++i) {
            const auto& [fa, la] = a.entries_[i];
            const auto& [fb, lb] = b.entries_[i];
            if (fa != fb)
                return PolyLess{}(fa, fb);
            if (la != lb)
                return la > lb;
        }
        return false;
    }

private:
    int n_ = 0;
    std::vector<Entry> entries_;
};

/// Eigenvalue/multiplicity pairs (a_i, n_i) of a split semisimple class, a_i distinct.
struct SplitSemisimpleClass {
    int n = 0;
    std::vector<std::pair<Elem, int>> blocks;

    static SplitSemisimpleClass from_label(const Field& F, const ConjClassLabel& c)
    {
        if (!c.is_split_semisimple())
            throw std::invalid_argument("class is not split semisimple");
        SplitSemisimpleClass out;
        out.n = c.n();
        // f = t - a
        for (const auto& [f, nu] : c.entries())
            out.blocks.emplace_back(F.neg(f[0]), nu.size());
        return out;
    }

    ConjClassLabel label(const Field& F) const
    {
        std::vector<ConjClassLabel::Entry> entries;
        for (auto [a, k] : blocks)
            entries.emplace_back(Poly{F.neg(a), 1}, Partition::rectangle(1, k));
        return ConjClassLabel(n, std::move(entries));
    }

    bool is_regular() const
    {
        for (auto [a, k] : blocks)
            if (k != 1)
                return false;
        return true;
    }

    /// prod a_i^{n_i}
    Elem determinant(const Field& F) const
    {
        Elem d = 1;
        for (auto [a, k] : blocks)
            d = F.mul(d, F.pow(a, k));
        return d;
    }
};

/// Builds a split semisimple class from eigenvalues with multiplicities (equal eigenvalues merge).
inline SplitSemisimpleClass make_split_semisimple(const Field& F, const std::vector<std::pair<Elem, int>>& eig)
{
    std::map<Elem, int> merged;
    int n = 0;
    for (auto [a, k] : eig) {
        if (a == 0)
            throw std::invalid_argument("eigenvalue must be nonzero");
        if (k < 1)
            throw std::invalid_argument("multiplicity must be positive");
        merged[a] += k;
        n += k;
    }
    std::vector<ConjClassLabel::Entry> entries;
    for (auto [a, k] : merged)
        entries.emplace_back(Poly{F.neg(a), 1}, Partition::rectangle(1, k));
    return SplitSemisimpleClass::from_label(F, ConjClassLabel(n, std::move(entries)));
}

namespace detail {

using PolyMatrix = std::vector<std::vector<Poly>>;

// Smith normal form of an n x n matrix over F_q[t]; returns the diagonal.
inline std::vector<Poly> smith_diagonal(const Field& F, PolyMatrix m)
{
    const int n = static_cast<int>(m.size());
    std::vector<Poly> diag;
    for (int k = 0; k < n; ++k) {
        while (true) {
            // pivot: nonzero entry of least degree in the trailing block
            int pi = -1, pj = -1, best = 1 << 30;
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j) {
                    int d = poly_degree(m[i][j]);
                    if (d >= 0 && d < best) {
                        best = d;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                for (int r = k; r < n; ++r)
                    diag.emplace_back();
                return diag;
            }
            std::swap(m[k], m[pi]);
            for (int i = 0; i < n; ++i)
                std::swap(m[i][k], m[i][pj]);

            bool dirty = false;
            for (int i = k + 1; i < n; ++i) {
                if (m[i][k].empty())
                    continue;
                auto [quo, rem] = poly_divmod(F, m[i][k], m[k][k]);
                for (int j = k; j < n; ++j)
                    m[i][j] = poly_sub(F, m[i][j], poly_mul(F, quo, m[k][j]));
                if (!rem.empty())
                    dirty = true;
            }
            for (int j = k + 1; j < n; ++j) {
                if (m[k][j].empty())
                    continue;
                auto [quo, rem] = poly_divmod(F, m[k][j], m[k][k]);
                for (int i = k; i < n; ++i)
                    m[i][j] = poly_sub(F, m[i][j], poly_mul(F, quo, m[i][k]));
                if (!rem.empty())
                    dirty = true;
            }
            if (dirty)
                continue;
            // pivot must divide the rest; otherwise fold the offending row in
            int bad = -1;
            for (int i = k + 1; i < n && bad < 0; ++i)
                for (int j = k + 1; j < n; ++j)
                    if (!poly_mod(F, m[i][j], m[k][k]).empty()) {
                        bad = i;
                        break;
                    }
            if (bad < 0)
                break;
            for (int j = k; j < n; ++j)
                m[k][j] = poly_add(F, m[k][j], m[bad][j]);
        }
        diag.push_back(poly_monic(F, m[k][k]));
    }
    return diag;
}

} // namespace detail

/// Invariant factors f_1 | f_2 | ... of tI - A (units dropped).
inline std::vector<Poly> invariant_factors(const Field& F, const FqMatrix& a)
{
    const int n = a.dim();
    detail::PolyMatrix m(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly p{F.neg(a(i, j))};
            if (i == j)
                p.push_back(1);
            poly_trim(p);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p;
        }
    auto diag = detail::smith_diagonal(F, std::move(m));
    std::vector<Poly> out;
    for (auto& d : diag)
        if (poly_degree(d) >= 1)
            out.push_back(d);
    std::sort(out.begin(), out.end(), PolyLess{});
    return out;
}

inline std::vector<Poly> rcf(const Field& F, const FqMatrix& a) { return invariant_factors(F, a); }

inline Poly characteristic_polynomial(const Field& F, const FqMatrix& a)
{
    Poly r{1};
    for (const auto& f : invariant_factors(F, a))
        r = poly_mul(F, r, f);
    return r;
}

/// Converts invariant factors into the class label (throws if t divides them).
inline ConjClassLabel label_from_invariant_factors(const Field& F, int n, const std::vector<Poly>& factors)
{
    std::map<Poly, std::vector<int>, PolyLess> powers;
    for (const auto& f0 : factors) {
        Poly f = f0;
        for (int d = 1; d <= poly_degree(f0) && poly_degree(f) >= 1; ++d)
            for (const auto& g : irreducibles(F, d)) {
                int k = 0;
                while (poly_degree(f) >= d) {
                    auto [quo, rem] = poly_divmod(F, f, g.coeffs);
                    if (!rem.empty())
                        break;
                    f = quo;
                    ++k;
                }
                if (k > 0) {
                    if (d == 1 && g.coeffs[0] == 0)
                        throw std::domain_error("class_label: matrix is singular");
                    powers[g.coeffs].push_back(k);
                }
            }
    }
    std::vector<ConjClassLabel::Entry> entries;
    for (auto& [g, ks] : powers)
        entries.emplace_back(g, Partition(ks));
    return ConjClassLabel(n, std::move(entries));
}

inline ConjClassLabel class_label(const Field& F, const FqMatrix& a)
{
    return label_from_invariant_factors(F, a.dim(), invariant_factors(F, a));
}

/// Companion matrix of a monic polynomial (ones below the diagonal, last column -coeffs).
inline FqMatrix companion_matrix(const Field& F, const Poly& f)
{
    const int d = poly_degree(f);
    FqMatrix m(d, 0);
    for (int i = 1; i < d; ++i)
        m(i, i - 1) = 1;
    for (int i = 0; i < d; ++i)
        m(i, d - 1) = F.neg(f[static_cast<std::size_t>(i)]);
    return m;
}

/// Block-diagonal companion matrices of f^part over all (f, part).
inline FqMatrix representative(const Field& F, const ConjClassLabel& c)
{
    FqMatrix m(c.n(), 0);
    int off = 0;
    for (const auto& [f, nu] : c.entries())
        for (int part : nu.parts()) {
            auto block = companion_matrix(F, poly_pow(F, f, part));
            for (int i = 0; i < block.dim(); ++i)
                for (int j = 0; j < block.dim(); ++j)
                    m(off + i, off + j) = block(i, j);
            off += block.dim();
        }
    return m;
}

/// Parses "coeffs^[parts];coeffs^[parts];..." (the form printed by to_string).
inline ConjClassLabel parse_class_label(const Field& F, int n, const std::string& text)
{
    std::vector<ConjClassLabel::Entry> entries;
    std::size_t start = 0;
    while (start < text.size()) {
        auto semi = text.find(';', start);
        auto item = text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        // coefficients may themselves contain '^' (g^k), so split at "^["
        auto caret = item.rfind("^[");
        if (caret == std::string::npos || item.back() != ']')
            throw std::invalid_argument("bad class entry: " + item);
        Poly f = parse_poly(F, item.substr(0, caret));
        if (poly_degree(f) < 1 || f.back() != 1)
            throw std::invalid_argument("class polynomial must be monic of positive degree: " + item);
        if (!is_irreducible(F, f))
            throw std::invalid_argument("class polynomial is not irreducible: " + item);
        std::vector<int> parts;
        std::string body = item.substr(caret + 2, item.size() - caret - 3);
        std::size_t p0 = 0;
        while (p0 <= body.size()) {
            auto comma = body.find(',', p0);
            parts.push_back(std::stoi(body.substr(p0, comma == std::string::npos ? std::string::npos : comma - p0)));
            if (comma == std::string::npos)
                break;
            p0 = comma + 1;
        }
        entries.emplace_back(f, Partition(parts));
        if (semi == std::string::npos)
            break;
        start = semi + 1;
    }
    return ConjClassLabel(n, std::move(entries));
}

} // namespace glnq

#endif
