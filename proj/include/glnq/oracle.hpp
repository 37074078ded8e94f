#ifndef GLNQ_ORACLE_HPP
#define GLNQ_ORACLE_HPP

// Brute-force ground truth for small GL_n(F_q): every invertible matrix is
// enumerated once, bucketed by its class label, and commutator fibers are
// counted with
//   #{(x, y) : [x, y] = c} = sum_y [y ~ c y] |C(y)|.

#include <glnq/class_label.hpp>
#include <glnq/finite_field.hpp>
#include <glnq/matrix.hpp>
#include <glnq/numeric.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

namespace glnq {

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_element_cap = 10'000'000;

/// The element cap: GLNQ_CAP if set, otherwise the default.
inline std::uint64_t element_cap_from_env(std::uint64_t fallback = default_element_cap)
{
    if (const char* env = std::getenv("GLNQ_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("GLNQ_CAP is not a number: ") + env);
        }
    }
    return fallback;
}

/// |GL_n(F_q)| = prod_{i<n} (q^n - q^i)
inline Integer gl_order(int n, long q)
{
    Integer r = 1;
    for (int i = 0; i < n; ++i)
        r *= integer_pow(q, static_cast<unsigned long>(n)) - integer_pow(q, static_cast<unsigned long>(i));
    return r;
}

inline bool conjugate_test(const Field& F, const FqMatrix& a, const FqMatrix& b)
{
    if (a.dim() != b.dim())
        return false;
    return invariant_factors(F, a) == invariant_factors(F, b);
}

struct CensusClass {
    ConjClassLabel label;
    std::uint64_t size = 0;
    std::uint64_t centralizer = 0;
};

class GroupCensus {
public:
    int n = 0;
    long q = 0;
    std::uint64_t order = 0;
    std::vector<CensusClass> classes;

    const Field& field() const { return *field_; }

    /// Index into `classes` of the class containing the matrix with this code.
    int class_of_code(std::uint64_t code) const
    {
        if (!dense_.empty())
            return dense_[code];
        auto it = sparse_.find(code);
        if (it == sparse_.end())
            throw std::out_of_range("class_of_code: not an invertible matrix");
        return it->second;
    }

    int class_of(const FqMatrix& a) const { return class_of_code(encode_matrix(*field_, a)); }

    int index_of(const ConjClassLabel& label) const
    {
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i].label == label)
                return static_cast<int>(i);
        return -1;
    }

    const std::vector<std::uint64_t>& elements() const { return elements_; }
    const std::vector<int>& element_classes() const { return element_class_; }

    std::string to_csv() const
    {
        std::string out = "class,size,centralizer\n";
        for (const auto& c : classes)
            out += "\"" + c.label.to_string(*field_) + "\"," + std::to_string(c.size) + "," +
                   std::to_string(c.centralizer) + "\n";
        return out;
    }

private:
    friend GroupCensus census(const Field& F, int n, std::uint64_t cap, unsigned threads);

    std::shared_ptr<const Field> field_;
    std::vector<std::uint64_t> elements_;
    std::vector<int> element_class_;
    std::vector<int> dense_;
    std::unordered_map<std::uint64_t, int> sparse_;
};

namespace detail {

inline unsigned resolve_threads(unsigned threads)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    return threads;
}

// Reduces v against an echelon basis (pivot column -> row); true if v is independent.
inline bool reduce_against(const Field& F, std::vector<Elem> v, const std::vector<std::pair<int, std::vector<Elem>>>& basis,
                           std::pair<int, std::vector<Elem>>* out)
{
    for (const auto& [piv, row] : basis) {
        Elem c = v[static_cast<std::size_t>(piv)];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = F.sub(v[j], F.mul(c, row[j]));
    }
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) {
            if (out) {
                Elem s = F.inv(v[j]);
                for (auto& x : v)
                    x = F.mul(x, s);
                *out = {static_cast<int>(j), v};
            }
            return true;
        }
    return false;
}

inline std::vector<Elem> vector_from_index(const Field& F, int n, std::uint64_t idx)
{
    std::vector<Elem> v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        v[static_cast<std::size_t>(j)] = static_cast<Elem>(idx % static_cast<std::uint64_t>(F.q()));
        idx /= static_cast<std::uint64_t>(F.q());
    }
    return v;
}

// Invertible matrices whose first row has index in [lo, hi), in increasing
// lexicographic order of row indices.
template <class Visit>
void for_each_invertible(const Field& F, int n, std::uint64_t lo, std::uint64_t hi, Visit&& visit)
{
    const std::uint64_t rows = checked_pow(static_cast<std::uint64_t>(F.q()), n);
    FqMatrix m(n, 0);
    std::vector<std::pair<int, std::vector<Elem>>> basis;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            visit(m);
            return;
        }
        std::uint64_t begin = i == 0 ? lo : 0, end = i == 0 ? hi : rows;
        for (std::uint64_t r = begin; r < end; ++r) {
            auto v = vector_from_index(F, n, r);
            std::pair<int, std::vector<Elem>> reduced;
            if (!reduce_against(F, v, basis, &reduced))
                continue;
            auto saved = basis;
            // keep the basis in reduced echelon form so reduce_against stays one pass
            for (auto& [piv, row] : basis) {
                Elem c = row[static_cast<std::size_t>(reduced.first)];
                if (c != 0)
                    for (std::size_t j = 0; j < row.size(); ++j)
                        row[j] = F.sub(row[j], F.mul(c, reduced.second[j]));
            }
            basis.push_back(reduced);
            for (int j = 0; j < n; ++j)
                m(i, j) = v[static_cast<std::size_t>(j)];
            self(self, i + 1);
            basis = std::move(saved);
        }
    };
    rec(rec, 0);
}

struct VectorLess {
    bool operator()(const std::vector<Poly>& a, const std::vector<Poly>& b) const
    {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), PolyLess{});
    }
};

} // namespace detail

/// Enumerates GL_n(F_q) and buckets it by conjugacy class. Shards by first
/// row across threads; merged output is independent of the thread count.
inline GroupCensus census(const Field& F, int n, std::uint64_t cap = element_cap_from_env(), unsigned threads = 0)
{
    if (n < 1)
        throw std::invalid_argument("census: n must be positive");
    const Integer order = gl_order(n, F.q());
    if (order > Integer(std::to_string(cap)))
        throw CapExceeded("GL_" + std::to_string(n) + "(F_" + std::to_string(F.q()) + ") has " + order.get_str() +
                          " elements, above the cap of " + std::to_string(cap));
    const auto q64 = static_cast<std::uint64_t>(F.q());
    std::uint64_t codes = 1;
    for (int i = 0; i < n * n; ++i) {
        if (codes > (std::uint64_t{1} << 62) / q64)
            throw CapExceeded("census: matrix codes do not fit in 64 bits");
        codes *= q64;
    }

    threads = detail::resolve_threads(threads);
    const std::uint64_t rows = checked_pow(q64, n);
    struct Shard {
        std::vector<std::uint64_t> codes;
        std::vector<int> local_ids;
        std::vector<std::vector<Poly>> keys;
    };
    const std::uint64_t shards = std::min<std::uint64_t>(rows, threads * 4ULL);
    std::vector<Shard> results(static_cast<std::size_t>(shards));
    {
        std::vector<std::thread> pool;
        std::atomic<std::uint64_t> next{0};
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::uint64_t s; (s = next++) < shards;) {
                    auto& out = results[static_cast<std::size_t>(s)];
                    std::map<std::vector<Poly>, int, detail::VectorLess> local;
                    const std::uint64_t lo = rows * s / shards, hi = rows * (s + 1) / shards;
                    detail::for_each_invertible(F, n, lo, hi, [&](const FqMatrix& m) {
                        auto key = invariant_factors(F, m);
                        auto [it, fresh] = local.emplace(std::move(key), static_cast<int>(out.keys.size()));
                        if (fresh)
                            out.keys.push_back(it->first);
                        out.codes.push_back(encode_matrix(F, m));
                        out.local_ids.push_back(it->second);
                    });
                }
            });
        for (auto& th : pool)
            th.join();
    }

    std::map<ConjClassLabel, std::uint64_t> sizes;
    std::vector<std::vector<ConjClassLabel>> shard_labels(results.size());
    for (std::size_t s = 0; s < results.size(); ++s) {
        for (const auto& key : results[s].keys)
            shard_labels[s].push_back(label_from_invariant_factors(F, n, key));
        for (int id : results[s].local_ids)
            ++sizes[shard_labels[s][static_cast<std::size_t>(id)]];
    }

    GroupCensus c;
    c.n = n;
    c.q = F.q();
    c.order = static_cast<std::uint64_t>(order.get_ui());
    c.field_ = shared_field(F.q());
    std::map<ConjClassLabel, int> index;
    for (auto& [label, size] : sizes) {
        index.emplace(label, static_cast<int>(c.classes.size()));
        c.classes.push_back({label, size, c.order / size});
    }
    const bool dense = codes <= (std::uint64_t{1} << 25);
    if (dense)
        c.dense_.assign(static_cast<std::size_t>(codes), -1);
    for (std::size_t s = 0; s < results.size(); ++s)
        for (std::size_t i = 0; i < results[s].codes.size(); ++i) {
            int cls = index.at(shard_labels[s][static_cast<std::size_t>(results[s].local_ids[i])]);
            const std::uint64_t code = results[s].codes[i];
            c.elements_.push_back(code);
            c.element_class_.push_back(cls);
            if (dense)
                c.dense_[static_cast<std::size_t>(code)] = cls;
            else
                c.sparse_.emplace(code, cls);
        }
    return c;
}

/// #{(x, y) in G^2 : [x, y] = g} for a fixed matrix g.
inline std::uint64_t fiber_count(const GroupCensus& cen, const FqMatrix& g, unsigned threads = 0)
{
    const Field& F = cen.field();
    threads = detail::resolve_threads(threads);
    const auto& elems = cen.elements();
    const auto& cls = cen.element_classes();
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    FqRing ring(F);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            std::uint64_t acc = 0;
            for (std::size_t i = t; i < elems.size(); i += threads) {
                auto y = decode_matrix(F, cen.n, elems[i]);
                auto gy = mat_mul(ring, g, y);
                int k = cls[i];
                if (cen.class_of(gy) == k)
                    acc += cen.classes[static_cast<std::size_t>(k)].centralizer;
            }
            partial[t] = acc;
        });
    for (auto& th : pool)
        th.join();
    std::uint64_t total = 0;
    for (auto v : partial)
        total += v;
    return total;
}

inline std::uint64_t fiber_count(const GroupCensus& cen, const ConjClassLabel& c, unsigned threads = 0)
{
    return fiber_count(cen, representative(cen.field(), c), threads);
}

} // namespace glnq

#endif
