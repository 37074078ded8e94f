#ifndef GLNQ_CENTRAL_GEOMETRY_HPP
#define GLNQ_CENTRAL_GEOMETRY_HPP

// Witnesses for the fiber of the commutator map over a central element
// xi^m, n = m l: the n-cycle sigma, the diagonal tau_n^b(xi) with
// [sigma^m, tau] = xi^m, the block subgroup SL_n^{m_b} and the dimension
// bookkeeping. Works over Q(zeta_n) and over F_q with n | q - 1.

#include <glnq/cyclotomic.hpp>
#include <glnq/finite_field.hpp>
#include <glnq/matrix.hpp>
#include <glnq/numeric.hpp>
#include <glnq/oracle.hpp>
#include <glnq/partitions.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glnq {

template <class R>
struct GeomField {
    R ring;
    typename R::value_type xi;
    int n = 0;
    std::string description;
};

/// Q(zeta_n) with xi = zeta_n.
inline GeomField<CycRing> cyclotomic_geom_field(int n)
{
    if (n < 1)
        throw std::invalid_argument("geometry: n must be positive");
    return {CycRing(n), CycValue::zeta(n, 1), n, "Q(zeta_" + std::to_string(n) + ")"};
}

/// F_q with xi = g^{(q-1)/n}, a primitive n-th root of unity.
inline GeomField<FqRing> finite_geom_field(const Field& F, int n)
{
    if (n < 1 || (F.q() - 1) % n != 0)
        throw std::invalid_argument("geometry: n must divide q - 1 (n = " + std::to_string(n) +
                                    ", q = " + std::to_string(F.q()) + ")");
    return {FqRing(F), F.gen_pow((F.q() - 1) / n), n, "F_" + std::to_string(F.q())};
}

template <class R>
typename R::value_type ring_pow(const R& ring, const typename R::value_type& a, long k)
{
    auto base = k < 0 ? ring.inv(a) : a;
    if (k < 0)
        k = -k;
    auto r = ring.one();
    for (long i = 0; i < k; ++i)
        r = ring.mul(r, base);
    return r;
}

/// The n-cycle sigma with sigma e_j = e_{j-1}, so sigma^m tau sigma^{-m} = xi^m tau.
template <class R>
SquareMatrix<typename R::value_type> sigma_matrix(const R& ring, int n)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        perm[static_cast<std::size_t>(j)] = (j - 1 + n) % n;
    return permutation_matrix(ring, perm);
}

template <class T>
struct TauWitness {
    int n = 0;
    int m = 0;
    int l = 0;
    std::vector<T> b;
    /// positions 0..m-1 grouped by equal b-value; group sizes are the pattern m_1..m_k
    std::vector<std::vector<int>> groups;
    SquareMatrix<T> tau;

    std::vector<int> pattern() const
    {
        std::vector<int> p;
        for (const auto& g : groups)
            p.push_back(static_cast<int>(g.size()));
        return p;
    }
};

/// tau_n^b(xi) = diag(b_1..b_m, xi^m b_1..xi^m b_m, ..., xi^{(l-1)m} b_1..). Equal
/// entries of b form the blocks of the pattern; distinct entries must be
/// non-resonant (b_i / b_j never a power of xi^m). Verifies [sigma^m, tau] = xi^m.
template <class R>
TauWitness<typename R::value_type> build_tau(const GeomField<R>& G, int m, const std::vector<typename R::value_type>& b)
{
    const R& ring = G.ring;
    const int n = G.n;
    if (m < 1 || n % m != 0)
        throw std::invalid_argument("build_tau: m must divide n");
    if (static_cast<int>(b.size()) != m)
        throw std::invalid_argument("build_tau: b must have m entries");
    for (const auto& x : b)
        if (ring.is_zero(x))
            throw std::invalid_argument("build_tau: entries of b must be nonzero");

    TauWitness<typename R::value_type> w;
    w.n = n;
    w.m = m;
    w.l = n / m;
    w.b = b;
    for (int p = 0; p < m; ++p) {
        bool placed = false;
        for (auto& g : w.groups)
            if (b[static_cast<std::size_t>(g.front())] == b[static_cast<std::size_t>(p)]) {
                g.push_back(p);
                placed = true;
                break;
            }
        if (!placed)
            w.groups.push_back({p});
    }
    const auto xim = ring_pow(ring, G.xi, m);
    for (std::size_t i = 0; i < w.groups.size(); ++i)
        for (std::size_t j = 0; j < w.groups.size(); ++j) {
            if (i == j)
                continue;
            auto ratio = ring.mul(b[static_cast<std::size_t>(w.groups[i].front())],
                                  ring.inv(b[static_cast<std::size_t>(w.groups[j].front())]));
            auto power = ring.one();
            for (int r = 0; r < w.l; ++r) {
                if (ratio == power)
                    throw std::invalid_argument("build_tau: resonant entries (b_i / b_j is a power of xi^m)");
                power = ring.mul(power, xim);
            }
        }

    std::vector<typename R::value_type> diag;
    auto scale = ring.one();
    for (int r = 0; r < w.l; ++r) {
        for (const auto& x : b)
            diag.push_back(ring.mul(scale, x));
        scale = ring.mul(scale, xim);
    }
    w.tau = diagonal_matrix(ring, diag);

    auto sm = mat_pow(ring, sigma_matrix(ring, n), m);
    if (!is_scalar_matrix(ring, commutator(ring, sm, w.tau), xim))
        throw std::logic_error("build_tau: [sigma^m, tau] is not xi^m");
    return w;
}

/// b with b_p = beta_i on the i-th block of the pattern.
template <class T>
std::vector<T> pattern_b(const std::vector<int>& pattern, const std::vector<T>& betas)
{
    if (pattern.size() != betas.size())
        throw std::invalid_argument("pattern_b: one beta per block is required");
    std::vector<T> b;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] < 1)
            throw std::invalid_argument("pattern_b: block sizes must be positive");
        b.insert(b.end(), static_cast<std::size_t>(pattern[i]), betas[i]);
    }
    return b;
}

/// k non-resonant betas: 1, 2, 3, ... in Q(zeta_n).
inline std::vector<CycValue> default_betas(const GeomField<CycRing>& G, int k)
{
    std::vector<CycValue> out;
    for (int i = 0; i < k; ++i)
        out.push_back(CycValue::rational(i + 1, G.n));
    return out;
}

/// k non-resonant betas in F_q: representatives g^0, g^1, ... of distinct
/// cosets of <xi^m>; throws if there are fewer than k cosets.
inline std::vector<Elem> default_betas(const GeomField<FqRing>& G, int m, int k)
{
    const Field& F = *G.ring.field;
    const int l = G.n / m;
    const int cosets = (F.q() - 1) / l;
    if (k > cosets)
        throw std::invalid_argument("default_betas: F_" + std::to_string(F.q()) + " has only " +
                                    std::to_string(cosets) + " cosets of <xi^m>");
    std::vector<Elem> out;
    for (int i = 0; i < k; ++i)
        out.push_back(F.gen_pow(i));
    return out;
}

/// l * sum m_i^2, the dimension of C(tau) = (GL_{m_1} x ... x GL_{m_k})^l.
inline int centralizer_dimension(int l, const std::vector<int>& pattern)
{
    int s = 0;
    for (int mi : pattern)
        s += mi * mi;
    return l * s;
}

namespace detail {

template <class R>
SquareMatrix<typename R::value_type> extract_block(const R& ring, const SquareMatrix<typename R::value_type>& a,
                                                   const std::vector<int>& idx)
{
    const int k = static_cast<int>(idx.size());
    SquareMatrix<typename R::value_type> out(k, ring.zero());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            out(i, j) = a(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    return out;
}

template <class R>
void place_block(SquareMatrix<typename R::value_type>& a, const SquareMatrix<typename R::value_type>& block,
                 const std::vector<int>& idx)
{
    for (int i = 0; i < block.dim(); ++i)
        for (int j = 0; j < block.dim(); ++j)
            a(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]) = block(i, j);
}

template <class T>
std::vector<int> block_indices(const TauWitness<T>& w, int r, std::size_t group)
{
    std::vector<int> idx;
    for (int p : w.groups[group])
        idx.push_back(r * w.m + p);
    return idx;
}

} // namespace detail

/// True iff a commutes with tau (equivalently: a is block diagonal for the
/// eigenspaces of tau).
template <class R>
bool in_centralizer(const R& ring, const SquareMatrix<typename R::value_type>& a,
                    const TauWitness<typename R::value_type>& w)
{
    for (int i = 0; i < w.n; ++i)
        for (int j = 0; j < w.n; ++j)
            if (!ring.is_zero(a(i, j)) && !(w.tau(i, i) == w.tau(j, j)))
                return false;
    return true;
}

/// A_{1j} A_{2j} ... A_{lj} = I for every block j. Throws if a is not in C(tau).
template <class R>
bool sl_mb_check(const R& ring, const SquareMatrix<typename R::value_type>& a, const TauWitness<typename R::value_type>& w)
{
    if (a.dim() != w.n || !in_centralizer(ring, a, w))
        throw std::invalid_argument("sl_mb_check: matrix does not have the block shape of C(tau)");
    for (std::size_t g = 0; g < w.groups.size(); ++g) {
        auto prod = identity_matrix(ring, static_cast<int>(w.groups[g].size()));
        for (int r = 0; r < w.l; ++r)
            prod = mat_mul(ring, prod, detail::extract_block(ring, a, detail::block_indices(w, r, g)));
        if (!(prod == identity_matrix(ring, prod.dim())))
            return false;
    }
    return true;
}

/// Given A in C(tau) passing sl_mb_check and blocks C_j, returns B in C(tau)
/// with sigma^{-m} B sigma^m B^{-1} = A, via B_r = A_r^{-1} ... A_0^{-1} C.
template <class R>
SquareMatrix<typename R::value_type> sl_mb_preimage(const R& ring, const SquareMatrix<typename R::value_type>& a,
                                                    const TauWitness<typename R::value_type>& w,
                                                    const std::vector<SquareMatrix<typename R::value_type>>& seeds)
{
    if (seeds.size() != w.groups.size())
        throw std::invalid_argument("sl_mb_preimage: one seed block per pattern block is required");
    SquareMatrix<typename R::value_type> b(w.n, ring.zero());
    for (std::size_t g = 0; g < w.groups.size(); ++g) {
        auto cur = seeds[g];
        for (int r = 0; r < w.l; ++r) {
            auto idx = detail::block_indices(w, r, g);
            cur = mat_mul(ring, mat_inverse(ring, detail::extract_block(ring, a, idx)), cur);
            detail::place_block<R>(b, cur, idx);
        }
    }
    return b;
}

/// [sigma^{-m}, B] = sigma^{-m} B sigma^m B^{-1}
template <class R>
SquareMatrix<typename R::value_type> sigma_commutator(const R& ring, const TauWitness<typename R::value_type>& w,
                                                      const SquareMatrix<typename R::value_type>& b)
{
    auto sm = mat_pow(ring, sigma_matrix(ring, w.n), -w.m);
    return commutator(ring, sm, b);
}

struct DimensionLedger {
    int n = 0, m = 0, l = 0, k = 0;
    int orbit = 0;       // n^2 - sum m_i^2
    int stabilizer = 0;  // sum m_i^2
    int centralizer = 0; // l sum m_i^2
    int union_dim = 0;   // stabilizer + k + orbit = k + n^2
    int fiber = 0;       // max over patterns = n^2 + m, attained at k = m
    int maximizing_k = 0;

    nlohmann::json to_json() const
    {
        return {{"n", n},
                {"m", m},
                {"l", l},
                {"k", k},
                {"orbit_dim", orbit},
                {"stabilizer_dim", stabilizer},
                {"centralizer_dim", centralizer},
                {"union_dim", union_dim},
                {"fiber_dim", fiber},
                {"maximizing_k", maximizing_k}};
    }
};

inline DimensionLedger dimension_ledger(int n, int m, const std::vector<int>& pattern)
{
    if (m < 1 || n % m != 0)
        throw std::invalid_argument("dimension_ledger: m must divide n");
    int total = 0, squares = 0;
    for (int mi : pattern) {
        if (mi < 1)
            throw std::invalid_argument("dimension_ledger: pattern entries must be positive");
        total += mi;
        squares += mi * mi;
    }
    if (total != m)
        throw std::invalid_argument("dimension_ledger: pattern must sum to m");
    DimensionLedger d;
    d.n = n;
    d.m = m;
    d.l = n / m;
    d.k = static_cast<int>(pattern.size());
    d.stabilizer = squares;
    d.orbit = n * n - squares;
    d.centralizer = d.l * squares;
    d.union_dim = d.stabilizer + d.k + d.orbit;
    // union_dim = k + n^2 grows with k; k <= m, with equality for the all-ones pattern
    int best = 0;
    for (int k = 1; k <= m; ++k)
        if (k + n * n > best) {
            best = k + n * n;
            d.maximizing_k = k;
        }
    d.fiber = best;
    return d;
}

/// All patterns (compositions of m) in lexicographic order.
inline std::vector<std::vector<int>> compositions(int m)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    rec(m);
    return out;
}

/// |C(tau)| over F_q counted by brute force, against prod |GL_{m_i}(F_q)|^l.
struct CentralizerCount {
    std::uint64_t counted = 0;
    Integer predicted;
    int dimension = 0;
    bool match = false;
};

inline CentralizerCount centralizer_count(const GeomField<FqRing>& G, const TauWitness<Elem>& w,
                                          std::uint64_t cap = element_cap_from_env())
{
    const Field& F = *G.ring.field;
    if (gl_order(w.n, F.q()) > Integer(std::to_string(cap)))
        throw CapExceeded("centralizer_count: GL_" + std::to_string(w.n) + "(F_" + std::to_string(F.q()) +
                          ") is above the cap");
    CentralizerCount c;
    FqRing ring(F);
    const std::uint64_t rows = checked_pow(static_cast<std::uint64_t>(F.q()), w.n);
    detail::for_each_invertible(F, w.n, 0, rows, [&](const FqMatrix& x) {
        if (mat_mul(ring, x, w.tau) == mat_mul(ring, w.tau, x))
            ++c.counted;
    });
    c.predicted = 1;
    for (int mi : w.pattern())
        for (int r = 0; r < w.l; ++r)
            c.predicted *= gl_order(mi, F.q());
    c.dimension = centralizer_dimension(w.l, w.pattern());
    c.match = Integer(std::to_string(c.counted)) == c.predicted;
    return c;
}

struct ClosureReport {
    std::uint64_t seed = 0;
    int samples = 0;
    int commutator_failures = 0; // [sigma^{-m}, B] outside C(tau) cap SL^{m_b}
    int preimage_failures = 0;   // constructed B does not reproduce A
    bool exhaustive = false;
    std::uint64_t centralizer_size = 0;
    std::uint64_t image_size = 0;
    std::uint64_t sl_mb_size = 0;
    int exhaustive_counterexamples = 0;

    bool passed() const { return commutator_failures == 0 && preimage_failures == 0 && exhaustive_counterexamples == 0; }

    nlohmann::json to_json() const
    {
        nlohmann::json j = {{"seed", seed},
                            {"samples", samples},
                            {"commutator_failures", commutator_failures},
                            {"preimage_failures", preimage_failures},
                            {"exhaustive", exhaustive},
                            {"passed", passed()}};
        if (exhaustive) {
            j["centralizer_size"] = centralizer_size;
            j["image_size"] = image_size;
            j["sl_mb_size"] = sl_mb_size;
            j["exhaustive_counterexamples"] = exhaustive_counterexamples;
        }
        return j;
    }
};

namespace detail {

inline FqMatrix random_invertible(const Field& F, int k, std::mt19937_64& rng)
{
    FqRing ring(F);
    std::uniform_int_distribution<int> dist(0, F.q() - 1);
    while (true) {
        FqMatrix a(k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                a(i, j) = static_cast<Elem>(dist(rng));
        if (mat_det(ring, a) != 0)
            return a;
    }
}

inline FqMatrix random_centralizer_element(const Field& F, const TauWitness<Elem>& w, std::mt19937_64& rng)
{
    FqMatrix b(w.n, 0);
    for (int r = 0; r < w.l; ++r)
        for (std::size_t g = 0; g < w.groups.size(); ++g)
            place_block<FqRing>(b, random_invertible(F, static_cast<int>(w.groups[g].size()), rng),
                                block_indices(w, r, g));
    return b;
}

// Random A in C(tau) satisfying the block-product condition.
inline FqMatrix random_sl_mb_element(const Field& F, const TauWitness<Elem>& w, std::mt19937_64& rng)
{
    FqRing ring(F);
    FqMatrix a(w.n, 0);
    for (std::size_t g = 0; g < w.groups.size(); ++g) {
        const int k = static_cast<int>(w.groups[g].size());
        auto prod = identity_matrix(ring, k);
        for (int r = 0; r + 1 < w.l; ++r) {
            auto blk = random_invertible(F, k, rng);
            place_block<FqRing>(a, blk, block_indices(w, r, g));
            prod = mat_mul(ring, prod, blk);
        }
        place_block<FqRing>(a, mat_inverse(ring, prod), block_indices(w, w.l - 1, g));
    }
    return a;
}

inline std::vector<FqMatrix> all_invertible(const Field& F, int k)
{
    std::vector<FqMatrix> out;
    detail::for_each_invertible(F, k, 0, checked_pow(static_cast<std::uint64_t>(F.q()), k),
                                [&](const FqMatrix& a) { out.push_back(a); });
    return out;
}

} // namespace detail

/// Samples B in C(tau) and checks [sigma^{-m}, B] in C(tau) cap SL^{m_b};
/// samples A in that set and rebuilds a preimage. When |C(tau)| is at most
/// exhaustive_limit, also compares the full image with the full subgroup.
inline ClosureReport commutator_closure_check(const GeomField<FqRing>& G, const TauWitness<Elem>& w, int samples,
                                              std::uint64_t seed, std::uint64_t exhaustive_limit = 200000)
{
    const Field& F = *G.ring.field;
    FqRing ring(F);
    std::mt19937_64 rng(seed);
    ClosureReport rep;
    rep.seed = seed;
    rep.samples = samples;
    for (int s = 0; s < samples; ++s) {
        auto b = detail::random_centralizer_element(F, w, rng);
        auto a = sigma_commutator(ring, w, b);
        if (!in_centralizer(ring, a, w) || !sl_mb_check(ring, a, w))
            ++rep.commutator_failures;

        auto target = detail::random_sl_mb_element(F, w, rng);
        std::vector<FqMatrix> seeds;
        for (const auto& g : w.groups)
            seeds.push_back(detail::random_invertible(F, static_cast<int>(g.size()), rng));
        auto pre = sl_mb_preimage(ring, target, w, seeds);
        if (!in_centralizer(ring, pre, w) || !(sigma_commutator(ring, w, pre) == target))
            ++rep.preimage_failures;
    }

    // exhaustive comparison of image and subgroup
    Integer size = 1;
    for (const auto& g : w.groups)
        for (int r = 0; r < w.l; ++r)
            size *= gl_order(static_cast<int>(g.size()), F.q());
    if (size <= Integer(std::to_string(exhaustive_limit))) {
        rep.exhaustive = true;
        rep.centralizer_size = size.get_ui();
        std::vector<std::vector<FqMatrix>> options;
        std::vector<std::vector<int>> slots;
        for (int r = 0; r < w.l; ++r)
            for (std::size_t g = 0; g < w.groups.size(); ++g) {
                options.push_back(detail::all_invertible(F, static_cast<int>(w.groups[g].size())));
                slots.push_back(detail::block_indices(w, r, g));
            }
        std::vector<FqMatrix> elements;
        FqMatrix cur(w.n, 0);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == options.size()) {
                elements.push_back(cur);
                return;
            }
            for (const auto& blk : options[i]) {
                detail::place_block<FqRing>(cur, blk, slots[i]);
                rec(i + 1);
            }
        };
        rec(0);
        std::set<std::uint64_t> image, subgroup;
        for (const auto& b : elements)
            image.insert(encode_matrix(F, sigma_commutator(ring, w, b)));
        for (const auto& a : elements)
            if (sl_mb_check(ring, a, w))
                subgroup.insert(encode_matrix(F, a));
        rep.image_size = image.size();
        rep.sl_mb_size = subgroup.size();
        for (auto code : image)
            if (!subgroup.count(code))
                ++rep.exhaustive_counterexamples;
        for (auto code : subgroup)
            if (!image.count(code))
                ++rep.exhaustive_counterexamples;
    }
    return rep;
}

struct JordanWitnessReport {
    bool semisimple_commutator = false; // [sigma^m, y_s] = xi^m
    bool unipotent_commutes = false;    // [sigma^m, y_u] = 1
    bool full_commutator = false;       // [sigma^m, y] = xi^m
    bool jordan_parts_commute = false;  // y_s y_u = y_u y_s
    bool reduces_to_tau = false;        // all lambda_i = {1}: y equals tau_n^b(xi)
    bool all_singletons = false;

    bool passed() const
    {
        return semisimple_commutator && unipotent_commutes && full_commutator && jordan_parts_commute &&
               (!all_singletons || reduces_to_tau);
    }

    nlohmann::json to_json() const
    {
        return {{"semisimple_commutator", semisimple_commutator}, {"unipotent_commutes", unipotent_commutes},
                {"full_commutator", full_commutator},             {"jordan_parts_commute", jordan_parts_commute},
                {"reduces_to_tau", all_singletons ? nlohmann::json(reduces_to_tau) : nlohmann::json(nullptr)},
                {"passed", passed()}};
    }
};

enum class UnipotentBlock {
    /// beta (I + N): the unipotent part I + N is the same in every l-cycle position
    multiplicative,
    /// beta I + N: the literal upper-triangular Jordan block
    additive,
};

/// Builds tau_{lambda_1..lambda_k}^b(xi) block by block (cycle position r,
/// then slot i, then the parts of lambda_i), each part a Jordan-type block
/// at eigenvalue beta_i xi^{rm}, and checks the Jordan-decomposed identities.
template <class R>
JordanWitnessReport jordan_witness(const GeomField<R>& G, const std::vector<Partition>& lambdas,
                                   const std::vector<typename R::value_type>& betas,
                                   UnipotentBlock style = UnipotentBlock::multiplicative)
{
    const R& ring = G.ring;
    if (lambdas.size() != betas.size() || lambdas.empty())
        throw std::invalid_argument("jordan_witness: one beta per partition is required");
    int m = 0;
    for (const auto& lam : lambdas) {
        if (lam.empty())
            throw std::invalid_argument("jordan_witness: partitions must be nonempty");
        m += lam.size();
    }
    const int n = G.n;
    if (n % m != 0)
        throw std::invalid_argument("jordan_witness: sum |lambda_i| must divide n");
    const int l = n / m;
    const auto xim = ring_pow(ring, G.xi, m);
    // non-resonance of the betas
    for (std::size_t i = 0; i < betas.size(); ++i)
        for (std::size_t j = 0; j < betas.size(); ++j) {
            if (i == j)
                continue;
            auto ratio = ring.mul(betas[i], ring.inv(betas[j]));
            auto power = ring.one();
            for (int r = 0; r < l; ++r) {
                if (ratio == power)
                    throw std::invalid_argument("jordan_witness: resonant betas");
                power = ring.mul(power, xim);
            }
        }

    SquareMatrix<typename R::value_type> y(n, ring.zero()), ys(n, ring.zero());
    int pos = 0;
    auto scale = ring.one();
    for (int r = 0; r < l; ++r) {
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            const auto beta = ring.mul(betas[i], scale);
            for (int part : lambdas[i].parts()) {
                for (int d = 0; d < part; ++d) {
                    y(pos + d, pos + d) = beta;
                    ys(pos + d, pos + d) = beta;
                    if (d + 1 < part)
                        y(pos + d, pos + d + 1) = style == UnipotentBlock::multiplicative ? beta : ring.one();
                }
                pos += part;
            }
        }
        scale = ring.mul(scale, xim);
    }
    auto yu = mat_mul(ring, mat_inverse(ring, ys), y);
    auto sm = mat_pow(ring, sigma_matrix(ring, n), m);

    JordanWitnessReport rep;
    rep.semisimple_commutator = is_scalar_matrix(ring, commutator(ring, sm, ys), xim);
    rep.unipotent_commutes = is_scalar_matrix(ring, commutator(ring, sm, yu), ring.one());
    rep.full_commutator = is_scalar_matrix(ring, commutator(ring, sm, y), xim);
    rep.jordan_parts_commute = mat_mul(ring, ys, yu) == mat_mul(ring, yu, ys);
    rep.all_singletons = true;
    for (const auto& lam : lambdas)
        if (lam.size() != 1)
            rep.all_singletons = false;
    if (rep.all_singletons)
        rep.reduces_to_tau = build_tau(G, m, betas).tau == y;
    return rep;
}

/// log_q(fiber / |G|) for the central element xi I_n, from the oracle.
struct ExponentFit {
    long q = 0;
    int order = 0;
    std::uint64_t fiber = 0;
    double exponent = 0;
    double target = 0;
};

inline ExponentFit central_exponent_fit(const GroupCensus& cen, Elem xi)
{
    const Field& F = cen.field();
    ExponentFit fit;
    fit.q = F.q();
    fit.order = F.order(xi);
    FqRing ring(F);
    fit.fiber = fiber_count(cen, scalar_matrix(ring, cen.n, xi));
    fit.exponent = std::log(static_cast<double>(fit.fiber) / static_cast<double>(cen.order)) /
                   std::log(static_cast<double>(F.q()));
    fit.target = static_cast<double>(cen.n) / fit.order;
    return fit;
}

} // namespace glnq

#endif
