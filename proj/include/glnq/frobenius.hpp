#ifndef GLNQ_FROBENIUS_HPP
#define GLNQ_FROBENIUS_HPP

// Frobenius sums S(c) = sum_chi chi(c)/chi(1) and commutator fibers
// |G| S(c), by type; the closed forms for central and primary semisimple
// partial sums; and an audit that lines them up against the oracle.

#include <glnq/class_combinatorics.hpp>
#include <glnq/class_label.hpp>
#include <glnq/cyclotomic.hpp>
#include <glnq/finite_field.hpp>
#include <glnq/green_characters.hpp>
#include <glnq/numeric.hpp>
#include <glnq/oracle.hpp>
#include <glnq/partitions.hpp>

#include <json.hpp>

#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace glnq {

struct TypeSum {
    TypeLabel type;
    Rational value;
};

struct FrobeniusReport {
    int n = 0;
    long q = 0;
    std::string class_text;
    std::vector<TypeSum> types;
    Rational total;
    Integer fiber;
    std::string method;

    nlohmann::json to_json() const
    {
        nlohmann::json types_json = nlohmann::json::array();
        for (const auto& t : types)
            types_json.push_back({{"type", t.type.to_string()}, {"value", to_string(t.value)}});
        return {{"n", n},           {"q", q},        {"class", class_text},
                {"types", types_json}, {"total", to_string(total)}, {"fiber", fiber.get_str()},
                {"method", method}};
    }
};

/// Every split semisimple class of GL_n(F_q), i.e. every multiset of n
/// nonzero eigenvalues, in increasing order of (a_1, n_1, a_2, ...).
inline std::vector<SplitSemisimpleClass> split_semisimple_classes(const Field& F, int n)
{
    std::vector<SplitSemisimpleClass> out;
    std::vector<std::pair<Elem, int>> cur;
    std::function<void(Elem, int)> rec = [&](Elem from, int remaining) {
        if (remaining == 0) {
            out.push_back(make_split_semisimple(F, cur));
            return;
        }
        for (Elem a = from; a < static_cast<Elem>(F.q()); ++a)
            for (int k = remaining; k >= 1; --k) {
                cur.emplace_back(a, k);
                rec(a + 1, remaining - k);
                cur.pop_back();
            }
    };
    rec(1, n);
    return out;
}

namespace detail {

inline unsigned worker_count(unsigned threads, std::size_t jobs)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
}

// Runs job(i) for i in [0, count) on a small pool; each worker calls
// make_state() once.
template <class State, class MakeState, class Job>
void parallel_for(std::size_t count, unsigned threads, MakeState&& make_state, Job&& job)
{
    threads = worker_count(threads, count);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                State state = make_state();
                for (std::size_t i; (i = next++) < count;)
                    job(state, i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool)
        th.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace detail

/// S(c) by type via Green's character values.
inline FrobeniusReport frobenius_sum(const Field& F, const SplitSemisimpleClass& c, unsigned threads = 0)
{
    const auto types = enumerate_types(c.n);
    std::vector<Rational> values(types.size());
    detail::parallel_for<SemisimpleEvaluator>(
        types.size(), threads, [&] { return SemisimpleEvaluator(F, c); },
        [&](SemisimpleEvaluator& ev, std::size_t i) {
            GroupRingSum acc(F.q() - 1);
            const Rational inv_deg = 1 / Rational(degree(types[i], F.q()));
            for_each_dual_class(F.q(), types[i], [&](const DualClass& e) { acc.add_scaled(ev.value_ring(e), inv_deg); });
            CycValue v = acc.value();
            if (!v.is_rational())
                throw std::logic_error("partial Frobenius sum over type " + types[i].to_string() +
                                       " is not rational: " + v.to_string());
            values[i] = v.to_rational();
        });

    FrobeniusReport r;
    r.n = c.n;
    r.q = F.q();
    r.class_text = c.label(F).to_string(F);
    r.method = "machinery";
    r.total = 0;
    for (std::size_t i = 0; i < types.size(); ++i) {
        r.types.push_back({types[i], values[i]});
        r.total += values[i];
    }
    Rational fiber = r.total * Rational(gl_order(c.n, F.q()));
    if (!is_integer(fiber) || fiber < 0)
        throw std::logic_error("fiber |G| S(c) = " + to_string(fiber) + " is not a non-negative integer");
    r.fiber = fiber.get_num();
    return r;
}

inline Integer fiber_size_via_characters(const Field& F, const SplitSemisimpleClass& c, unsigned threads = 0)
{
    return frobenius_sum(F, c, threads).fiber;
}

/// The closed form for the partial sum over the primary type ((lambda), (s)),
/// evaluated as stated (requires s | n_i for every block):
///   (n/s)!/prod (n_i/s)! * prod phi_{n_i}(q)/phi_n(q) * (1/s) sum_{r | id_s(prod a_i^{n_i/s})} mu(s/r)(q^r-1)
inline Rational closed_form_primary_semisimple(const Field& F, const Partition& lambda, int s,
                                               const SplitSemisimpleClass& c)
{
    if (s < 1 || lambda.size() * s != c.n)
        throw std::invalid_argument("closed form: s|lambda| must equal n");
    Integer multinomial = factorial(c.n / s);
    Rational phis = 1;
    Elem prod = 1;
    for (auto [a, k] : c.blocks) {
        if (k % s != 0)
            throw std::invalid_argument("closed form: s must divide every multiplicity n_i");
        multinomial /= factorial(k / s);
        phis *= phi(k, F.q());
        prod = F.mul(prod, F.pow(a, k / s));
    }
    phis /= phi(c.n, F.q());
    Rational root = make_rational(mobius_root_sum(F, s, prod), s);
    return Rational(multinomial) * phis * root;
}

/// S_{type}(xi) = sum over dual classes e of the type of prod_g theta^{k_g |lambda_g|}(xi).
inline Rational central_partial_sum(const Field& F, const TypeLabel& t, Elem xi)
{
    const long m = F.q() - 1;
    const long j = F.dlog(xi);
    std::vector<long> hist(static_cast<std::size_t>(m), 0);
    for_each_dual_class(F.q(), t, [&](const DualClass& e) {
        long ex = 0;
        for (std::size_t i = 0; i < e.simplices.size(); ++i)
            ex += e.simplices[i].root % m * t.slots()[i].second.size();
        ++hist[static_cast<std::size_t>(ex % m * j % m)];
    });
    GroupRingSum acc(m);
    for (long k = 0; k < m; ++k)
        acc.add(k, Rational(hist[static_cast<std::size_t>(k)]));
    CycValue v = acc.value();
    if (!v.is_rational())
        throw std::logic_error("central partial sum is not rational for type " + t.to_string());
    return v.to_rational();
}

/// prod_i (1/s_i) sum_{r | id_{s_i}(xi^{|lambda_i|})} mu(s_i/r)(q^r - 1), valid for distinct types.
inline Rational central_partial_sum_mobius(const Field& F, const TypeLabel& t, Elem xi)
{
    if (!t.is_distinct())
        throw std::invalid_argument("Mobius product applies to distinct types only");
    Rational r = 1;
    for (const auto& [s, lam] : t.slots())
        r *= make_rational(mobius_root_sum(F, s, F.pow(xi, lam.size())), s);
    return r;
}

/// p(d) * sum over partitions rho of n/d of prod 1/tau.
inline Rational central_leading_prediction(int n, int d)
{
    if (d < 1 || n % d != 0)
        throw std::invalid_argument("leading prediction: ord(xi) must divide n");
    Rational inner = 0;
    for (const auto& rho : enumerate_partitions(n / d)) {
        Rational term = 1;
        for (int tau : rho.parts())
            term /= tau;
        inner += term;
    }
    return Rational(static_cast<long>(partition_number(d))) * inner;
}

struct CentralTotal {
    Rational total;
    Rational predicted_coefficient;
    int order = 0;
    /// total / q^{n/ord(xi)}
    Rational scaled;
    std::vector<TypeSum> types;
};

inline CentralTotal central_total_and_leading(const Field& F, int n, Elem xi)
{
    const int d = F.order(xi);
    if (n % d != 0)
        throw std::invalid_argument("central total: ord(xi) = " + std::to_string(d) + " does not divide n");
    CentralTotal out;
    out.order = d;
    out.total = 0;
    for (const auto& t : enumerate_types(n)) {
        Rational v = central_partial_sum(F, t, xi);
        out.types.push_back({t, v});
        out.total += v;
    }
    out.predicted_coefficient = central_leading_prediction(n, d);
    out.scaled = out.total / Rational(integer_pow(F.q(), static_cast<unsigned long>(n / d)));
    return out;
}

/// S(c) for split regular semisimple c using only rho = {1^n} and types
/// whose simplices all have degree 1:
///   I_e(c) = prod_i dim(lambda_i)/|lambda_i|! * sum_{sigma in S_n} prod_p theta^{k_p}(a_{sigma(p)}).
inline Rational regular_semisimple_sum(const Field& F, const SplitSemisimpleClass& c)
{
    if (!c.is_regular())
        throw std::invalid_argument("regular_semisimple_sum: eigenvalues must be distinct");
    const long m = F.q() - 1;
    std::vector<detail::TaggedPart> cls;
    for (auto [a, k] : c.blocks)
        cls.push_back({1, F.dlog(a)});
    GroupRingSum acc(m);
    for (const auto& t : enumerate_types(c.n)) {
        bool linear = true;
        Rational coeff = 1;
        for (const auto& [s, lam] : t.slots()) {
            if (s != 1)
                linear = false;
            else
                coeff *= Rational(sn_character(lam, Partition::rectangle(1, lam.size()))) /
                         Rational(factorial(lam.size()));
        }
        if (!linear)
            continue;
        coeff /= Rational(degree(t, F.q()));
        for_each_dual_class(F.q(), t, [&](const DualClass& e) {
            std::vector<detail::TaggedPart> dual;
            for (std::size_t i = 0; i < e.simplices.size(); ++i)
                for (int r = 0; r < t.slots()[i].second.size(); ++r)
                    dual.push_back({1, e.simplices[i].root % m});
            auto hist = detail::bijection_histogram(dual, cls, m);
            for (long k = 0; k < m; ++k)
                if (hist[static_cast<std::size_t>(k)])
                    acc.add(k, coeff * Rational(hist[static_cast<std::size_t>(k)]));
        });
    }
    CycValue v = acc.value();
    if (!v.is_rational())
        throw std::logic_error("regular semisimple sum is not rational");
    return v.to_rational();
}

/// Split regular semisimple classes of SL_n(F_q).
inline std::vector<SplitSemisimpleClass> split_regular_sl_classes(const Field& F, int n)
{
    std::vector<SplitSemisimpleClass> out;
    for (auto& c : split_semisimple_classes(F, n))
        if (c.is_regular() && c.determinant(F) == 1)
            out.push_back(std::move(c));
    return out;
}

struct AuditRow {
    std::string class_text;
    std::string type;
    Rational machinery;
    std::optional<Rational> closed_form;
    std::optional<Integer> oracle_fiber;
    std::optional<Integer> machinery_fiber;
    bool closed_form_match = false;
    bool oracle_match = false;
};

/// S(xi) for central xi next to the predicted leading coefficient of S(xi)/q^{n/ord(xi)}.
struct CentralLeadingRow {
    std::string xi;
    int order = 0;
    Rational total;
    Rational scaled;
    Rational predicted;
};

struct AuditReport {
    int n = 0;
    long q = 0;
    std::vector<AuditRow> rows;
    std::vector<CentralLeadingRow> central;
    /// Classes whose machinery fiber disagrees with the oracle.
    int oracle_mismatches = 0;
    int closed_form_deviations = 0;
    bool oracle_available = false;
    std::string oracle_note;

    nlohmann::json to_json() const
    {
        nlohmann::json rows_json = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row = {{"class", r.class_text},
                                  {"type", r.type},
                                  {"machinery", to_string(r.machinery)}};
            row["machinery_fiber"] =
                r.machinery_fiber ? nlohmann::json(r.machinery_fiber->get_str()) : nlohmann::json(nullptr);
            row["closed_form"] = r.closed_form ? nlohmann::json(to_string(*r.closed_form)) : nlohmann::json(nullptr);
            row["closed_form_match"] = r.closed_form ? nlohmann::json(r.closed_form_match) : nlohmann::json(nullptr);
            row["oracle_fiber"] = r.oracle_fiber ? nlohmann::json(r.oracle_fiber->get_str()) : nlohmann::json(nullptr);
            row["oracle_match"] = r.oracle_fiber ? nlohmann::json(r.oracle_match) : nlohmann::json(nullptr);
            rows_json.push_back(row);
        }
        nlohmann::json central_json = nlohmann::json::array();
        for (const auto& c : central)
            central_json.push_back({{"xi", c.xi},
                                    {"order", c.order},
                                    {"S", to_string(c.total)},
                                    {"scaled", to_string(c.scaled)},
                                    {"predicted_leading", to_string(c.predicted)}});
        return {{"n", n},
                {"q", q},
                {"rows", rows_json},
                {"central_leading", central_json},
                {"oracle_available", oracle_available},
                {"oracle_note", oracle_note},
                {"oracle_mismatches", oracle_mismatches},
                {"closed_form_deviations", closed_form_deviations}};
    }
};

/// For every split semisimple class: one "total" row (machinery fiber vs
/// oracle fiber), then one row per primary type ((lambda), (s)) with s | n_i,
/// comparing the machinery partial sum against the closed form.
inline AuditReport claims_audit(const Field& F, int n, const GroupCensus* cen, unsigned threads = 0)
{
    AuditReport rep;
    rep.n = n;
    rep.q = F.q();
    rep.oracle_available = cen != nullptr;
    for (const auto& c : split_semisimple_classes(F, n)) {
        auto fr = frobenius_sum(F, c, threads);
        AuditRow total;
        total.class_text = fr.class_text;
        total.type = "total";
        total.machinery = fr.total;
        total.machinery_fiber = fr.fiber;
        if (cen) {
            Integer oracle = Integer(std::to_string(fiber_count(*cen, c.label(F), threads)));
            total.oracle_fiber = oracle;
            total.oracle_match = oracle == fr.fiber;
            if (!total.oracle_match)
                ++rep.oracle_mismatches;
        }
        rep.rows.push_back(total);

        for (const auto& ts : fr.types) {
            const auto& slots = ts.type.slots();
            if (slots.size() != 1)
                continue;
            const int s = slots[0].first;
            bool divides = true;
            for (auto [a, k] : c.blocks)
                if (k % s != 0)
                    divides = false;
            AuditRow row;
            row.class_text = fr.class_text;
            row.type = ts.type.to_string();
            row.machinery = ts.value;
            if (divides) {
                row.closed_form = closed_form_primary_semisimple(F, slots[0].second, s, c);
                row.closed_form_match = *row.closed_form == ts.value;
                if (!row.closed_form_match)
                    ++rep.closed_form_deviations;
            }
            rep.rows.push_back(row);
        }
    }
    for (Elem xi = 1; xi < static_cast<Elem>(F.q()); ++xi) {
        if (n % F.order(xi) != 0)
            continue;
        auto ct = central_total_and_leading(F, n, xi);
        rep.central.push_back({F.format(xi), ct.order, ct.total, ct.scaled, ct.predicted_coefficient});
    }
    return rep;
}

} // namespace glnq

#endif
