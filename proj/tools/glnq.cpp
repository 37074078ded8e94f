// glnq: characters, commutator fibers and the brute-force oracle for GL_n(F_q).

#include <glnq/glnq.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace glnq;
using nlohmann::json;

enum Exit { ok = 0, usage = 1, invariant = 2, cap = 3 };

struct Common {
    std::string format = "text";
    std::string out;
    std::uint64_t cap = 0;
    unsigned threads = 0;
    std::uint64_t seed = 20240601;
};

std::uint64_t effective_cap(const Common& c) { return c.cap ? c.cap : element_cap_from_env(); }

void emit(const Common& c, const std::string& text)
{
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f)
        throw std::runtime_error("cannot open " + c.out);
    f << text;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string r = "\"";
    for (char ch : s) {
        if (ch == '"')
            r += '"';
        r += ch;
    }
    return r + "\"";
}

std::string csv_row(const std::vector<std::string>& cells)
{
    std::string r;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            r += ',';
        r += csv_field(cells[i]);
    }
    return r + "\n";
}

// ratio columns: 12 significant digits
std::string sig12(const Rational& r)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", to_double(r));
    return buf;
}

std::string pad(std::string s, std::size_t w)
{
    if (s.size() < w)
        s.append(w - s.size(), ' ');
    return s;
}

std::string table(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i)
                width.push_back(0);
            width[i] = std::max(width[i], r[i].size());
        }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i)
            line += i + 1 == r.size() ? r[i] : pad(r[i], width[i] + 2);
        out += line + "\n";
    }
    return out;
}

std::string csv_table(const std::vector<std::vector<std::string>>& rows)
{
    std::string out;
    for (const auto& r : rows)
        out += csv_row(r);
    return out;
}

void check_q(long q)
{
    if (!is_prime_power(q))
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
}

void check_n(int n)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
}

// ---- classes ----

int run_classes(const Common& c, int n, long q, bool oracle)
{
    check_n(n);
    check_q(q);
    const Field& F = *shared_field(q);
    auto classes = enumerate_conj_classes(F, n);
    auto duals = enumerate_dual_classes(n, q);

    std::optional<GroupCensus> cen;
    bool pass = true;
    std::vector<std::string> notes;
    if (oracle) {
        cen = census(F, n, effective_cap(c), c.threads);
        if (cen->classes.size() != classes.size()) {
            pass = false;
            notes.push_back("oracle found " + std::to_string(cen->classes.size()) + " classes, enumeration " +
                            std::to_string(classes.size()));
        }
        for (const auto& lab : classes)
            if (cen->index_of(lab) < 0) {
                pass = false;
                notes.push_back("class " + lab.to_string(F) + " missing from the oracle");
            }
        std::uint64_t total = 0;
        for (const auto& k : cen->classes) {
            total += k.size;
            if (k.size * k.centralizer != cen->order) {
                pass = false;
                notes.push_back("class equation fails at " + k.label.to_string(F));
            }
        }
        if (total != cen->order) {
            pass = false;
            notes.push_back("class sizes sum to " + std::to_string(total));
        }
    }
    if (duals.size() != classes.size()) {
        pass = false;
        notes.push_back("dual classes: " + std::to_string(duals.size()));
    }
    Integer sq = 0;
    for (const auto& e : duals) {
        Integer d = degree(e, q);
        sq += d * d;
    }
    if (sq != gl_order(n, q)) {
        pass = false;
        notes.push_back("sum of squared degrees " + sq.get_str() + " != |G|");
    }

    auto size_of = [&](const ConjClassLabel& lab, bool centralizer) -> std::string {
        if (!cen)
            return "";
        int i = cen->index_of(lab);
        if (i < 0)
            return "";
        const auto& k = cen->classes[static_cast<std::size_t>(i)];
        return std::to_string(centralizer ? k.centralizer : k.size);
    };

    std::string out;
    if (c.format == "json") {
        json j;
        j["n"] = n;
        j["q"] = q;
        j["order"] = gl_order(n, q).get_str();
        j["class_count"] = classes.size();
        j["dual_class_count"] = duals.size();
        json cj = json::array();
        for (const auto& lab : classes) {
            json row = {{"class", lab.to_string(F)}};
            if (cen) {
                row["size"] = size_of(lab, false);
                row["centralizer"] = size_of(lab, true);
            }
            cj.push_back(row);
        }
        j["classes"] = cj;
        json dj = json::array();
        for (const auto& e : duals)
            dj.push_back({{"dual_class", e.to_string()}, {"degree", degree(e, q).get_str()}});
        j["dual_classes"] = dj;
        j["check"] = pass ? "PASS" : "FAIL";
        j["oracle"] = oracle;
        j["notes"] = notes;
        out = j.dump(2) + "\n";
    } else if (c.format == "csv") {
        std::vector<std::vector<std::string>> rows{{"kind", "label", "size", "centralizer", "degree"}};
        for (const auto& lab : classes)
            rows.push_back({"class", lab.to_string(F), size_of(lab, false), size_of(lab, true), ""});
        for (const auto& e : duals)
            rows.push_back({"dual", e.to_string(), "", "", degree(e, q).get_str()});
        out = csv_table(rows);
    } else {
        std::ostringstream s;
        s << "GL_" << n << "(F_" << q << "): " << classes.size() << " classes, " << duals.size()
          << " dual classes\n";
        std::vector<std::vector<std::string>> rows{{"class", "size", "centralizer"}};
        for (const auto& lab : classes)
            rows.push_back({lab.to_string(F), size_of(lab, false), size_of(lab, true)});
        s << table(rows);
        for (const auto& note : notes)
            s << "note: " << note << "\n";
        s << "check " << (pass ? "PASS" : "FAIL") << (oracle ? " (oracle)" : "") << "\n";
        out = s.str();
    }
    emit(c, out);
    return pass ? ok : invariant;
}

// ---- fiber ----

int run_fiber(const Common& c, int n, long q, const std::string& spec, const std::string& method)
{
    check_n(n);
    check_q(q);
    const Field& F = *shared_field(q);
    auto cls = parse_class_spec(F, n, spec);
    const bool green = method == "green" || method == "both";
    const bool oracle = method == "oracle" || method == "both";
    if (green && !cls.split)
        throw std::invalid_argument("method green needs a split semisimple class; " + cls.label.to_string(F) +
                                    " is not");

    std::optional<FrobeniusReport> fr;
    std::optional<std::uint64_t> of;
    if (green)
        fr = frobenius_sum(F, *cls.split, c.threads);
    if (oracle) {
        auto cen = census(F, n, effective_cap(c), c.threads);
        of = fiber_count(cen, cls.label, c.threads);
    }
    const bool both = fr && of;
    const bool match = both && fr->fiber == Integer(std::to_string(*of));

    std::string out;
    if (c.format == "json") {
        json j = {{"n", n}, {"q", q}, {"class", cls.label.to_string(F)}, {"method", method}};
        if (fr) {
            j["green_fiber"] = fr->fiber.get_str();
            j["frobenius_sum"] = to_string(fr->total);
            json types = json::array();
            for (const auto& t : fr->types)
                types.push_back({{"type", t.type.to_string()}, {"value", to_string(t.value)}});
            j["types"] = types;
        }
        if (of)
            j["oracle_fiber"] = std::to_string(*of);
        if (both)
            j["match"] = match;
        out = j.dump(2) + "\n";
    } else if (c.format == "csv") {
        std::vector<std::vector<std::string>> rows{{"class", "green_fiber", "oracle_fiber", "match"}};
        rows.push_back({cls.label.to_string(F), fr ? fr->fiber.get_str() : "", of ? std::to_string(*of) : "",
                        both ? (match ? "MATCH" : "MISMATCH") : ""});
        out = csv_table(rows);
    } else {
        std::ostringstream s;
        s << "class " << cls.label.to_string(F) << " in GL_" << n << "(F_" << q << ")\n";
        if (fr)
            s << "green fiber  " << fr->fiber.get_str() << "  (S = " << to_string(fr->total) << ")\n";
        if (of)
            s << "oracle fiber " << *of << "\n";
        if (both)
            s << (match ? "MATCH" : "MISMATCH") << "\n";
        out = s.str();
    }
    emit(c, out);
    return both && !match ? invariant : ok;
}

// ---- sweep ----

std::vector<long> parse_q_list(const std::string& text)
{
    std::vector<long> qs;
    for (const auto& item : split_list(text, ',')) {
        std::size_t used = 0;
        long q = std::stol(item, &used);
        if (used != item.size())
            throw std::invalid_argument("bad q in list: " + item);
        check_q(q);
        qs.push_back(q);
    }
    return qs;
}

int run_sweep(const Common& c, int n, const std::string& qlist, const std::string& target)
{
    check_n(n);
    auto qs = parse_q_list(qlist);
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> warnings;
    json j = {{"n", n}, {"target", target}};
    json jrows = json::array();

    if (target == "regular") {
        rows.push_back({"q", "classes", "min_S", "max_S", "max|S-(q-1)|", "max|S-(q-1)|/q"});
        Rational constant = 0;
        for (long q : qs) {
            const Field& F = *shared_field(q);
            auto cls = split_regular_sl_classes(F, n);
            if (cls.empty()) {
                warnings.push_back("q = " + std::to_string(q) + ": no split regular semisimple class in SL_" +
                                   std::to_string(n) + ", skipped");
                continue;
            }
            std::optional<Rational> lo, hi, dev;
            json per = json::array();
            for (const auto& k : cls) {
                Rational s = regular_semisimple_sum(F, k);
                Rational d = abs(s - Rational(q - 1));
                if (!lo || s < *lo)
                    lo = s;
                if (!hi || s > *hi)
                    hi = s;
                if (!dev || d > *dev)
                    dev = d;
                per.push_back({{"class", k.label(F).to_string(F)}, {"S", to_string(s)}});
            }
            if (*dev > constant)
                constant = *dev;
            Rational ratio = *dev / Rational(q);
            rows.push_back({std::to_string(q), std::to_string(cls.size()), to_string(*lo), to_string(*hi),
                            to_string(*dev), sig12(ratio)});
            jrows.push_back({{"q", q},
                             {"classes", per},
                             {"max_deviation", to_string(*dev)},
                             {"deviation_over_q", sig12(ratio)}});
        }
        j["constant"] = to_string(constant);
        warnings.push_back("bound constant C = " + to_string(constant));
    } else if (target.rfind("central:", 0) == 0) {
        const int d = std::stoi(target.substr(8));
        if (d < 1 || n % d != 0)
            throw std::invalid_argument("central target: ORD must divide n");
        rows.push_back({"q", "xi", "S", "S/q^" + std::to_string(n / d), "predicted"});
        for (long q : qs) {
            if ((q - 1) % d != 0) {
                warnings.push_back("q = " + std::to_string(q) + ": no element of order " + std::to_string(d) +
                                   ", skipped");
                continue;
            }
            const Field& F = *shared_field(q);
            Elem xi = F.gen_pow((q - 1) / d);
            auto ct = central_total_and_leading(F, n, xi);
            rows.push_back({std::to_string(q), F.format(xi), to_string(ct.total), sig12(ct.scaled),
                            to_string(ct.predicted_coefficient)});
            jrows.push_back({{"q", q},
                             {"xi", F.format(xi)},
                             {"S", to_string(ct.total)},
                             {"scaled", sig12(ct.scaled)},
                             {"predicted", to_string(ct.predicted_coefficient)}});
        }
    } else {
        throw std::invalid_argument("unknown sweep target: " + target);
    }
    j["rows"] = jrows;
    j["notes"] = warnings;

    for (const auto& w : warnings)
        if (w.find("skipped") != std::string::npos)
            std::cerr << "warning: " << w << "\n";
    std::string out;
    if (c.format == "json")
        out = j.dump(2) + "\n";
    else if (c.format == "csv")
        out = csv_table(rows);
    else {
        out = table(rows);
        for (const auto& w : warnings)
            if (w.find("skipped") == std::string::npos)
                out += w + "\n";
    }
    emit(c, out);
    return ok;
}

// ---- audit ----

int run_audit(const Common& c, int n, long q)
{
    check_n(n);
    check_q(q);
    const Field& F = *shared_field(q);
    auto cen = census(F, n, effective_cap(c), c.threads);
    auto rep = claims_audit(F, n, &cen, c.threads);

    auto opt = [](const auto& o) -> std::string { return o ? to_string(*o) : "-"; };
    std::vector<std::vector<std::string>> rows{
        {"class", "type", "machinery", "machinery_fiber", "closed_form", "oracle_fiber", "status"}};
    for (const auto& r : rep.rows) {
        std::string status;
        if (r.oracle_fiber)
            status = r.oracle_match ? "MATCH" : "MISMATCH";
        else if (r.closed_form)
            status = r.closed_form_match ? "AGREES" : "DEVIATES";
        else
            status = "-";
        rows.push_back({r.class_text, r.type, to_string(r.machinery), opt(r.machinery_fiber), opt(r.closed_form),
                        opt(r.oracle_fiber), status});
    }
    std::string out;
    if (c.format == "json")
        out = rep.to_json().dump(2) + "\n";
    else if (c.format == "csv")
        out = csv_table(rows);
    else {
        std::ostringstream s;
        s << "claims audit GL_" << n << "(F_" << q << ")\n" << table(rows);
        std::vector<std::vector<std::string>> lead{{"xi", "ord", "S", "S/q^(n/ord)", "predicted_leading"}};
        for (const auto& r : rep.central)
            lead.push_back({r.xi, std::to_string(r.order), to_string(r.total), sig12(r.scaled), to_string(r.predicted)});
        s << "central elements\n" << table(lead);
        s << "oracle mismatches: " << rep.oracle_mismatches << "\n";
        s << "closed-form deviations (reported, not failed): " << rep.closed_form_deviations << "\n";
        out = s.str();
    }
    emit(c, out);
    return rep.oracle_mismatches == 0 ? ok : invariant;
}

// ---- geometry ----

void partition_tuples_of(const std::vector<int>& sizes, std::size_t i, std::vector<Partition>& cur,
                         std::vector<std::vector<Partition>>& out)
{
    if (i == sizes.size()) {
        out.push_back(cur);
        return;
    }
    for (const auto& p : enumerate_partitions(sizes[i])) {
        cur.push_back(p);
        partition_tuples_of(sizes, i + 1, cur, out);
        cur.pop_back();
    }
}

std::string pattern_text(const std::vector<int>& p)
{
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

int run_geometry(const Common& c, int n, int m, long q, int samples)
{
    check_n(n);
    if (m < 1 || n % m != 0)
        throw std::invalid_argument("m must divide n");
    bool pass = true;
    json j = {{"n", n}, {"m", m}, {"l", n / m}};
    std::vector<std::vector<std::string>> rows{
        {"field", "pattern", "commutator", "centralizer_dim", "orbit", "stabilizer", "union", "extra"}};

    // exact cyclotomic witnesses
    auto G = cyclotomic_geom_field(n);
    json witnesses = json::array();
    int jordan_checked = 0, jordan_failed = 0;
    for (const auto& pattern : compositions(m)) {
        bool comm = true;
        try {
            build_tau(G, m, pattern_b(pattern, default_betas(G, static_cast<int>(pattern.size()))));
        } catch (const std::logic_error&) {
            comm = false;
        }
        pass = pass && comm;
        auto d = dimension_ledger(n, m, pattern);
        rows.push_back({G.description, pattern_text(pattern), comm ? "PASS" : "FAIL", std::to_string(d.centralizer),
                        std::to_string(d.orbit), std::to_string(d.stabilizer), std::to_string(d.union_dim), ""});
        json w = d.to_json();
        w["field"] = G.description;
        w["pattern"] = pattern;
        w["commutator_identity"] = comm;

        std::vector<std::vector<Partition>> tuples;
        std::vector<Partition> cur;
        partition_tuples_of(pattern, 0, cur, tuples);
        json jw = json::array();
        for (const auto& lam : tuples) {
            auto rep = jordan_witness(G, lam, default_betas(G, static_cast<int>(lam.size())));
            ++jordan_checked;
            if (!rep.passed())
                ++jordan_failed;
            json e = rep.to_json();
            std::vector<std::string> names;
            for (const auto& p : lam)
                names.push_back(p.to_string());
            e["partitions"] = names;
            jw.push_back(e);
        }
        w["jordan_witnesses"] = jw;
        witnesses.push_back(w);
    }
    pass = pass && jordan_failed == 0;
    auto top = dimension_ledger(n, m, std::vector<int>(static_cast<std::size_t>(m), 1));

    // finite-field checks
    std::vector<std::string> notes;
    if (q) {
        check_q(q);
        const Field& F = *shared_field(q);
        auto H = finite_geom_field(F, n);
        for (const auto& pattern : compositions(m)) {
            std::vector<Elem> betas;
            try {
                betas = default_betas(H, m, static_cast<int>(pattern.size()));
            } catch (const std::invalid_argument& e) {
                notes.push_back("pattern " + pattern_text(pattern) + ": " + e.what());
                continue;
            }
            bool comm = true;
            std::optional<TauWitness<Elem>> w;
            try {
                w = build_tau(H, m, pattern_b(pattern, betas));
            } catch (const std::logic_error&) {
                comm = false;
            }
            pass = pass && comm;
            json jw = {{"field", H.description}, {"pattern", pattern}, {"commutator_identity", comm}};
            std::string extra;
            if (w) {
                auto closure = commutator_closure_check(H, *w, samples, c.seed);
                pass = pass && closure.passed();
                jw["closure"] = closure.to_json();
                extra = "closure " + std::string(closure.passed() ? "PASS" : "FAIL");
                if (closure.exhaustive)
                    extra += " (exhaustive, |C(tau)| = " + std::to_string(closure.centralizer_size) + ")";
                if (gl_order(n, q) <= Integer(std::to_string(std::min<std::uint64_t>(effective_cap(c), 2'000'000)))) {
                    auto cc = centralizer_count(H, *w, effective_cap(c));
                    pass = pass && cc.match;
                    jw["centralizer_count"] = cc.counted;
                    jw["centralizer_predicted"] = cc.predicted.get_str();
                    extra += ", |C(tau)| " + std::to_string(cc.counted) + (cc.match ? " = " : " != ") +
                             cc.predicted.get_str();
                }
            }
            auto d = dimension_ledger(n, m, pattern);
            rows.push_back({H.description, pattern_text(pattern), comm ? "PASS" : "FAIL",
                            std::to_string(d.centralizer), std::to_string(d.orbit), std::to_string(d.stabilizer),
                            std::to_string(d.union_dim), extra});
            witnesses.push_back(jw);
        }
    }

    j["witnesses"] = witnesses;
    j["fiber_dim"] = top.fiber;
    j["maximizing_k"] = top.maximizing_k;
    j["jordan_witnesses_checked"] = jordan_checked;
    j["jordan_witnesses_failed"] = jordan_failed;
    j["seed"] = c.seed;
    j["samples"] = samples;
    j["notes"] = notes;
    j["passed"] = pass;

    std::string out;
    if (c.format == "json")
        out = j.dump(2) + "\n";
    else if (c.format == "csv")
        out = csv_table(rows);
    else {
        std::ostringstream s;
        s << "geometry n=" << n << " m=" << m << " l=" << n / m << " (seed " << c.seed << ", " << samples
          << " samples)\n";
        s << table(rows);
        s << "jordan witnesses: " << jordan_checked << " checked, " << jordan_failed << " failed\n";
        for (const auto& note : notes)
            s << "note: " << note << "\n";
        s << "fiber dim = " << top.fiber << " (n^2 + m, union maximal at k = " << top.maximizing_k << ")\n";
        s << "commutator identity " << (pass ? "PASS" : "FAIL") << "\n";
        out = s.str();
    }
    emit(c, out);
    return pass ? ok : invariant;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Characters of GL_n(F_q), commutator fibers and a brute-force oracle"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", common.out, "write to FILE instead of stdout");
        sub->add_option("--cap", common.cap, "element cap for oracle commands (default GLNQ_CAP or 10^7)");
        sub->add_option("--threads", common.threads, "worker threads (0 = hardware)");
        sub->add_option("--seed", common.seed, "sampling seed");
    };

    int n = 0, m = 0, samples = 1000;
    long q = 0;
    bool oracle = false;
    std::string spec, method = "green", qlist, target;

    auto* classes = app.add_subcommand("classes", "list conjugacy classes and dual classes");
    classes->add_option("--n", n)->required();
    classes->add_option("--q", q)->required();
    classes->add_flag("--oracle", oracle, "cross-check against the brute-force census");
    add_common(classes);

    auto* fiber = app.add_subcommand("fiber", "commutator fiber over a class");
    fiber->add_option("--n", n)->required();
    fiber->add_option("--q", q)->required();
    fiber->add_option("--class", spec, "central:<elt> | diag:<e1,...> | poly:<coeffs>^[<parts>];...")->required();
    fiber->add_option("--method", method)->check(CLI::IsMember({"green", "oracle", "both"}));
    add_common(fiber);

    auto* sweep = app.add_subcommand("sweep", "Frobenius sums across several q");
    sweep->add_option("--n", n)->required();
    sweep->add_option("--q", qlist, "comma-separated list")->required();
    sweep->add_option("--target", target, "regular | central:ORD")->required();
    add_common(sweep);

    auto* audit = app.add_subcommand("audit", "machinery vs closed forms vs oracle");
    audit->add_option("--n", n)->required();
    audit->add_option("--q", q)->required();
    add_common(audit);

    auto* geometry = app.add_subcommand("geometry", "witnesses over the central fiber");
    geometry->add_option("--n", n)->required();
    geometry->add_option("--m", m)->required();
    geometry->add_option("--q", q, "also run finite-field checks (n must divide q - 1)");
    geometry->add_option("--samples", samples, "random samples for the closure check");
    add_common(geometry);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*classes)
            return run_classes(common, n, q, oracle);
        if (*fiber)
            return run_fiber(common, n, q, spec, method);
        if (*sweep)
            return run_sweep(common, n, qlist, target);
        if (*audit)
            return run_audit(common, n, q);
        if (*geometry)
            return run_geometry(common, n, m, q, samples);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return cap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return invariant;
    }
    return usage;
}
