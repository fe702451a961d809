#pragma once

// Report assembly for the command-line tool: per-n constant reports compared
// against closed forms, verification suites, and table/json/csv rendering.
// Requires nlohmann/json (vendored as json.hpp).

#include "koiso/closed_forms.hpp"
#include "koiso/obstruction_analysis.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

namespace koiso {

inline constexpr const char* kSchemaVersion = "1.0";

// ---------------------------------------------------------------------------
// Rational display

struct RationalFit {
    long long num = 0;
    long long den = 1;
    double error = 0.0;
    bool exact = false;  // |x - num/den| <= 1e-9

    [[nodiscard]] std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

/// Closest convergent of the continued fraction of x with denominator at
/// most max_den.
[[nodiscard]] inline RationalFit rational_fit(double x, long long max_den = 10000) {
    RationalFit best{static_cast<long long>(std::llround(x)), 1, 0.0, false};
    best.error = std::abs(x - static_cast<double>(best.num));
    long long h0 = 1, h1 = static_cast<long long>(std::floor(x));
    long long k0 = 0, k1 = 1;
    double frac = x - std::floor(x);
    for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
        const double inv = 1.0 / frac;
        const auto a = static_cast<long long>(std::floor(inv));
        frac = inv - static_cast<double>(a);
        const long long h2 = a * h1 + h0;
        const long long k2 = a * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1, h1 = h2, k0 = k1, k1 = k2;
        const double err = std::abs(x - static_cast<double>(h1) / static_cast<double>(k1));
        if (err < best.error) best = {h1, k1, err, false};
        if (err <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    best.exact = best.error <= 1e-9;
    return best;
}

// ---------------------------------------------------------------------------
// Constants report

struct ReportEntry {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double abs_deviation = 0.0;
    bool pass = false;
};

struct ConstantsReport {
    Family family;
    int m = 0;
    int dim_k = 0;
    int dim_m = 0;
    std::vector<ReportEntry> entries;
    double psi_coeff = 0.0;
    std::optional<RigidityVerdict> verdict;
    std::int64_t elapsed_ms = 0;
    std::uint64_t seed = 0;
    int probes = 0;
    double tolerance = 0.0;
    std::string error;  // non-empty if a computation step refused its input

    [[nodiscard]] bool pass() const {
        if (!error.empty() || !verdict) return false;
        return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.pass; });
    }
    [[nodiscard]] double max_deviation() const {
        double worst = 0.0;
        for (const auto& e : entries) worst = std::max(worst, e.abs_deviation);
        return worst;
    }
};

/// Names of every reported constant, in report order.  This order is also
/// the csv column order of the table command.
[[nodiscard]] inline const std::vector<std::string>& constant_names() {
    static const std::vector<std::string> names{
        "cas_g_defining", "cas_g_adjoint", "cas_k_defining", "cas_k_k",   "cas_k_m",       "cas_m_defining",
        "s_g_g",          "s_k_k",         "s_k_m",          "s_m_k",     "s_m_m",         "killing_g",
        "killing_k",      "norm_P",        "norm_Pmmm",      "norm_Pkkm", "kappa",         "lambda1",
        "lambda2",        "lambda3",       "lambda4",        "lambda",    "lambda_via_13", "psi_coeff",
        "eh_third_variation", "nu_third_variation"};
    return names;
}

/// Number of terms in one dim(m)^4 contraction for the family.
[[nodiscard]] inline double contraction_terms(const Family& f) {
    const double d = f.dim_m();
    return d * d * d * d;
}

[[nodiscard]] inline ConstantsReport build_constants_report(const Family& family, std::uint64_t seed, int probes,
                                                            double tolerance) {
    const auto start = std::chrono::steady_clock::now();
    ConstantsReport r;
    r.family = family;
    r.m = family.ambient();
    r.dim_k = family.dim_k();
    r.dim_m = family.dim_m();
    r.seed = seed;
    r.probes = probes;
    r.tolerance = tolerance;
    const ClosedForms cf = closed_forms(family);

    auto add = [&](const std::string& name, double computed, double expected) {
        const double dev = std::abs(computed - expected);
        r.entries.push_back({name, computed, expected, dev, dev <= tolerance});
    };
    try {
        const SymmetricPair pair = cartan_decomposition(family);
        const LieConstants ops = operator_constants(pair);
        const auto ops_entries = ops.entries();
        const auto cf_entries = cf.lie.entries();
        for (std::size_t i = 0; i < ops_entries.size(); ++i)
            add(ops_entries[i].first, ops_entries[i].second, cf_entries[i].second);
        add("killing_g", killing_form_ratio(pair.g_basis), cf.killing_g);
        add("killing_k", killing_form_ratio(pair.k_basis), cf.killing_k);

        const ObstructionConstants oc = extract_constants(pair, seed, probes, tolerance);
        add("norm_P", oc.norm_P, cf.norm_P);
        add("norm_Pmmm", oc.norm_Pmmm, cf.norm_Pmmm);
        add("norm_Pkkm", oc.norm_Pkkm, cf.norm_Pkkm);
        add("kappa", oc.kappa, cf.kappa);
        add("lambda1", oc.lambda1, cf.lambda1);
        add("lambda2", oc.lambda2, cf.lambda2);
        add("lambda3", oc.lambda3, cf.lambda3);
        add("lambda4", oc.lambda4, cf.lambda4);
        add("lambda", oc.lambda, cf.lambda);
        add("lambda_via_13", oc.lambda_via_13, cf.lambda);
        add("psi_coeff", oc.psi_coeff, cf.psi_coeff);
        // Third variations along a unit-P direction (P(h) = 1).
        add("eh_third_variation", eh_third_variation(oc.psi_coeff), eh_third_variation(cf.psi_coeff));
        add("nu_third_variation", nu_third_variation(oc.psi_coeff, pair.einstein_constant, pair.dim_M),
            nu_third_variation(cf.psi_coeff, pair.einstein_constant, pair.dim_M));
        r.psi_coeff = oc.psi_coeff;
        r.verdict = rigidity_verdict(family, oc.psi_coeff, tolerance);
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                       .count();
    return r;
}

// ---------------------------------------------------------------------------
// Verification suites

struct SuiteResult {
    std::string suite;
    Family family;
    double max_residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline std::string fmt(double v, int digits = 17) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

/// Runs `body`, converting a refusal into a failed suite.
inline SuiteResult run_suite(std::string name, const Family& f, double threshold,
                             const std::function<double(std::string&)>& body) {
    SuiteResult s{std::move(name), f, 0.0, threshold, false, {}};
    try {
        s.max_residual = body(s.detail);
        s.pass = s.max_residual <= threshold;
    } catch (const std::exception& e) {
        s.max_residual = std::numeric_limits<double>::infinity();
        s.detail = e.what();
    }
    return s;
}

}  // namespace detail

/// Every invariant suite for one family member.  Residuals are normalized so
/// that each compares against `tolerance`, except the criticality suite which
/// counts disagreements (threshold 0).
[[nodiscard]] inline std::vector<SuiteResult> run_verify_suites(const Family& f, std::uint64_t seed, int probes,
                                                                double tolerance) {
    std::vector<SuiteResult> out;
    const SymmetricPair pair = cartan_decomposition(f);
    const ClosedForms cf = closed_forms(f);
    const int m = pair.m;

    out.push_back(detail::run_suite("cartan_structure", f, tolerance, [&](std::string&) {
        return std::max({pair.k_basis.orthonormality_defect(), pair.m_basis.orthonormality_defect(),
                         pair.k_basis.su_membership_defect(), pair.m_basis.su_membership_defect(),
                         cross_orthogonality(pair), eigenspace_completeness(pair)});
    }));
    out.push_back(detail::run_suite("bracket_closure", f, tolerance,
                                    [&](std::string&) { return bracket_closure(pair).max(); }));
    out.push_back(detail::run_suite("anticommutator_inclusions", f, tolerance,
                                    [&](std::string&) { return anticommutator_inclusions(pair).max(); }));
    out.push_back(detail::run_suite("killing_ratios", f, tolerance, [&](std::string&) {
        return std::max(std::abs(killing_form_ratio(pair.g_basis) - cf.killing_g),
                        std::abs(killing_form_ratio(pair.k_basis) - cf.killing_k));
    }));

    LieConstants ops;
    out.push_back(detail::run_suite("casimir_sandwich_closed_forms", f, tolerance, [&](std::string&) {
        ops = operator_constants(pair);
        double worst = 0.0;
        const auto a = ops.entries();
        const auto b = cf.lie.entries();
        for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i].second - b[i].second));
        return worst;
    }));
    out.push_back(detail::run_suite("freudenthal_cross_check", f, tolerance, [&](std::string&) {
        const auto a = operator_constants(pair).entries();
        const auto b = freudenthal_constants(f).entries();
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i].second - b[i].second));
        return worst;
    }));

    SplitRng rng(seed ^ (static_cast<std::uint64_t>(f.n) << 32) ^ (f.tag == FamilyTag::AII ? 0x5bd1e995ULL : 0ULL));
    std::vector<MatrixC> zs;
    for (int i = 0; i < probes; ++i) zs.push_back(random_su(m, rng));

    out.push_back(detail::run_suite("sandwich_casimir_identity", f, tolerance, [&](std::string&) {
        double worst = 0.0;
        for (const auto& z : zs) {
            const MatrixC a = z + kI * random_su(m, rng);
            const std::vector<MatrixC> one{a};
            const double scale = a.norm();
            worst = std::max(worst, sandwich_casimir_identity_check(pair.g_basis, one) / scale);
            worst = std::max(worst, sandwich_casimir_identity_check(pair.k_basis, one) / scale);
        }
        return worst;
    }));
    out.push_back(detail::run_suite("aux_identities", f, tolerance, [&](std::string&) {
        const LieConstants c = operator_constants(pair);
        double worst = 0.0;
        for (const auto& z : zs) {
            const auto r = aux_identity_check(pair, c, z);
            worst = std::max(worst, std::max(r.residual1(), r.residual2()) / std::pow(z.norm(), 3));
        }
        return worst;
    }));

    const CubicKernel kernel(pair);
    out.push_back(detail::run_suite("r_relations", f, tolerance, [&](std::string&) {
        double worst = 0.0;
        for (const auto& z : zs) {
            const auto ev = kernel.evaluate(z);
            const double s = std::pow(z.norm(), 3);
            worst = std::max({worst, std::abs(2.0 * ev.R1 + ev.R2) / s, std::abs(ev.R1 - ev.R3 - ev.R4) / s});
        }
        return worst;
    }));
    out.push_back(detail::run_suite("norm_additivity", f, tolerance, [&](std::string&) {
        const auto nr = norm_restricted(pair, operator_constants(pair), 1.0);
        const double total = norm_P(m);
        return std::max({std::abs(nr.mmm_formula - nr.mmm_brute), std::abs(nr.kkm_formula - nr.kkm_brute),
                         std::abs(nr.mmm_brute + nr.kkm_brute - total)}) /
               total;
    }));
    out.push_back(detail::run_suite("constant_extraction", f, tolerance, [&](std::string& note) {
        const auto oc = extract_constants(pair, seed, probes, tolerance);
        note = "spread " + detail::fmt(oc.spread, 3);
        double worst = 0.0;
        const std::pair<double, double> checks[] = {{oc.kappa, cf.kappa},     {oc.lambda1, cf.lambda1},
                                                    {oc.lambda3, cf.lambda3}, {oc.lambda, cf.lambda},
                                                    {oc.lambda_via_13, cf.lambda}, {oc.psi_coeff, cf.psi_coeff}};
        for (const auto& [got, want] : checks)
            worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
        return worst;
    }));
    out.push_back(detail::run_suite("criticality_variety", f, 0.0, [&](std::string& note) {
        const OrthonormalBasis g = su_basis(m);
        std::vector<MatrixC> xs;
        for (int i = 0; i < 20 * probes; ++i) xs.push_back(random_su(m, rng));
        if (auto w = variety_witness(m)) {
            const MatrixC u = random_special_unitary(m, rng);
            xs.push_back(*w);
            xs.push_back(3.7 * *w);
            xs.push_back(u * *w * u.adjoint());
        } else if (!odd_m_spectral_argument(MatrixC::Zero(m, m))) {
            note = "odd m: zero matrix rejected";
            return 1.0;
        }
        int disagreements = 0, members = 0;
        for (const auto& x : xs) {
            const bool in_q = variety_membership(x);
            members += in_q ? 1 : 0;
            disagreements += in_q != criticality_check(x, g) ? 1 : 0;
        }
        note = std::to_string(xs.size()) + " probes, " + std::to_string(members) + " in variety";
        return static_cast<double>(disagreements);
    }));
    return out;
}

// ---------------------------------------------------------------------------
// Parallel map over independent tasks with ordered results

/// Worker count from KOISO_THREADS, else the hardware concurrency.
[[nodiscard]] inline unsigned worker_count() {
    if (const char* env = std::getenv("KOISO_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& task, unsigned threads) {
    std::vector<T> results(count);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                results[i] = task(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

/// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += csv_field(fields[i]);
    }
    return line + "\r\n";
}

inline nlohmann::json rational_json(double v) {
    const auto r = rational_fit(v);
    return {{"value", r.str()}, {"exact", r.exact}, {"error", r.error}};
}

inline std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

}  // namespace detail

[[nodiscard]] inline nlohmann::json verdict_json(const RigidityVerdict& v) {
    nlohmann::json w = nullptr;
    if (v.witness) {
        std::vector<double> diag;
        for (Eigen::Index a = 0; a < v.witness->rows(); ++a) diag.push_back((*v.witness)(a, a).imag());
        w = {{"form", "i*diag"}, {"diagonal", diag}};
    }
    return {{"verdict", std::string(to_string(v.verdict))},
            {"m", v.m},
            {"psi_coeff", v.psi_coeff},
            {"variety_trivial", v.variety_trivial},
            {"witness", w}};
}

[[nodiscard]] inline nlohmann::json constants_json(const ConstantsReport& r, bool with_timing = true) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"name", e.name},
                           {"computed", e.computed},
                           {"expected_closed_form", e.expected},
                           {"abs_deviation", e.abs_deviation},
                           {"rational", detail::rational_json(e.computed)},
                           {"status", e.pass ? "PASS" : "FAIL"}});
    nlohmann::json j{{"family", std::string(r.family.short_name())},
                     {"symmetric_pair", std::string(r.family.name())},
                     {"n", r.family.n},
                     {"m", r.m},
                     {"dim_k", r.dim_k},
                     {"dim_m", r.dim_m},
                     {"seed", r.seed},
                     {"probes", r.probes},
                     {"tolerance", r.tolerance},
                     {"entries", entries},
                     {"psi_coeff", r.psi_coeff},
                     {"verdict", r.verdict ? verdict_json(*r.verdict) : nlohmann::json(nullptr)},
                     {"status", r.pass() ? "PASS" : "FAIL"}};
    if (!r.error.empty()) j["error"] = r.error;
    if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

[[nodiscard]] inline std::string render_constants(const ConstantsReport& r, const std::string& format) {
    if (format == "json") {
        nlohmann::json j = constants_json(r);
        j["schema_version"] = kSchemaVersion;
        j["command"] = "constants";
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::string out = detail::csv_row(
            {"family", "n", "name", "computed", "expected_closed_form", "abs_deviation", "rational", "status"});
        for (const auto& e : r.entries)
            out += detail::csv_row({std::string(r.family.short_name()), std::to_string(r.family.n), e.name,
                                    detail::fmt(e.computed), detail::fmt(e.expected), detail::fmt(e.abs_deviation),
                                    rational_fit(e.computed).str(), e.pass ? "PASS" : "FAIL"});
        return out;
    }
    std::ostringstream os;
    os << "SU(" << r.m << ")/" << (r.family.tag == FamilyTag::AI ? "SO(" : "Sp(") << r.family.n << ")  ["
       << r.family.name() << ", n=" << r.family.n << ", dim k=" << r.dim_k << ", dim m=" << r.dim_m
       << ", seed=" << r.seed << ", probes=" << r.probes << "]\n";
    os << detail::pad("constant", 20) << detail::pad("computed", 24) << detail::pad("closed form", 24)
       << detail::pad("deviation", 12) << detail::pad("rational", 14) << "status\n";
    for (const auto& e : r.entries) {
        const auto q = rational_fit(e.computed);
        os << detail::pad(e.name, 20) << detail::pad(detail::fmt(e.computed, 15), 24)
           << detail::pad(detail::fmt(e.expected, 15), 24) << detail::pad(detail::fmt(e.abs_deviation, 3), 12)
           << detail::pad(q.exact ? q.str() : "~" + q.str(), 14) << (e.pass ? "PASS" : "FAIL") << "\n";
    }
    if (r.verdict) {
        os << "verdict: " << to_string(r.verdict->verdict) << " (m=" << r.m
           << (r.verdict->variety_trivial ? ", variety trivial" : ", variety has witness i*diag(+-1)/sqrt(m)")
           << ", psi coefficient " << detail::fmt(r.psi_coeff, 12) << ")\n";
    }
    if (!r.error.empty()) os << "error: " << r.error << "\n";
    os << "status: " << (r.pass() ? "PASS" : "FAIL") << "  (" << r.elapsed_ms << " ms)\n";
    return os.str();
}

/// Fixed csv columns of the table command.
[[nodiscard]] inline std::vector<std::string> table_columns() {
    std::vector<std::string> cols{"family", "n", "m", "dim_k", "dim_m"};
    for (const auto& name : constant_names()) cols.push_back(name);
    cols.insert(cols.end(), {"max_abs_deviation", "verdict", "status"});
    return cols;
}

[[nodiscard]] inline std::string render_table(const std::vector<ConstantsReport>& rows, const std::string& format) {
    auto value_of = [](const ConstantsReport& r, const std::string& name) -> std::optional<double> {
        for (const auto& e : r.entries)
            if (e.name == name) return e.computed;
        return std::nullopt;
    };
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(constants_json(r, false));
        return nlohmann::json{{"schema_version", kSchemaVersion}, {"command", "table"}, {"rows", arr}}.dump(2) + "\n";
    }
    if (format == "csv") {
        std::string out = detail::csv_row(table_columns());
        for (const auto& r : rows) {
            std::vector<std::string> f{std::string(r.family.short_name()), std::to_string(r.family.n),
                                       std::to_string(r.m), std::to_string(r.dim_k), std::to_string(r.dim_m)};
            for (const auto& name : constant_names()) {
                const auto v = value_of(r, name);
                f.push_back(v ? detail::fmt(*v) : "");
            }
            f.push_back(detail::fmt(r.max_deviation()));
            f.push_back(r.verdict ? std::string(to_string(r.verdict->verdict)) : "");
            f.push_back(r.pass() ? "PASS" : "FAIL");
            out += detail::csv_row(f);
        }
        return out;
    }
    // Human table: one column per n, constants as rows.
    std::ostringstream os;
    os << detail::pad("constant", 20);
    for (const auto& r : rows) os << detail::pad(std::string(r.family.short_name()) + "(" + std::to_string(r.family.n) + ")", 18);
    os << "\n";
    for (const auto& name : constant_names()) {
        os << detail::pad(name, 20);
        for (const auto& r : rows) {
            const auto v = value_of(r, name);
            std::string cell = "-";
            if (v) {
                const auto q = rational_fit(*v);
                cell = q.exact ? q.str() : detail::fmt(*v, 10);
            }
            os << detail::pad(cell, 18);
        }
        os << "\n";
    }
    os << detail::pad("verdict", 20);
    for (const auto& r : rows)
        os << detail::pad(r.verdict ? (r.verdict->verdict == Verdict::RIGID_SECOND_ORDER ? "RIGID" : "PARTIAL") : "-", 18);
    os << "\n" << detail::pad("status", 20);
    for (const auto& r : rows) os << detail::pad(r.pass() ? "PASS" : "FAIL", 18);
    os << "\n";
    for (const auto& r : rows)
        if (!r.error.empty()) os << r.family.short_name() << "(" << r.family.n << "): " << r.error << "\n";
    return os.str();
}

struct VerifySummary {
    int n_min = 0;
    int n_max = 0;
    std::uint64_t seed = 0;
    int probes = 0;
    double tolerance = 0.0;
    std::vector<SuiteResult> suites;

    [[nodiscard]] bool pass() const {
        return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass; });
    }
};

[[nodiscard]] inline std::string render_verify(const VerifySummary& v, const std::string& format) {
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : v.suites)
            arr.push_back({{"suite", s.suite},
                           {"family", std::string(s.family.short_name())},
                           {"n", s.family.n},
                           {"max_residual", std::isfinite(s.max_residual) ? nlohmann::json(s.max_residual)
                                                                          : nlohmann::json(nullptr)},
                           {"threshold", s.threshold},
                           {"status", s.pass ? "PASS" : "FAIL"},
                           {"detail", s.detail}});
        return nlohmann::json{{"schema_version", kSchemaVersion},
                              {"command", "verify"},
                              {"n_min", v.n_min},
                              {"n_max", v.n_max},
                              {"seed", v.seed},
                              {"probes", v.probes},
                              {"tolerance", v.tolerance},
                              {"suites", arr},
                              {"status", v.pass() ? "PASS" : "FAIL"}}
                   .dump(2) +
               "\n";
    }
    if (format == "csv") {
        std::string out = detail::csv_row({"family", "n", "suite", "max_residual", "threshold", "status", "detail"});
        for (const auto& s : v.suites)
            out += detail::csv_row({std::string(s.family.short_name()), std::to_string(s.family.n), s.suite,
                                    detail::fmt(s.max_residual), detail::fmt(s.threshold), s.pass ? "PASS" : "FAIL",
                                    s.detail});
        return out;
    }
    std::ostringstream os;
    os << "verify n=" << v.n_min << ".." << v.n_max << " seed=" << v.seed << " probes=" << v.probes
       << " tolerance=" << detail::fmt(v.tolerance, 3) << "\n";
    int failed = 0;
    for (const auto& s : v.suites) {
        os << detail::pad(std::string(s.family.short_name()) + "(" + std::to_string(s.family.n) + ")", 8)
           << detail::pad(s.suite, 32) << detail::pad(detail::fmt(s.max_residual, 3), 12) << (s.pass ? "PASS" : "FAIL");
        if (!s.detail.empty()) os << "  " << s.detail;
        os << "\n";
        failed += s.pass ? 0 : 1;
    }
    os << (failed ? "FAIL: " + std::to_string(failed) + " suite(s) failed\n" : "PASS: all suites passed\n");
    return os.str();
}

}  // namespace koiso
