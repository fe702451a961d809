// koiso: constant tables, verification suites and rigidity verdicts for the
// symmetric spaces SU(n)/SO(n) and SU(2n)/Sp(n).
//
// Exit codes: 0 all pass, 1 deviation or suite failure, 2 usage error,
// 3 resource guard refused the request.

#include "koiso/report.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitDeviation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Options {
    std::string family;
    int n = 0;
    int n_min = 3;
    int n_max = 5;
    std::uint64_t seed = 0;
    int probes = 10;
    std::string format = "table";
    double tolerance = 1e-8;
    double max_terms = 1e9;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

koiso::FamilyTag parse_family(const std::string& s) {
    if (s == "so") return koiso::FamilyTag::AI;
    if (s == "sp") return koiso::FamilyTag::AII;
    throw UsageError("--family must be 'so' or 'sp'");
}

void check_common(const Options& o) {
    if (o.probes < 3) throw UsageError("--probes must be >= 3 (got " + std::to_string(o.probes) + ")");
    if (!(o.tolerance > 0.0)) throw UsageError("--tolerance must be positive");
    if (!(o.max_terms > 0.0)) throw UsageError("--max-terms must be positive");
}

void check_range(const Options& o) {
    if (o.n_min < 3) throw UsageError("--n-min must be >= 3");
    if (o.n_max < o.n_min) throw UsageError("--n-max must be >= --n-min");
}

void guard(const koiso::Family& f, const Options& o) {
    const double terms = koiso::contraction_terms(f);
    if (terms > o.max_terms) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s n=%d needs %.3g contraction terms (dim m = %d), above --max-terms %.3g",
                      std::string(f.short_name()).c_str(), f.n, terms, f.dim_m(), o.max_terms);
        throw ResourceError(buf);
    }
}

int cmd_constants(const Options& o) {
    check_common(o);
    if (o.n < 3) throw UsageError("--n must be >= 3");
    const koiso::Family f{parse_family(o.family), o.n};
    guard(f, o);
    const auto report = koiso::build_constants_report(f, o.seed, o.probes, o.tolerance);
    std::cout << koiso::render_constants(report, o.format);
    return report.pass() ? kExitPass : kExitDeviation;
}

int cmd_table(const Options& o) {
    check_common(o);
    check_range(o);
    const auto tag = parse_family(o.family);
    for (int n = o.n_min; n <= o.n_max; ++n) guard({tag, n}, o);
    const auto count = static_cast<std::size_t>(o.n_max - o.n_min + 1);
    const auto rows = koiso::parallel_map<koiso::ConstantsReport>(
        count,
        [&](std::size_t i) {
            return koiso::build_constants_report({tag, o.n_min + static_cast<int>(i)}, o.seed, o.probes, o.tolerance);
        },
        koiso::worker_count());
    std::cout << koiso::render_table(rows, o.format);
    const bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass(); });
    return ok ? kExitPass : kExitDeviation;
}

int cmd_verify(const Options& o) {
    check_common(o);
    check_range(o);
    std::vector<koiso::Family> members;
    for (const auto tag : {koiso::FamilyTag::AI, koiso::FamilyTag::AII})
        for (int n = o.n_min; n <= o.n_max; ++n) members.push_back({tag, n});
    for (const auto& f : members) guard(f, o);
    const auto per_member = koiso::parallel_map<std::vector<koiso::SuiteResult>>(
        members.size(), [&](std::size_t i) { return koiso::run_verify_suites(members[i], o.seed, o.probes, o.tolerance); },
        koiso::worker_count());
    koiso::VerifySummary summary{o.n_min, o.n_max, o.seed, o.probes, o.tolerance, {}};
    for (const auto& v : per_member) summary.suites.insert(summary.suites.end(), v.begin(), v.end());
    std::cout << koiso::render_verify(summary, o.format);
    return summary.pass() ? kExitPass : kExitDeviation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Second-order rigidity constants for SU(n)/SO(n) and SU(2n)/Sp(n)"};
    app.require_subcommand(1);
    Options o;

    auto add_shared = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "Probe seed")->capture_default_str();
        sub->add_option("--probes", o.probes, "Number of random probes (>= 3)")->capture_default_str();
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"table", "json", "csv"}))
            ->capture_default_str();
        sub->add_option("--tolerance", o.tolerance, "Absolute deviation tolerance")->capture_default_str();
        sub->add_option("--max-terms", o.max_terms, "Ceiling on dim(m)^4 contraction terms")->capture_default_str();
    };

    auto* constants = app.add_subcommand("constants", "Full constant report for one member of a family");
    constants->add_option("--family", o.family, "so: SU(n)/SO(n), sp: SU(2n)/Sp(n)")
        ->required()
        ->check(CLI::IsMember({"so", "sp"}));
    constants->add_option("--n", o.n, "Family parameter (>= 3)")->required();
    add_shared(constants);

    auto* table = app.add_subcommand("table", "One row of constants per n");
    table->add_option("--family", o.family, "so or sp")->required()->check(CLI::IsMember({"so", "sp"}));
    table->add_option("--n-min", o.n_min, "Smallest n")->capture_default_str();
    table->add_option("--n-max", o.n_max, "Largest n")->capture_default_str();
    add_shared(table);

    auto* verify = app.add_subcommand("verify", "Run every invariant suite for both families over a range of n");
    verify->add_option("--n-min", o.n_min, "Smallest n")->capture_default_str();
    verify->add_option("--n-max", o.n_max, "Largest n")->capture_default_str();
    add_shared(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e);
        return kExitUsage;
    }

    try {
        if (constants->parsed()) return cmd_constants(o);
        if (table->parsed()) return cmd_table(o);
        return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDeviation;
    }
}
