#include "koiso/report.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace koiso;

namespace {

const ReportEntry& entry(const ConstantsReport& r, const std::string& name) {
    for (const auto& e : r.entries)
        if (e.name == name) return e;
    throw std::out_of_range(name);
}

}  // namespace

TEST(RationalFit, RecoversSmallFractions) {
    const std::pair<long long, long long> cases[] = {{-693, 32}, {-63, 5}, {35, 3}, {1120, 3}, {7, 1}, {0, 1},
                                                     {-119, 9}, {9999, 10000}};
    for (const auto& [p, q] : cases) {
        const auto r = rational_fit(static_cast<double>(p) / static_cast<double>(q));
        EXPECT_EQ(r.num, p);
        EXPECT_EQ(r.den, q);
        EXPECT_TRUE(r.exact);
    }
    EXPECT_EQ(rational_fit(-693.0 / 32.0).str(), "-693/32");
    EXPECT_EQ(rational_fit(12.0).str(), "12");
}

TEST(RationalFit, IrrationalIsApproximateWithBoundedDenominator) {
    const auto r = rational_fit(3.14159265358979323846);
    EXPECT_EQ(r.num, 355);
    EXPECT_EQ(r.den, 113);
    EXPECT_FALSE(r.exact);
    const auto s = rational_fit(std::sqrt(2.0), 100);
    EXPECT_LE(s.den, 100);
    EXPECT_FALSE(s.exact);
}

TEST(Csv, Rfc4180Quoting) {
    EXPECT_EQ(detail::csv_field("plain"), "plain");
    EXPECT_EQ(detail::csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(detail::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(detail::csv_row({"x", "y,z"}), "x,\"y,z\"\r\n");
}

TEST(TableColumns, FixedOrder) {
    const auto cols = table_columns();
    ASSERT_GE(cols.size(), 8u);
    EXPECT_EQ(cols[0], "family");
    EXPECT_EQ(cols[1], "n");
    EXPECT_EQ(cols.back(), "status");
    EXPECT_EQ(cols.size(), constant_names().size() + 8);
}

TEST(ConstantsReport, So3) {
    const auto r = build_constants_report({FamilyTag::AI, 3}, 0, 10, 1e-8);
    ASSERT_TRUE(r.error.empty()) << r.error;
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.entries.size(), constant_names().size());
    EXPECT_NEAR(r.psi_coeff, -21.65625, 1e-9);
    EXPECT_NEAR(entry(r, "eh_third_variation").computed, 693.0 / 64.0, 1e-9);
    ASSERT_TRUE(r.verdict);
    EXPECT_EQ(r.verdict->verdict, Verdict::RIGID_SECOND_ORDER);
    for (const auto& e : r.entries) EXPECT_LE(e.abs_deviation, 1e-8) << e.name;
}

TEST(ConstantsReport, Sp3EvenAmbientIsPartial) {
    const auto r = build_constants_report({FamilyTag::AII, 3}, 0, 10, 1e-8);
    EXPECT_TRUE(r.pass()) << r.error;
    EXPECT_NEAR(r.psi_coeff, -12.6, 1e-9);
    ASSERT_TRUE(r.verdict);
    EXPECT_EQ(r.verdict->verdict, Verdict::PARTIAL_INTEGRABILITY);
}

TEST(ConstantsReport, So4HasWitness) {
    const auto r = build_constants_report({FamilyTag::AI, 4}, 3, 5, 1e-8);
    ASSERT_TRUE(r.verdict);
    EXPECT_EQ(r.verdict->verdict, Verdict::PARTIAL_INTEGRABILITY);
    ASSERT_TRUE(r.verdict->witness);
    EXPECT_EQ(r.verdict->witness->rows(), 4);
    const auto j = constants_json(r);
    EXPECT_EQ(j["verdict"]["witness"]["diagonal"].size(), 4u);
    EXPECT_EQ(j["status"], "PASS");
}

TEST(ConstantsReport, TinyToleranceFlagsDeviation) {
    // No double computation matches 1120/3 to 1e-300, so the report must fail.
    const auto r = build_constants_report({FamilyTag::AI, 4}, 0, 4, 1e-300);
    EXPECT_FALSE(r.pass());
}

TEST(ConstantsReport, TooFewProbesIsAnError) {
    const auto r = build_constants_report({FamilyTag::AI, 3}, 0, 2, 1e-8);
    EXPECT_FALSE(r.error.empty());
    EXPECT_FALSE(r.pass());
}

TEST(TableRows, SoNormPmmmColumn) {
    // (n+4)(n+2)(n-1)(n-2)/(2n) for n = 3..6.
    const double expected[] = {35.0 / 3.0, 36.0, 378.0 / 5.0, 400.0 / 3.0};
    for (int n = 3; n <= 6; ++n) {
        const auto r = build_constants_report({FamilyTag::AI, n}, 0, 4, 1e-8);
        EXPECT_NEAR(entry(r, "norm_Pmmm").computed, expected[n - 3], 1e-9) << "n=" << n;
    }
}

TEST(Render, TableCsvHasOneRowPerN) {
    std::vector<ConstantsReport> rows;
    for (int n = 3; n <= 4; ++n) rows.push_back(build_constants_report({FamilyTag::AII, n}, 0, 4, 1e-8));
    const std::string csv = render_table(rows, "csv");
    std::size_t lines = 0;
    for (std::size_t pos = 0; (pos = csv.find("\r\n", pos)) != std::string::npos; pos += 2) ++lines;
    EXPECT_EQ(lines, 3u);
    EXPECT_EQ(csv.rfind("family,n,m,dim_k,dim_m,", 0), 0u);
    const auto j = nlohmann::json::parse(render_table(rows, "json"));
    EXPECT_EQ(j["rows"].size(), 2u);
    EXPECT_FALSE(j["rows"][0].contains("elapsed_ms"));
    EXPECT_NE(render_table(rows, "table").find("sp(4)"), std::string::npos);
}

TEST(Verify, SmallRangePassesAndIsDeterministic) {
    VerifySummary a{3, 3, 42, 3, 1e-8, run_verify_suites({FamilyTag::AI, 3}, 42, 3, 1e-8)};
    VerifySummary b{3, 3, 42, 3, 1e-8, run_verify_suites({FamilyTag::AI, 3}, 42, 3, 1e-8)};
    for (const auto& s : a.suites) EXPECT_TRUE(s.pass) << s.suite << ": " << s.detail;
    EXPECT_EQ(render_verify(a, "json"), render_verify(b, "json"));
    EXPECT_EQ(render_verify(a, "csv"), render_verify(b, "csv"));
    const auto j = nlohmann::json::parse(render_verify(a, "json"));
    EXPECT_EQ(j["status"], "PASS");
    EXPECT_EQ(j["schema_version"], kSchemaVersion);
}

TEST(ParallelMap, OrderedResultsAndErrorPropagation) {
    const auto v = parallel_map<int>(50, [](std::size_t i) { return static_cast<int>(i * i); }, 4);
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], static_cast<int>(i * i));
    EXPECT_THROW((void)parallel_map<int>(
                     5, [](std::size_t i) -> int { return i == 3 ? throw std::runtime_error("boom") : 0; }, 3),
                 std::runtime_error);
}

TEST(WorkerCount, EnvironmentOverride) {
    ::setenv("KOISO_THREADS", "3", 1);
    EXPECT_EQ(worker_count(), 3u);
    ::setenv("KOISO_THREADS", "junk", 1);
    EXPECT_GE(worker_count(), 1u);
    ::unsetenv("KOISO_THREADS");
}
