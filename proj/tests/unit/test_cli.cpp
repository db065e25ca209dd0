#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = trirec::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.emplace_back("--format");
    args.emplace_back("json");
    const Result r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return nlohmann::json::parse(r.out);
}

std::string write_temp(const std::string& name, const std::string& body) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST(CliSeq, FibonacciPlain) {
    const Result r = run({"seq", "-p", "1", "-q", "-1", "-n", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("6  8  18"), std::string::npos) << r.out;
}

TEST(CliSeq, JsonIsOneDocument) {
    const auto doc = run_json({"seq", "-p", "2", "-q", "3", "-n", "4"});
    EXPECT_EQ(doc["command"], "seq");
    EXPECT_EQ(doc["params"]["p"], "2");
    ASSERT_EQ(doc["records"].size(), 5U);
    const std::vector<std::string> u = {"0", "1", "2", "1", "-4"};
    for (std::size_t n = 0; n < u.size(); ++n) {
        EXPECT_EQ(doc["records"][n]["n"], n);
        EXPECT_EQ(doc["records"][n]["u"], u[n]);
    }
    EXPECT_FALSE(doc.contains("meta"));
}

TEST(CliSeq, RationalParameters) {
    const auto doc = run_json({"seq", "-p", "1/2", "-q", "-1/3", "-n", "2"});
    EXPECT_EQ(doc["records"][2]["u"], "1/2");
}

TEST(CliSeq, CsvHeaderAndRows) {
    const Result r = run({"seq", "-n", "2", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,u,w\n0,0,2\n1,1,1\n2,1,3\n");
}

TEST(CliSeq, TimestampsStayOutsideRecords) {
    const Result r = run({"seq", "-n", "2", "--format", "json", "--timestamps"});
    ASSERT_EQ(r.code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_TRUE(doc.contains("meta"));
    EXPECT_TRUE(doc["meta"].contains("generated_at"));
    for (const auto& rec : doc["records"]) EXPECT_FALSE(rec.contains("generated_at"));

    const Result csv = run({"seq", "-n", "2", "--format", "csv", "--timestamps"});
    EXPECT_EQ(csv.out.rfind("# ", 0), 0U);
    EXPECT_NE(csv.out.find("\nn,u,w\n"), std::string::npos);
}

TEST(CliPhi, CoefficientsAscending) {
    const auto doc = run_json({"phi", "-p", "1", "-q", "-1", "-n", "2"});
    ASSERT_EQ(doc["records"].size(), 1U);
    EXPECT_EQ(doc["records"][0]["coefficients"], nlohmann::json({"1", "-2", "-2", "1"}));
}

TEST(CliPhi, FactorIncludesQuadratic) {
    const auto doc = run_json({"phi", "-p", "1", "-q", "-1", "-n", "4", "--factor"});
    bool quadratic = false;
    for (const auto& rec : doc["records"]) {
        if (rec["kind"] == "quadratic_factor") {
            quadratic = true;
            EXPECT_EQ(rec["polynomial"], "x^2 - 7x + 1");
        }
        if (rec["kind"] == "fibonacci_tail") EXPECT_EQ(rec["sign"], -1);
    }
    EXPECT_TRUE(quadratic);
}

TEST(CliBinom, ValueAndQuotient) {
    const auto doc = run_json({"binom", "-r", "6", "-k", "3"});
    EXPECT_EQ(doc["records"][0]["value"], "60");
    EXPECT_EQ(doc["records"][0]["quotient"], "60");
}

TEST(CliBinom, QuotientUndefinedIsNull) {
    const auto doc = run_json({"binom", "-p", "1", "-q", "1", "-r", "6", "-k", "3"});
    EXPECT_EQ(doc["records"][0]["value"], "-2");
    EXPECT_TRUE(doc["records"][0]["quotient"].is_null());
}

TEST(CliGauss, CyclotomicFactors) {
    const auto doc = run_json({"gauss", "-m", "4", "-k", "2", "--cyclotomic"});
    EXPECT_EQ(doc["records"][0]["coefficients"], nlohmann::json({"1", "1", "2", "1", "1"}));
    std::vector<long> ds;
    for (std::size_t i = 1; i < doc["records"].size(); ++i) {
        ds.push_back(doc["records"][i]["d"].get<long>());
        EXPECT_EQ(doc["records"][i]["exponent"], 1);
    }
    EXPECT_EQ(ds, (std::vector<long>{3, 4}));
}

TEST(CliVerify, UniversalIdentityExitsZero) {
    const Result r = run({"verify", "--p-range", "-3:3", "--q-range", "-3:3", "--n-max", "50",
                          "--identities", "prop34"});
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST(CliVerify, DiagnosticReportsCounterexample) {
    const auto doc = run_json({"verify", "--identities", "eq25_zeitlin_paper_sign", "--n-max", "5",
                               "--a-max", "2"});
    ASSERT_EQ(doc["records"].size(), 1U);
    const auto& rec = doc["records"][0];
    EXPECT_EQ(rec["status"], "fail");
    EXPECT_EQ(rec["diagnostic"], true);
    EXPECT_EQ(rec["counterexample"]["n"], 1);
    EXPECT_EQ(rec["counterexample"]["a"], 1);
    EXPECT_EQ(rec["counterexample"]["lhs"], "9/5");
    EXPECT_EQ(doc["summary"]["diagnostic_failures"], 1);
}

TEST(CliVerify, StrictDiagnosticsTurnFailuresIntoExitOne) {
    const std::vector<std::string> base = {"verify", "--identities", "eq25_zeitlin_paper_sign",
                                           "--n-max", "5", "--a-max", "2"};
    EXPECT_EQ(run(base).code, 0);
    auto strict = base;
    strict.emplace_back("--strict-diagnostics");
    EXPECT_EQ(run(strict).code, 1);
}

TEST(CliVerify, DeterministicAcrossJobCounts) {
    const std::vector<std::string> base = {"verify", "--p-range", "-2:2", "--q-range", "-2:2",
                                           "--n-max", "15", "--a-max", "3", "--format", "json"};
    auto one = base;
    one.insert(one.end(), {"--jobs", "1"});
    auto many = base;
    many.insert(many.end(), {"--jobs", "6"});
    const Result a = run(one);
    const Result b = run(many);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run(many).out, b.out);
}

TEST(CliExitCodes, UsageErrors) {
    const std::vector<std::vector<std::string>> bad = {
        {},
        {"frobnicate"},
        {"binom", "-r", "3", "-k", "5"},
        {"binom", "-r", "3"},
        {"seq", "-p", "1.5"},
        {"seq", "-p", "abc"},
        {"seq", "-q", "1/0"},
        {"seq", "-n", "x"},
        {"seq", "-n", "-1"},
        {"seq", "-q", "-1", "-q", "2"},
        {"seq", "--format", "xml"},
        {"gauss", "-m", "2", "-k", "3"},
        {"verify", "--identities", "nope"},
        {"verify", "--p-range", "3:-3"},
        {"verify", "--p-range", "1"},
        {"verify", "--n-max", "0"},
    };
    for (const auto& args : bad) {
        const Result r = run(args);
        std::string joined;
        for (const auto& a : args) joined += a + " ";
        EXPECT_EQ(r.code, 2) << joined;
        EXPECT_TRUE(r.out.empty()) << joined;
        EXPECT_FALSE(r.err.empty()) << joined;
    }
}

TEST(CliExitCodes, HelpIsSuccess) {
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"seq", "--help"}).code, 0);
}

TEST(CliConfig, FileFillsUnsetOptionsOnly) {
    const auto path = write_temp("trirec_cfg.ini", "# defaults\np = 2\nq = 3\nn-max = 4\nformat = json\n");
    const Result r = run({"--config", path, "seq", "-p", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["params"]["p"], "5");
    EXPECT_EQ(doc["params"]["q"], "3");
    EXPECT_EQ(doc["records"].size(), 5U);
}

TEST(CliConfig, FlagsAndUnderscoreKeys) {
    const auto path = write_temp("trirec_cfg2.ini", "n_max = 5\na_max = 2\nstrict_diagnostics = true\n"
                                                    "identities = eq25_zeitlin_paper_sign\n");
    EXPECT_EQ(run({"--config", path, "verify"}).code, 1);
}

TEST(CliConfig, UnknownKeyOrMissingFileIsUsageError) {
    const auto path = write_temp("trirec_cfg3.ini", "bogus = 1\n");
    EXPECT_EQ(run({"--config", path, "seq"}).code, 2);
    EXPECT_EQ(run({"--config", "/nonexistent/trirec.ini", "seq"}).code, 2);
}

TEST(CliList, CatalogIsSorted) {
    const auto doc = run_json({"list"});
    std::vector<std::string> ids;
    for (const auto& rec : doc["records"]) ids.push_back(rec["identity"]);
    EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
    EXPECT_GE(ids.size(), 5U);
}
