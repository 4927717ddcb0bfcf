#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <cfgen/cli.hpp>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cfgen::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST(Cli, EvalZetaSeven) {
    const auto r = run({"eval", "--family", "zeta", "--s", "7", "--depth", "5", "--x", "1", "--digits", "28"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("decimal: 0.9917254568069276497590711416"), std::string::npos) << r.out;
}

TEST(Cli, ExpandJsonSchema) {
    const auto r = run({"expand", "--family", "bernoulli", "--N", "1", "--depth", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = parse(r.out);
    EXPECT_EQ(j["cf"]["head"], nlohmann::json::array({"1"}));
    EXPECT_EQ(j["cf"]["terms"][0]["num"], nlohmann::json::array({"0", "-1"}));
    EXPECT_EQ(j["cf"]["terms"][0]["den"], nlohmann::json::array({"2", "1"}));
    EXPECT_EQ(j["cf"]["display_sign"], "minus");
    EXPECT_EQ(j["convergents"].size(), 4u);
    EXPECT_EQ(j["family"]["lambda"], "0");
}

TEST(Cli, ExpandIsDeterministic) {
    const std::vector<std::string> args{"expand", "--family", "harmonic", "--m", "2", "--a", "1/2", "--depth", "6",
                                        "--format", "json"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, VerifyAllPassesAndReportsTiming) {
    const auto r = run({"verify", "--all", "--depth", "10", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = parse(r.out);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_TRUE(j["timing"].contains("elapsed_us"));
    EXPECT_EQ(j["families"].size(), cfgen::parameter_grid().size());
    // the per-family payload is identical across runs
    auto again = parse(run({"verify", "--all", "--depth", "10", "--format", "json"}).out);
    EXPECT_EQ(j["families"], again["families"]);
}

TEST(Cli, VerifySingleFamilyText) {
    const auto r = run({"verify", "--family", "euler2", "--N", "2", "--depth", "8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("odd_coefficients_zero"), std::string::npos);
    EXPECT_NE(r.out.find("summary:"), std::string::npos);
}

TEST(Cli, TransformReportsDefect) {
    const auto r = run({"transform", "--family", "bernoulli", "--N", "1", "--lft", "-1,1,1,1", "--depth", "6"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("(x)/(4+x - (4x)/(3+x"), std::string::npos) << r.out;
    const auto bad = run({"transform", "--family", "harmonic", "--lft", "1,2,3,4"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("irregular"), std::string::npos);
}

TEST(Cli, Series2CFSources) {
    auto r = run({"series2cf", "--source", "ogf-cauchy", "--depth", "8", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = parse(r.out);
    EXPECT_EQ(j["steps"][4]["a"], "2391");
    EXPECT_EQ(j["steps"].size(), 8u);
    r = run({"series2cf", "--source", "stock:geom", "--depth", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("terminated after 2 steps"), std::string::npos);
    r = run({"series2cf", "--source", "stock:nothing", "--depth", "4"});
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, Series2CFFromFile) {
    const auto path = std::filesystem::temp_directory_path() / "cfgen_cli_series.json";
    {
        std::ofstream f(path);
        f << R"({"coeffs": ["1", "1/2", "1/4", "1/8", "1/16"], "order": 4})";
    }
    const auto r = run({"series2cf", "--source", "file:" + path.string(), "--depth", "3"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("a = 1  b = 2"), std::string::npos) << r.out;
    {
        std::ofstream f(path);
        f << "{not json";
    }
    EXPECT_EQ(run({"series2cf", "--source", "file:" + path.string()}).code, 2);
    std::filesystem::remove(path);
}

TEST(Cli, TableListsNamedNumbers) {
    const auto r = run({"table", "--family", "cauchy", "--count", "8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("8\t-33953/90"), std::string::npos) << r.out;
    const auto o = run({"table", "--family", "ogf_bernoulli", "--count", "2", "--format", "json"});
    EXPECT_EQ(parse(o.out)["rows"][2]["B"], "1/6");
}

TEST(Cli, UsageErrorsExitWithTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"expand"}).code, 2);
    EXPECT_EQ(run({"expand", "--family", "cauchy", "--N", "0"}).code, 2);
    EXPECT_EQ(run({"expand", "--family", "bernoulli", "--lambda", "1/0"}).code, 2);
    EXPECT_EQ(run({"expand", "--family", "bernoulli", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"eval", "--family", "zeta", "--x", "0", "--depth", "3"}).code, 2);
    EXPECT_EQ(run({"eval", "--family", "bernoulli", "--digits", "0"}).code, 2);
    EXPECT_EQ(run({"transform", "--family", "bernoulli", "--lft", "1,1,1,1"}).code, 2);
    EXPECT_EQ(run({"transform", "--family", "bernoulli", "--lft", "1,2"}).code, 2);
}

TEST(Cli, DepthLimitFromEnvironment) {
    ::setenv("CFGEN_DEPTH_LIMIT", "5", 1);
    EXPECT_EQ(run({"expand", "--family", "arctan", "--depth", "6"}).code, 2);
    EXPECT_EQ(run({"expand", "--family", "arctan", "--depth", "5"}).code, 0);
    ::unsetenv("CFGEN_DEPTH_LIMIT");
    EXPECT_EQ(run({"expand", "--family", "arctan", "--depth", "6"}).code, 0);
}

TEST(Cli, NegativeRationalValues) {
    const auto r = run({"expand", "--family", "bernoulli", "--lambda", "-1/3", "--depth", "1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("(4/3)x"), std::string::npos);
}

TEST(Cli, JsonReportsRoundTrip) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"expand", "--family", "cauchy", "--N", "2", "--lambda", "1/2", "--depth", "5", "--format", "json"},
             {"series2cf", "--source", "ogf-bernoulli", "--depth", "6", "--format", "json"},
             {"table", "--family", "euler", "--count", "10", "--format", "json"}}) {
        const auto r = run(args);
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(nlohmann::ordered_json::parse(r.out).dump(2) + "\n", r.out);
    }
}

TEST(Cli, HelpExitsCleanly) {
    const auto r = run({"transform", "--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("--lft"), std::string::npos);
}
