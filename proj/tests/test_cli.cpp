#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <zpat/io/cli.hpp>

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "zpat");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = zpat::io::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, Pair)
{
    EXPECT_EQ(run({"pair", "--family", "lambda:6"}).out, "-360\n");
    EXPECT_EQ(run({"pair", "--family", "pi:4"}).out, "8\n");
    EXPECT_EQ(run({"pair", "--pattern", "[[1,2],[1,3],[2,3]]"}).out, "6\n");
    EXPECT_EQ(run({"pair", "--family", "jfam:sigma=1,3,2,i=-1,1"}).out, "-3\n");
    EXPECT_EQ(run({"pair", "--family", "hess:k=2,n=4"}).out, "-12\n");
    const auto j = nlohmann::json::parse(run({"pair", "--family", "ne:3", "--format", "json"}).out);
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["pairing"], "6");
    EXPECT_EQ(j["n"], 3);
}

TEST(Cli, ErrorsExitTwo)
{
    EXPECT_EQ(run({"pair"}).code, 2);
    EXPECT_EQ(run({"pair", "--family", "bogus:3"}).code, 2);
    EXPECT_EQ(run({"pair", "--pattern", "[[1,1]]"}).code, 2);
    EXPECT_EQ(run({"nosuch"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"classify", "--n", "6"}).code, 2);
    EXPECT_EQ(run({"verify", "nosuch"}).code, 2);
    EXPECT_EQ(run({"invariants", "--matrix", "[[[1,0],[0,0]],[[0,0],[0,0]]]"}).code, 2);
    EXPECT_EQ(run({"pair", "--family", "ne:3", "--format", "xml"}).code, 2);
    EXPECT_FALSE(run({"pair"}).err.empty());
}

TEST(Cli, StabDim)
{
    EXPECT_EQ(run({"stabdim", "--family", "ne:4"}).out, "4 not-defective\n");
    const auto j = nlohmann::json::parse(run({"stabdim", "--family", "ne:4", "--format", "json"}).out);
    EXPECT_EQ(j["stab_dim"], 4);
    EXPECT_EQ(j["defective"], false);
}

TEST(Cli, ClassifySmall)
{
    const auto r = run({"classify", "--n", "4", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["table1"]["classes"], 30);
    EXPECT_EQ(j["table1"]["total_patterns"], "924");
    EXPECT_EQ(j["expected_match"], true);
    EXPECT_EQ(j["classes"].size(), 30u);
    EXPECT_EQ(run({"classify", "--n", "4", "--weak"}).out, "12\n");
    const auto csv = run({"classify", "--n", "3", "--csv"});
    EXPECT_EQ(csv.code, 0);
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 4);
}

TEST(Cli, ClassifyMismatchExitsOne)
{
    const std::string path = ::testing::TempDir() + "zpat_expected_bad.json";
    std::ifstream in(ZPAT_EXPECTED_PATH);
    auto ex = nlohmann::json::parse(in);
    ex["table1"]["3"]["classes"] = 4;
    {
        std::ofstream f(path);
        f << ex.dump();
    }
    const auto r = run({"classify", "--n", "3", "--expected", path});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("classes: 3 vs 4"), std::string::npos);
    EXPECT_NE(r.out.find("singular_classes_by_stab_dim"), std::string::npos);

    {
        std::ofstream f(path);
        f << R"({"schema_version":2})";
    }
    EXPECT_EQ(run({"classify", "--n", "3", "--expected", path}).code, 2);
}

TEST(Cli, Invariants)
{
    const auto r = run({"invariants", "--matrix", "zero"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n");
    const auto j = nlohmann::json::parse(run({"invariants", "--format", "json"}).out);
    EXPECT_EQ(j["invariants"].size(), 16u);
}

TEST(Cli, VerifySuitePasses)
{
    const auto r = run({"verify", "pi-family", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["pass"], true);
    EXPECT_EQ(j["suites"][0]["suite"], "pi-family");
}

TEST(Cli, FlagsDeterministicJson)
{
    const std::vector<std::string> args{"flags3", "--samples", "1", "--restarts", "200", "--seed", "3", "--threads", "1", "--format", "json"};
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["samples"].size(), 1u);
    EXPECT_TRUE(j["samples"][0].contains("N_in_expected_set"));
}
