#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "focal_cli.hpp"

using namespace focal;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"focal"};
    storage.insert(storage.end(), args);
    std::vector<const char*> argv;
    for (auto& s : storage) argv.push_back(s.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

const std::string kFocusCoeffs = "3,8,5,3,25,20,18,27,9,22,11,20,4,3";

}  // namespace

TEST(Cli, EvalCubicFocus) {
    auto r = invoke({"eval", "--coeffs", kFocusCoeffs, "--prime", "29", "-N", "12"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (int j = 1; j <= 11; ++j) EXPECT_TRUE(contains(r.out, "s_" + std::to_string(j) + " = 0\n")) << j;
    EXPECT_FALSE(contains(r.out, "s_12 = 0\n"));
    EXPECT_TRUE(contains(r.out, "first_nonzero = 12"));
    EXPECT_TRUE(contains(r.out, "ring = F_29"));
}

TEST(Cli, EvalFromFileAndWriteBack) {
    auto dir = std::filesystem::temp_directory_path() / "focal_cli_eval";
    std::filesystem::create_directories(dir);
    auto written = (dir / "sys.txt").string();
    auto a = invoke({"eval", "--coeffs", kFocusCoeffs, "--prime", "29", "-N", "3", "--write-system", written});
    ASSERT_EQ(a.code, 0);
    auto b = invoke({"eval", written, "-N", "3"});
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EvalZeroSystemAndRationals) {
    auto z = invoke({"eval", "--coeffs", "0,0,0,0,0,0,0,0,0,0,0,0,0,0", "--prime", "31", "-N", "5"});
    ASSERT_EQ(z.code, 0);
    EXPECT_TRUE(contains(z.out, "first_nonzero = none"));
    auto q = invoke({"eval", "--coeffs", "1,0,0,0,0,0,0,0,0,0,0,0,0,0", "-N", "2"});
    ASSERT_EQ(q.code, 0) << q.err;
    EXPECT_TRUE(contains(q.out, "ring = Q"));
}

TEST(Cli, EvalRejectsSmallPrime) {
    auto r = invoke({"eval", "--coeffs", kFocusCoeffs, "--prime", "7", "-N", "12"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "2N+5")) << r.err;
}

TEST(Cli, VerifyBuiltInFocus) {
    auto ok = invoke({"verify-paper"});
    EXPECT_EQ(ok.code, 0) << ok.out;
    EXPECT_TRUE(contains(ok.out, "jacobian_rank = 11"));
    EXPECT_TRUE(contains(ok.out, "result = PASS"));
    auto n2 = invoke({"verify-paper", "--convention", "N2"});
    EXPECT_EQ(n2.code, 0);
    auto deep = invoke({"verify-paper", "--depth", "12"});
    EXPECT_EQ(deep.code, 1);
    EXPECT_TRUE(contains(deep.out, "prefix not vanishing at j = 12")) << deep.out;
}

TEST(Cli, JacobianRank) {
    auto r = invoke({"jacobian", "--coeffs", kFocusCoeffs, "--prime", "29"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "rank = 11"));
}

TEST(Cli, CertifyAndRecheck) {
    auto dir = std::filesystem::temp_directory_path() / "focal_cli_cert";
    std::filesystem::create_directories(dir);
    auto path = (dir / "cert.txt").string();
    auto c = invoke({"certify", "--coeffs", kFocusCoeffs, "--prime", "29", "--out", path});
    ASSERT_EQ(c.code, 0) << c.err;
    auto r = invoke({"certify", "--recheck", path});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_TRUE(contains(r.out, "recheck = PASS"));

    // A corrupted certificate is refused.
    std::string text;
    {
        std::ifstream in(path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    auto pos = text.find("jacobian_rank = 11");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 18, "jacobian_rank = 10");
    {
        std::ofstream out(path);
        out << text;
    }
    auto bad = invoke({"certify", "--recheck", path});
    EXPECT_NE(bad.code, 0);
}

TEST(Cli, SearchSmall) {
    auto r = invoke({"search", "--prime", "29", "--target", "2", "--strategy", "parametrized", "--budget", "500",
                     "--quiet"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "trials = 500"));
    EXPECT_TRUE(contains(r.out, "config_digest = "));
    auto zero = invoke({"search", "--budget", "0", "--quiet"});
    ASSERT_EQ(zero.code, 0);
    EXPECT_TRUE(contains(zero.out, "trials = 0"));
}

TEST(Cli, Symbolic) {
    auto r = invoke({"symbolic", "-N", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "s_3: terms = "));
    EXPECT_FALSE(contains(r.out, "= no"));
    auto limited = invoke({"symbolic", "-N", "4", "--max-terms", "10"});
    EXPECT_EQ(limited.code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"eval"}).code, 2);
    EXPECT_EQ(invoke({"eval", "--coeffs", "1,2,3", "--prime", "29"}).code, 2);
    EXPECT_EQ(invoke({"eval", "--coeffs", kFocusCoeffs, "--prime", "30"}).code, 2);
    EXPECT_EQ(invoke({"search", "--strategy", "magic"}).code, 2);
    EXPECT_EQ(invoke({"search", "--prime", "29", "--target", "13", "--budget", "1"}).code, 2);
    EXPECT_EQ(invoke({"--version"}).code, 0);
}
