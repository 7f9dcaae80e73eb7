#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = bvpdn::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path write_temp(const std::string& name, const std::string& text) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

TEST(Cli, BoundsJson) {
    const Outcome r = run({"bounds", "--l1", "1", "--l2", "1", "--l3", "1", "--c-abs", "0", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j.at("L4").get<double>(), 14.31050714662797, 1e-12);
    const double r0 = j.at("r0").get<double>();
    EXPECT_GT(r0, 0.0015);
    EXPECT_LT(r0, 0.002);
}

TEST(Cli, BoundsWithZeroL4IsAUsageError) {
    const Outcome r = run({"bounds"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("L4"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"bounds", "--l1", "1", "--frobnicate"}).code, 2);
    EXPECT_EQ(run({"bounds", "--l1", "-1"}).code, 2);
    EXPECT_EQ(run({"bounds", "--l1", "1", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
    EXPECT_EQ(run({"eval"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, EvalWritesPlotReadyCsv) {
    const fs::path problem =
        write_temp("bvpdn_cli_eval.json", R"({"type": "poly", "terms": [{"p": 2, "q": 2, "re": 1}]})");
    const Outcome r = run({"eval", "--problem", problem.string(), "--grid", "8", "--rmax", "0.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "re_z,im_z,re_w,im_w,abs_w,re_wz,im_wz,re_wzbar,im_wzbar");
    int rows = 0;
    bool found = false;
    while (std::getline(lines, line)) {
        ++rows;
        double v[9];
        char comma;
        std::istringstream fields(line);
        for (int i = 0; i < 9; ++i) fields >> v[i] >> comma;
        if (std::abs(std::hypot(v[0], v[1]) - 0.5) < 1e-12) {
            found = true;
            EXPECT_NEAR(v[2], 0.0625, 1e-10);
        }
    }
    EXPECT_EQ(rows, 64);
    EXPECT_TRUE(found);
    fs::remove(problem);
}

TEST(Cli, EvalRejectsBadProblems) {
    const fs::path bad = write_temp("bvpdn_cli_bad.json", R"({"type": "poly", "terms": 5})");
    EXPECT_EQ(run({"eval", "--problem", bad.string()}).code, 2);
    EXPECT_EQ(run({"eval", "--problem", (fs::temp_directory_path() / "bvpdn_missing.json").string()}).code, 2);
    const fs::path good = write_temp("bvpdn_cli_good.json", R"({"type": "poly", "terms": [{"p": 1, "q": 0, "re": 1}]})");
    EXPECT_EQ(run({"eval", "--problem", good.string(), "--rmax", "1.5"}).code, 2);
    EXPECT_EQ(run({"eval", "--problem", good.string(), "--n-theta", "7"}).code, 2);
    fs::remove(bad);
    fs::remove(good);
}

TEST(Cli, StrictEscalatesAccuracyWarnings) {
    const fs::path problem =
        write_temp("bvpdn_cli_strict.json", R"({"type": "poly", "terms": [{"p": 2, "q": 2, "re": 1}]})");
    const std::vector<std::string> base{"eval", "--problem", problem.string(), "--grid", "1", "--tol", "1e-300"};
    EXPECT_EQ(run(base).code, 0);
    auto strict = base;
    strict.push_back("--strict");
    EXPECT_EQ(run(strict).code, 3);
    fs::remove(problem);
}

TEST(Cli, VerifyOutputIsByteIdentical) {
    const fs::path a = fs::temp_directory_path() / "bvpdn_cli_a.json";
    const fs::path b = fs::temp_directory_path() / "bvpdn_cli_b.json";
    ASSERT_EQ(run({"verify", "--suite", "coeff", "--seed", "7", "--format", "json", "--out", a.string()}).code, 0);
    ASSERT_EQ(run({"verify", "--suite", "coeff", "--seed", "7", "--format", "json", "--out", b.string()}).code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_TRUE(nlohmann::json::parse(slurp(a)).at("passed").get<bool>());
    fs::remove(a);
    fs::remove(b);
}

TEST(Cli, LandauOnIdentityProblem) {
    const fs::path problem =
        write_temp("bvpdn_cli_identity.json", R"({"type": "poly", "terms": [{"p": 1, "q": 0, "re": 1}]})");
    const Outcome r = run({"landau", "--problem", problem.string(), "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(nlohmann::json::parse(r.out).at("passed").get<bool>());
    const Outcome params = run({"landau", "--l1", "1"});
    EXPECT_EQ(params.code, 0);
    EXPECT_NE(params.out.find("r0"), std::string::npos);
    const fs::path scaled =
        write_temp("bvpdn_cli_scaled.json", R"({"type": "poly", "terms": [{"p": 1, "q": 0, "re": 2}]})");
    EXPECT_EQ(run({"landau", "--problem", scaled.string()}).code, 2);
    fs::remove(problem);
    fs::remove(scaled);
}

}  // namespace
