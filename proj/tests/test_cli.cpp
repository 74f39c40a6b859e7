#include <gtest/gtest.h>

#include <sstream>

#include "pvi/cli.hpp"
#include "pvi/json_io.hpp"
#include "pvi/verify.hpp"

using namespace pvi;

namespace {

const char* kState = R"({"t":"2","kappa":["1/4","1/8","1/8","1/8","1/8"],"q":"3","p":"5"})";

struct Run {
    int code;
    std::string out;
    std::string err;
    json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    args.insert(args.begin(), "--json");
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, FibrationQ) {
    auto r = run({"fibration", "Q", "--state", kState});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.j()["Q"], "61/20");
}

TEST(Cli, ParabolicFromConnection) {
    auto r = run({"parabolic", "from-connection", "--state", kState});
    ASSERT_EQ(r.code, 0) << r.err;
    auto u = r.j()["u"];
    EXPECT_EQ(u, json::parse(R"(["-10/1","-15/1","-30/1","1/4"])"));
}

TEST(Cli, ConnectionBuildReportsFailingClauses) {
    auto r = run({"connection", "build", "--state", kState});
    EXPECT_EQ(r.code, 1);
    auto j = r.j();
    EXPECT_EQ(j["connection"]["A1"][0][0], "-239/16");
    bool found = false;
    for (const auto& c : j["checks"])
        if (c["name"] == "A(2,2) at x=q equals p") {
            found = true;
            EXPECT_FALSE(c["pass"].get<bool>());
        }
    EXPECT_TRUE(found);
}

TEST(Cli, ZoneClassify) {
    auto r = run({"zone", "classify", "--eps", "1/10,1/10,1/10,1/10"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.j()["zone"], "A");
    auto w = run({"zone", "classify", "--eps", "1/8,1/8,1/8,1/8"});
    EXPECT_EQ(w.code, 2);
    EXPECT_NE(w.err.find("SpecialWeights"), std::string::npos) << w.err;
}

TEST(Cli, SymmetryApply) {
    auto r = run({"symmetry", "apply", "--word", "s0", "--state", kState});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.j()["output"]["q"], "61/20");
    EXPECT_EQ(r.j()["output"]["kappa"][0], "-1/4");
}

TEST(Cli, MiddleConvolution) {
    auto r = run({"mc", "transform", "--eps", "1/10,1/10,1/10,1/10"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.j()["eps"], json::parse(R"(["3/20","3/20","3/20","3/20"])"));
    EXPECT_EQ(r.j()["zone"], "stable");
}

TEST(Cli, LatticeEnumerate) {
    auto r = run({"lattice", "enumerate", "--nmax", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.j()["classes"].size(), 16u);
}

TEST(Cli, FibrationSolve) {
    auto r = run({"fibration", "solve", "--lambda1", "3", "--lambda2", "61/20", "--kappa0", "1/4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.j()["p"], "5/1");
    auto bad = run({"fibration", "solve", "--lambda1", "3", "--lambda2", "3", "--kappa0", "1/4"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("NoFiniteIntersection"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"zone", "classify"}).code, 2);
    EXPECT_EQ(run({"symmetry", "apply", "--word", "s9", "--state", kState}).code, 2);
    auto bad = run({"fibration", "Q", "--state", "{not json"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("ParseError"), std::string::npos);
}

TEST(Cli, GlobalFlagsAfterSubcommand) {
    std::ostringstream out, err;
    int code = run_cli({"verify", "--suite", "lattice", "--seed", "4", "--json"}, out, err);
    EXPECT_EQ(code, 0) << err.str();
    EXPECT_EQ(json::parse(out.str())["seed"], 4);
}

TEST(Verify, Deterministic) {
    auto a = run_suite("zones", 42, 10).to_json();
    auto b = run_suite("zones", 42, 10).to_json();
    EXPECT_EQ(a.dump(), b.dump());
    auto c = run_suite("zones", 43, 10).to_json();
    EXPECT_EQ(c["seed"], 43);
}

TEST(Verify, LatticeSuitePasses) {
    auto r = run_suite("lattice", 1, 5);
    EXPECT_TRUE(r.all_pass());
    EXPECT_EQ(r.info["message"], "16 classes found");
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite("nope", 1, 1), Error); }
