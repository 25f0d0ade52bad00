#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "nuij/serde.hpp"

#ifndef NUIJ_CLI_PATH
#error "NUIJ_CLI_PATH must point at the built CLI binary"
#endif

namespace nuij {
namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const std::string out_path = ::testing::TempDir() + "nuij_cli_out.txt";
    const std::string err_path = ::testing::TempDir() + "nuij_cli_err.txt";
    const std::string cmd = std::string(NUIJ_CLI_PATH) + " " + args + " >" +
                            out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

json parse_single_json(const std::string& out) {
    // Exactly one newline-terminated document.
    EXPECT_FALSE(out.empty());
    EXPECT_EQ(out.back(), '\n');
    EXPECT_EQ(out.find('\n'), out.size() - 1);
    return json::parse(out);
}

TEST(Cli, CheckNuijMember) {
    RunResult r = run(R"(check-nuij --seq '{"d":3,"a":["1","0","0"]}')");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.err.empty());
    json doc = parse_single_json(r.out);
    EXPECT_TRUE(doc.at("member").get<bool>());
    EXPECT_FALSE(doc.contains("witness_nonreal_root_count"));
    EXPECT_EQ(doc.at("q_poly").get<UniPoly>(),
              q_poly(NuijCandidate(3, {Rational(1), Rational(0), Rational(0)})));
}

TEST(Cli, CheckNuijNonMember) {
    RunResult r = run(R"(check-nuij --seq '{"d":2,"a":["1","1"]}')");
    EXPECT_EQ(r.code, 1);
    json doc = parse_single_json(r.out);
    EXPECT_FALSE(doc.at("member").get<bool>());
    EXPECT_EQ(doc.at("witness_nonreal_root_count").get<int>(), 2);
}

TEST(Cli, FromToeplitzUnitExample) {
    RunResult r = run("from-toeplitz --alpha 1 --beta 1 --d 5");
    EXPECT_EQ(r.code, 0);
    json doc = parse_single_json(r.out);
    EXPECT_EQ(doc.at("d").get<int>(), 5);
    EXPECT_EQ(doc.at("a"),
              json::parse(R"(["1","0","0","0","0"])"));
}

TEST(Cli, CheckUdrRejectsCounterexample) {
    RunResult r = run(R"(check-udr --seq '{"d":3,"a":["2","1","0"]}')");
    EXPECT_EQ(r.code, 1);
    json doc = parse_single_json(r.out);
    EXPECT_FALSE(doc.at("member").get<bool>());
    EXPECT_EQ(doc.at("failed_index").get<int>(), 3);
    EXPECT_EQ(doc.at("residual").get<QuadExt>(),
              QuadExt(Rational(-2, 3), Rational(2, 3), Rational(2)));
}

TEST(Cli, CheckUdrAcceptsGeneratedSequence) {
    // udr_sequence(3, 2, 4) = (3, 5/2, 7/6, 3/8).
    RunResult r = run(R"(check-udr --seq '{"d":4,"a":["3","5/2","7/6","3/8"]}')");
    EXPECT_EQ(r.code, 0);
    json doc = parse_single_json(r.out);
    EXPECT_EQ(doc.at("alpha").get<QuadExt>(), QuadExt(Rational(3)));
    ASSERT_EQ(doc.at("beta").size(), 1u);
    EXPECT_EQ(doc.at("beta")[0].get<QuadExt>(), QuadExt(Rational(2)));
}

TEST(Cli, CheckUdrDegreeOneAlwaysAccepts) {
    // At d = 1 the representation is independent of beta; the witness
    // reports the conventional beta = 0.
    RunResult r = run(R"(check-udr --seq '{"d":1,"a":["-7/2"]}')");
    EXPECT_EQ(r.code, 0);
    json doc = parse_single_json(r.out);
    EXPECT_EQ(doc.at("alpha").get<QuadExt>(), QuadExt(Rational(-7, 2)));
    ASSERT_EQ(doc.at("beta").size(), 1u);
    EXPECT_TRUE(doc.at("beta")[0].get<QuadExt>().is_zero());
}

TEST(Cli, ComposeFoldsSequences) {
    RunResult r = run(
        R"(compose --seq '{"d":4,"a":["1","0","0","0"]}' --seq '{"d":4,"a":["1","0","0","0"]}')");
    EXPECT_EQ(r.code, 0);
    json doc = parse_single_json(r.out);
    EXPECT_EQ(doc.at("a"), json::parse(R"(["2","1","0","0"])"));
}

TEST(Cli, VerifyDetrep) {
    RunResult r = run(R"(verify-detrep --roots '["0","0"]' --alpha 1 --beta 1)");
    EXPECT_EQ(r.code, 0);
    json doc = parse_single_json(r.out);
    EXPECT_TRUE(doc.at("equal").get<bool>());
    BiPoly expected =
        BiPoly::term(2, 0, Rational(1)) + BiPoly::term(1, 1, Rational(2));
    EXPECT_EQ(doc.at("pencil").get<BiPoly>(), expected);
}

TEST(Cli, VerifyShift) {
    RunResult r = run(R"(verify-shift --seq '{"d":4,"a":["1/2","-3","7/5","0"]}')");
    EXPECT_EQ(r.code, 0);
    json doc = parse_single_json(r.out);
    EXPECT_TRUE(doc.at("equal").get<bool>());
}

TEST(Cli, Viete) {
    RunResult r = run(R"(viete --roots '["1","2","3"]')");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(parse_single_json(r.out), json::parse(R"(["6","11","6"])"));
}

TEST(Cli, PencilRootsCsv) {
    RunResult r = run(
        R"(pencil-roots --roots '["1","-1"]' --seq '{"d":2,"a":["1","0"]}' )"
        R"(--s-min -1 --s-max 1 --steps 3 --width 1/100)");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.err.empty());

    std::istringstream lines(r.out);
    std::string line;
    ASSERT_TRUE(std::getline(lines, line));
    EXPECT_EQ(line, "s,root_index,interval_lo,interval_hi,multiplicity");

    // p = (z+1)(z-1); sections z^2 + 2sz - 1 are hyperbolic with two
    // distinct roots at every s, so two rows per grid point, sorted.
    std::vector<std::string> expected_s{"-1", "-1", "0", "0", "1", "1"};
    std::vector<std::string> seen_s;
    Rational prev_lo;
    std::string prev_s;
    int mult_sum = 0;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string s, idx, lo, hi, mult;
        ASSERT_TRUE(std::getline(fields, s, ','));
        ASSERT_TRUE(std::getline(fields, idx, ','));
        ASSERT_TRUE(std::getline(fields, lo, ','));
        ASSERT_TRUE(std::getline(fields, hi, ','));
        ASSERT_TRUE(std::getline(fields, mult, ','));
        seen_s.push_back(s);
        Rational lo_q = Rational::parse(lo), hi_q = Rational::parse(hi);
        EXPECT_LE(hi_q - lo_q, Rational(1, 100));
        if (s == prev_s) {
            EXPECT_LT(prev_lo, lo_q); // sorted within one section
            EXPECT_EQ(idx, "1");
        } else {
            EXPECT_EQ(idx, "0");
            mult_sum = 0;
        }
        mult_sum += std::stoi(mult);
        EXPECT_LE(mult_sum, 2);
        prev_s = s;
        prev_lo = lo_q;
    }
    EXPECT_EQ(seen_s, expected_s);
}

TEST(Cli, UsageErrorsExitTwo) {
    RunResult unknown = run("frobnicate");
    EXPECT_EQ(unknown.code, 2);
    EXPECT_FALSE(unknown.err.empty());

    RunResult missing = run("check-nuij");
    EXPECT_EQ(missing.code, 2);
    EXPECT_TRUE(missing.out.empty());
    EXPECT_FALSE(missing.err.empty());

    RunResult bad_json = run("check-nuij --seq 'not json'");
    EXPECT_EQ(bad_json.code, 2);
    EXPECT_TRUE(bad_json.out.empty());
    EXPECT_FALSE(bad_json.err.empty());

    RunResult bad_shape = run(R"(check-nuij --seq '{"d":2,"a":["1"]}')");
    EXPECT_EQ(bad_shape.code, 2);

    RunResult bad_rational = run(R"(viete --roots '["1.5"]')");
    EXPECT_EQ(bad_rational.code, 2);

    // Non-hyperbolic section is a precondition violation, not a "no".
    RunResult bad_section = run(
        R"(pencil-roots --roots '["0","0"]' --seq '{"d":2,"a":["0","1"]}' )"
        R"(--s-min 1 --s-max 1 --steps 1 --width 1/10)");
    EXPECT_EQ(bad_section.code, 2);
    EXPECT_FALSE(bad_section.err.empty());
}

TEST(Cli, HelpExitsZero) {
    RunResult help = run("--help");
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("check-nuij"), std::string::npos);
}

} // namespace
} // namespace nuij
