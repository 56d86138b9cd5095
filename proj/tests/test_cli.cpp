#include "trialis/magic_square.hpp"
#include "trialis/verify.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <sys/wait.h>

using namespace trialis;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + std::string(TRIALIS_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::filesystem::path tmpfile(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("trialis_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, TablesMatchGoldens) {
    for (const auto& name : table_names()) {
        const auto r = cli("table " + name);
        EXPECT_EQ(r.status, 0) << name;
        EXPECT_EQ(r.out, read_golden(std::string(TRIALIS_GOLDEN_DIR) + "/" + name + ".txt")) << name;
    }
}

TEST(Cli, DeligneExample) {
    const auto r = cli("dims deligne --lambda -1/5 --module Y2");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "27000\n");
    EXPECT_EQ(cli("--machine dims deligne --lambda -1/5 --module Y2").out, "Y2=27000\n");
}

TEST(Cli, MachineOutputIsKeyValue) {
    const std::regex line("[^=\\s]+=[-0-9A-Za-z/(),.'\\[\\]^]*");
    for (const std::string args : {"--machine alg info O", "--machine dims subexceptional --a 1/2 -k 2",
                                   "--machine diagram info E7[7]", "--machine triality dims"}) {
        const auto r = cli(args);
        EXPECT_EQ(r.status, 0) << args;
        std::istringstream is(r.out);
        std::string l;
        int n = 0;
        while (std::getline(is, l)) {
            EXPECT_TRUE(std::regex_match(l, line)) << args << ": " << l;
            ++n;
        }
        EXPECT_GT(n, 0) << args;
    }
    const auto r = cli("--machine dims subexceptional --a 1/2");
    EXPECT_NE(r.out.find("/"), std::string::npos);
}

TEST(Cli, MagicBuildThenIdentify) {
    const auto f = tmpfile("e7.sc");
    const auto b = cli("magic build H O --form split --out " + f.string());
    EXPECT_EQ(b.status, 0);
    const auto r = cli("roots identify " + f.string());
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "E7\n");
    // reload equals the in-memory bracket tensor
    std::ifstream in(f);
    const auto l = LieAlgebra::read(in);
    EXPECT_EQ(l, build_split_form("H", "O").L);
    std::filesystem::remove(f);
}

TEST(Cli, CompactBuildRoundTrip) {
    const auto f = tmpfile("g2.sc");
    EXPECT_EQ(cli("magic build R H --out " + f.string()).status, 0);
    std::ifstream in(f);
    EXPECT_EQ(LieAlgebra::read(in),
              build_magic_square(CompositionAlgebra::named("R"), CompositionAlgebra::named("H")).L);
    // no cartan lines: identification is refused
    EXPECT_EQ(cli("roots identify " + f.string()).status, 2);
    std::filesystem::remove(f);
}

TEST(Cli, ParseErrors) {
    EXPECT_EQ(cli("").status, 2);
    EXPECT_EQ(cli("frobnicate").status, 2);
    EXPECT_EQ(cli("table nonsense").status, 2);
    EXPECT_EQ(cli("dims deligne --lambda 1/2 --bogus").status, 2);
    EXPECT_EQ(cli("magic build X O").status, 2);
    EXPECT_EQ(cli("diagram info Z9[1]").status, 2);
    EXPECT_EQ(cli("--help").status, 0);
}

TEST(Cli, VerificationStatus) {
    EXPECT_EQ(cli("verify-all --only 6").status, 0);
    EXPECT_EQ(cli("jordan check --samples 20").status, 0);
    EXPECT_EQ(cli("triality inclusion H").status, 0);
}

TEST(Cli, OtherVerbs) {
    EXPECT_EQ(cli("roots weyl E8 0,0,0,0,0,0,0,1").out, "248\n");
    EXPECT_EQ(cli("roots identify A2xA2").out, "A2xA2\n");
    EXPECT_EQ(cli("dims vogel --algebra e8 --module Y2").out, "27000\n");
    EXPECT_EQ(cli("dims vogel --point -2,2,5").out, "24\n");
    EXPECT_EQ(cli("dims series --weight 0,0,0,1 --a 8").out, "3875\n");
    EXPECT_EQ(cli("construct minuscule --path P1xP2").out, "P1xP2 -> G(2,5) -> S5 -> OP2 -> Gw(O3,O6)\n");
    EXPECT_EQ(cli("alg norm Os 1,1,0,0,0,0,0,0").status, 0);
    const auto d = cli("--machine diagram asym D7[4]");
    EXPECT_NE(d.out.find("name=P3xQ4"), std::string::npos);
    EXPECT_EQ(cli("series check --a 4 -k 2").status, 0);
}

TEST(Cli, Deterministic) {
    EXPECT_EQ(cli("table stable").out, cli("table stable").out);
    // table output does not depend on the worker count
    EXPECT_EQ(cli("table round2", "TRIALIS_THREADS=1").out, cli("table round2", "TRIALIS_THREADS=3").out);
}
