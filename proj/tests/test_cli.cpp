#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include <hooklab/cli.hpp>

using namespace hooklab;
using nlohmann::json;

namespace
{

struct Result {
    int code;
    std::string out, err;
};

Result cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "hooklab_cli");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string join(const Partition &p)
{
    return p.to_string() == "[]" ? "" : p.to_string();
}

} // namespace

TEST(Cli, DecomposeWorkedExamples)
{
    auto phi_out = cli({"decompose", "--mode", "phi", "-r", "3", "5,4,4,1"});
    ASSERT_EQ(phi_out.code, 0) << phi_out.err;
    EXPECT_EQ(json::parse(phi_out.out), json::parse(R"({"core":[2],"quotient":[[],[1,1],[2]]})"));

    auto psi_out = cli({"decompose", "--mode", "psi", "-r", "3", "14,6,6,1"});
    ASSERT_EQ(psi_out.code, 0) << psi_out.err;
    EXPECT_EQ(json::parse(psi_out.out), json::parse(R"({"kernel":[5,3,3,1],"cofactor":[3,1,1]})"));
}

TEST(Cli, DecomposeRoundTrip)
{
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        const int n = static_cast<int>(rng() % 16);
        const auto all = partitions_up_to(n);
        const auto &lam = all[rng() % all.size()];
        const int r = 1 + static_cast<int>(rng() % 5);
        for (const char *mode : {"phi", "psi"}) {
            auto fwd = cli({"decompose", "--mode", mode, "-r", std::to_string(r), join(lam)});
            ASSERT_EQ(fwd.code, 0) << fwd.err;
            auto back = cli({"decompose", "--mode", mode, "-r", std::to_string(r), "--invert", fwd.out});
            ASSERT_EQ(back.code, 0) << back.err;
            EXPECT_EQ(json::parse(back.out)["partition"], json(lam.part_vector())) << mode << " " << lam.to_string();
        }
    }
}

TEST(Cli, HooksBfCores)
{
    auto h = cli({"hooks", "-r", "1", "--bottom", "6,5,5,3,1,1"});
    ASSERT_EQ(h.code, 0);
    EXPECT_EQ(json::parse(h.out)["hooks"], json::parse("[1,1,1,1,2,2]"));

    auto b = cli({"bf", "-a", "2", "-b", "1", "7,6,4,4,2,1"});
    ASSERT_EQ(b.code, 0);
    EXPECT_EQ(json::parse(b.out)["statistic"], 5);
    EXPECT_EQ(json::parse(b.out)["squares"].size(), 5u);

    auto c = cli({"cores", "-r", "2", "--max-size", "10"});
    ASSERT_EQ(c.code, 0);
    EXPECT_EQ(json::parse(c.out)["cores"], json::parse("[[],[1],[2,1],[3,2,1],[4,3,2,1]]"));
}

TEST(Cli, ListAndVerify)
{
    auto l = cli({"list", "--json"});
    ASSERT_EQ(l.code, 0);
    EXPECT_GE(json::parse(l.out).size(), 30u);
    EXPECT_NE(cli({"list"}).out.find("GF_CORES"), std::string::npos);

    auto v = cli({"verify", "NO", "--cap", "T=8", "--json"});
    ASSERT_EQ(v.code, 0) << v.err;
    const auto j = json::parse(v.out);
    EXPECT_EQ(j["status"], "PASS");
    EXPECT_TRUE(j["first_mismatch"].is_null());

    auto conj = cli({"verify", "CONJ_QT_MOD", "--r", "2", "--cap", "T=6", "--cap", "q=5", "--cap", "t=5", "--json"});
    ASSERT_EQ(conj.code, 0) << conj.err;
    EXPECT_EQ(json::parse(conj.out)["status"], "CONJECTURE-CONSISTENT");

    auto bf = cli({"verify", "BF_GF", "-a", "4", "-b", "2", "--json"});
    ASSERT_EQ(bf.code, 0) << bf.err;
    EXPECT_EQ(json::parse(bf.out)["params"]["r"], 6);
}

TEST(Cli, Ctable)
{
    auto c = cli({"ctable", "--p-cap", "2", "--json"});
    ASSERT_EQ(c.code, 0);
    const auto rows = json::parse(c.out);
    ASSERT_FALSE(rows.empty());
    for (const auto &row : rows) {
        EXPECT_LE(row["m"].get<int>(), 2);
        EXPECT_NE(row["c"].get<long>(), 0);
    }
}

TEST(Cli, ErrorsExitThree)
{
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"decompose", "--mode", "phi", "-r", "3", "5,x"},
             {"decompose", "--mode", "chi", "-r", "3", "5"},
             {"hooks", "-r", "2", "--unknown", "3,1"},
             {"verify", "NOPE"},
             {"verify", "NO", "--cap", "T"},
             {"verify", "MULT_NEW", "--r", "2", "--core", "2"},
             {"verify", "HANJI_MULT", "--rho", "BOGUS"},
             {"bf", "-a", "0", "-b", "1", "3"},
             {},
         }) {
        auto res = cli(args);
        EXPECT_EQ(res.code, 3) << (args.empty() ? "" : args[0]);
        EXPECT_FALSE(res.err.empty());
        EXPECT_EQ(std::count(res.err.begin(), res.err.end(), '\n'), 1);
    }
}
