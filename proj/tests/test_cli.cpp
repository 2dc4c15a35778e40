// Runs the mdim executable and checks outputs and exit codes.

#include "mdim/io.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mdim;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
};

/// Runs `mdim <args>` through the shell. Stderr is discarded unless merged.
Result run(const std::string& args, bool merge_stderr = false)
{
    const std::string cmd = std::string("'") + MDIM_CLI + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr)
        return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    while (auto n = std::fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("mdim_cli_") + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const
    {
        std::ofstream(path(name)) << text;
        return path(name);
    }

    std::string write_set(const std::string& name, const Params& p, const std::vector<Vertex>& vs) const
    {
        return write(name, dump(to_json(LandmarkSet(p, vs))));
    }

    static std::string read(const std::string& file)
    {
        std::ifstream in(file);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path dir_;
};

} // namespace

TEST_F(Cli, Classify)
{
    EXPECT_EQ(run("classify --n 3,4,6").out, "Middle\n");
    EXPECT_EQ(run("classify --n 6,7,7").out, "Lower\n");
    EXPECT_EQ(run("classify --n 3,3,8").out, "Upper\n");
    EXPECT_EQ(run("classify --n 3,4,6").code, 0);
    EXPECT_EQ(run("classify --n 3,3").code, 2);
    EXPECT_EQ(run("classify --n 2,3,3").code, 2);
    EXPECT_EQ(run("classify --n 5,3,4").code, 2);
    EXPECT_EQ(run("classify --n a,b,c").code, 2);
}

TEST_F(Cli, UsageErrors)
{
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("verify").code, 2);
    EXPECT_EQ(run("verify " + path("missing.json")).code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, ConstructEven)
{
    const auto r = run("construct --n 5,6,11");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, dump(to_json(construct_middle(Params::make(5, 6, 11)).landmarks)));
    const auto w = parse_landmark_set(r.out);
    EXPECT_EQ(matrix_rows(w.side(Side::Left)), oracle::golden_5_6_11.left);
    EXPECT_EQ(matrix_rows(w.side(Side::Right)), oracle::golden_5_6_11.right);
}

TEST_F(Cli, ConstructPlusOneAndTrace)
{
    const auto out = path("w.json");
    const auto trace = path("trace.json");
    ASSERT_EQ(run("construct --n 3,4,6 --plus-one --out " + out + " --trace " + trace).code, 0);
    const auto w = parse_landmark_set(read(out));
    EXPECT_EQ(w.size(), 13U);
    EXPECT_EQ(w.params(), Params::make(4, 5, 7));
    const auto t = Json::parse(read(trace));
    EXPECT_EQ(t["parity"], "even");
    EXPECT_EQ(t["multiplicities"], Json::array({2, 2, 2}));
}

TEST_F(Cli, ConstructRejectsUpperCone)
{
    const auto r = run("construct --n 3,3,8", true);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("upper cone"), std::string::npos);
}

TEST_F(Cli, VerifyK457Reference)
{
    const auto file = write_set("ref.json", Params::make(4, 5, 7), oracle::k457_reference_set);
    for (const std::string method : {"footprint", "distance", "both"}) {
        const auto r = run("verify " + file + " --method " + method);
        EXPECT_EQ(r.code, 0) << method;
        const auto j = Json::parse(r.out);
        EXPECT_TRUE(j["resolving"].get<bool>());
        EXPECT_TRUE(j["domination"]["locating_total_dominating"].get<bool>());
    }
    EXPECT_EQ(run("verify " + file + " --method bogus").code, 2);
}

TEST_F(Cli, VerifySharkTeeth)
{
    const auto file = write_set("shark.json", Params::make(3, 4, 5), oracle::shark_teeth_345);
    const auto r = run("verify " + file);
    EXPECT_EQ(r.code, 1);
    const auto j = Json::parse(r.out);
    EXPECT_FALSE(j["resolving"].get<bool>());
    EXPECT_EQ(j["witness"], Json::parse("[[1,1,2],[1,1,3]]"));
    EXPECT_EQ(j["methods"].size(), 2U);
}

TEST_F(Cli, VerifyMalformed)
{
    EXPECT_EQ(run("verify " + write("bad.json", "{\"n\": [3,3,3], \"landmarks\": [")).code, 2);
    EXPECT_EQ(run("verify " + write("extra.json", R"({"n":[3,3,3],"landmarks":[],"x":0})")).code, 2);
}

TEST_F(Cli, Detect)
{
    const auto built = write("built.json", run("construct --n 5,7,11").out);
    const auto clean = run("detect " + built);
    ASSERT_EQ(clean.code, 0);
    for (const auto& [kind, list] : Json::parse(clean.out)["witnesses"].items())
        EXPECT_TRUE(list.empty()) << kind;

    const auto bad = run("detect " + write_set("bad.json", Params::make(3, 3, 3), oracle::bad_4_cycle_333));
    ASSERT_EQ(bad.code, 0);
    EXPECT_EQ(Json::parse(bad.out)["witnesses"]["bad_4_cycle"].size(), 1U);

    const auto looped = extend_triple_loop(LandmarkSet(Params::make(3, 4, 4), oracle::rainbow_basic_344));
    const auto tri = run("detect " + write("tri.json", dump(to_json(looped))));
    ASSERT_EQ(tri.code, 0);
    const auto j = Json::parse(tri.out);
    EXPECT_FALSE(j["witnesses"]["triple_loop"].empty());
    EXPECT_FALSE(j["witnesses"]["rainbow_2_2_triangle"].empty());
    EXPECT_EQ(j["notes"].back(), "triple loop together with a rainbow 2-2-triangle: not resolving");

    EXPECT_EQ(run("detect " + write("empty.json", R"({"n":[3,3,3],"landmarks":[]})")).code, 2);
}

TEST_F(Cli, SearchExhaustive)
{
    const auto r = run("search --n 3,3,3 --mode exhaustive --max-size 6");
    ASSERT_EQ(r.code, 0);
    const auto j = Json::parse(r.out);
    EXPECT_TRUE(j["conclusive"].get<bool>());
    EXPECT_EQ(j["minimum"], 6);
    EXPECT_EQ(j["refuted_sizes"], Json::array({1, 2, 3, 4, 5}));

    EXPECT_EQ(run("search --n 3,3,3 --max-size 2").code, 1);
    EXPECT_EQ(run("search --n 5,6,11 --mode exhaustive --budget 100000").code, 1);
    EXPECT_EQ(run("search --n 3,3,3 --mode sideways").code, 2);
}

TEST_F(Cli, SearchBudgetFromEnvironment)
{
    const std::string cmd = "env METRIC_DIM_BUDGET=1000 '" + std::string(MDIM_CLI) + "' search --n 3,3,3 2>/dev/null";
    const int status = std::system(cmd.c_str());
    EXPECT_EQ(WEXITSTATUS(status), 1);
    const std::string bad = "env METRIC_DIM_BUDGET=lots '" + std::string(MDIM_CLI) + "' search --n 3,3,3 2>/dev/null";
    EXPECT_EQ(WEXITSTATUS(std::system(bad.c_str())), 2);
}

TEST_F(Cli, SearchGreedy)
{
    const auto r = run("search --n 3,3,8 --mode greedy --seed 7", true);
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("resolving set of size"), std::string::npos);
    const auto a = run("search --n 3,3,8 --mode greedy --seed 7");
    const auto b = run("search --n 3,3,8 --mode greedy --seed 7");
    EXPECT_EQ(a.out, b.out);
    const auto j = Json::parse(a.out);
    EXPECT_EQ(j["seed"], 7);
    EXPECT_FALSE(j["exhaustive"].get<bool>());
    EXPECT_EQ(j["upper_bound"], greedy_resolving(Params::make(3, 3, 8), 7).size());
}

TEST_F(Cli, ExportDot)
{
    const auto file = write_set("ref.json", Params::make(4, 5, 7), oracle::k457_reference_set);
    const auto a = run("export-dot " + file);
    const auto b = run("export-dot " + file);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, to_dot(LandmarkSet(Params::make(4, 5, 7), oracle::k457_reference_set)));
    EXPECT_EQ(run("export-dot " + write("bad.json", "nope")).code, 2);
}

TEST_F(Cli, Manifest)
{
    const auto manifest = path("manifest.json");
    ASSERT_EQ(run("--manifest " + manifest + " search --n 3,3,8 --mode greedy --seed 3").code, 0);
    const auto m = Json::parse(read(manifest));
    EXPECT_EQ(m["command"], "search");
    EXPECT_EQ(m["seed"], 3);
    EXPECT_EQ(m["exit_code"], 0);
    EXPECT_TRUE(m.contains("version"));
    EXPECT_TRUE(m["duration_seconds"].is_number());

    ASSERT_EQ(run("construct --n 3,3,8 --manifest " + manifest).code, 2);
    EXPECT_EQ(Json::parse(read(manifest))["exit_code"], 2);
}

TEST_F(Cli, ConstructVerifyRoundTrip)
{
    for (const auto& p : middle_cone(12)) {
        const std::string n =
            std::to_string(p.n1()) + "," + std::to_string(p.n2()) + "," + std::to_string(p.n3());
        const auto file = path("w.json");
        ASSERT_EQ(run("construct --n " + n + " --out " + file).code, 0) << n;
        ASSERT_EQ(run("verify " + file).code, 0) << n;
    }
}
