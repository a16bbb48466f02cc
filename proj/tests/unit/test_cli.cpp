#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "balgraph/cli.hpp"
#include "balgraph/formats.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace balgraph;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BALGRAPH_TEST_DATA) + "/" + name; }

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("balgraph_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }

    std::string write(const std::string& name, const std::string& text) const {
        auto p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST(Cli, StructureWithCardinality) {
    auto r = run({"structure", "-g", data("triangle.g"), "--which", "W", "--group", "Z2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "A^5; |W| = 32\n");
    auto all = run({"structure", "-g", data("k4.g")});
    EXPECT_EQ(all.out, "H: A2^3\nB: A^1 x (2A)^3\nW: A^4\n");
}

TEST(Cli, CheckPicksModeFromFile) {
    auto full = run({"check", "-g", data("loop.g"), "--group", "Z4", "--labels", data("loop_h.lbl")});
    EXPECT_EQ(full.code, 0);
    EXPECT_EQ(full.out, "balanced\n");

    TempDir dir;
    auto edges_only = dir.write("f.lbl", "edge l 1\n");
    auto r = run({"check", "-g", data("loop.g"), "--group", "Z4", "--labels", edges_only});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "not balanced\n");
    auto zero = dir.write("z.lbl", "edge l 0\n");
    EXPECT_EQ(run({"check", "-g", data("loop.g"), "--group", "Z4", "--labels", zero}).code, 0);
    auto partial = dir.write("p.lbl", "vertex v 1\n");
    EXPECT_EQ(run({"check", "-g", data("loop.g"), "--group", "Z4", "--labels", partial}).code, 2);
}

TEST(Cli, BalanceRefusesOutsideDoubleImage) {
    auto r = run({"balance", "-g", data("bowtie_edge.g"), "--group", "Z4", "--labels", data("bowtie_g.lbl")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "not balanceable\n");
    auto v = run({"balanceable", "-g", data("bowtie_edge.g"), "--group", "Z4", "--labels", data("bowtie_g.lbl")});
    EXPECT_EQ(v.code, 1);
}

TEST(Cli, BalanceOutputReparsesAndChecks) {
    TempDir dir;
    auto g_file = dir.write("g.lbl", "vertex u 0\nvertex v 2\nvertex p 0\nvertex q 0\n");
    auto r = run({"balance", "-g", data("bowtie_edge.g"), "--group", "Z4", "--labels", g_file});
    ASSERT_EQ(r.code, 0) << r.err;
    auto g = read_graph_file(data("bowtie_edge.g"));
    auto A = parse_group("Z4");
    auto f = require_edge_labeling(g, parse_labeling(g, A, r.out));
    EXPECT_EQ(format_labeling(g, f), r.out);
    auto h = dir.write("h.lbl", "vertex u 0\nvertex v 2\nvertex p 0\nvertex q 0\n" + r.out);
    EXPECT_EQ(run({"check", "-g", data("bowtie_edge.g"), "--group", "Z4", "--labels", h}).code, 0);
    EXPECT_EQ(run({"oracle-check", "-g", data("bowtie_edge.g"), "--group", "Z4", "--labels", h}).code, 0);
}

TEST(Cli, CoordsAndExtendRoundTrip) {
    TempDir dir;
    auto coords = dir.write("c.txt", "rep 1 1\nrep 2 2\nrep 3 3\nforest a 4\nforest b 5\n");
    auto ext = run({"extend", "-g", data("triangle.g"), "--group", "Z6", "--coords", coords});
    ASSERT_EQ(ext.code, 0) << ext.err;
    EXPECT_EQ(ext.out, "vertex 1 1\nvertex 2 2\nvertex 3 3\nedge a 4\nedge b 5\nedge c 3\n");
    auto labels = dir.write("h.lbl", ext.out);
    auto back = run({"coords", "-g", data("triangle.g"), "--group", "Z6", "--labels", labels});
    EXPECT_EQ(back.code, 0);
    EXPECT_EQ(back.out, "rep 1 1\nrep 2 2\nrep 3 3\nforest a 4\nforest b 5\n");
}

TEST(Cli, CountsAgree) {
    auto fast = run({"count", "-g", data("bowtie_edge.g"), "--group", "Z4", "--which", "H"});
    auto slow = run({"count", "-g", data("bowtie_edge.g"), "--group", "Z4", "--which", "H", "--oracle"});
    EXPECT_EQ(fast.out, "|H| = 32\n");
    EXPECT_EQ(slow.out, fast.out);
}

TEST(Cli, ComponentsAndOracleClasses) {
    auto r = run({"components", "-g", data("bowtie_edge.g"), "-k", "3"});
    EXPECT_EQ(r.out, "con_3 = 3\nclass 1: u v\nclass 2: p\nclass 3: q\n");
    EXPECT_EQ(run({"oracle-classes", "-g", data("bowtie_edge.g"), "-k", "3"}).out, r.out);
    EXPECT_EQ(run({"components", "-g", data("bowtie_edge.g")}).out, "con_1 = 1\nclass 1: u v p q\n");
}

TEST(Cli, CycleBasis) {
    auto r = run({"cycle-basis", "-g", data("b3.g")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, 8), "dim = 2\n");
    auto w = run({"cycle-basis", "-g", data("b3.g"), "--weak", "3"});
    EXPECT_EQ(w.out, "dim = 3\n{a}\n{b}\n{c}\n");
}

TEST(Cli, UsageAndFormatErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"structure"}).code, 2);
    EXPECT_EQ(run({"structure", "-g", data("triangle.g"), "--which", "Q"}).code, 2);
    EXPECT_EQ(run({"count", "-g", data("triangle.g"), "--group", "Z0", "--which", "H"}).code, 2);
    EXPECT_EQ(run({"structure", "-g", data("missing.g")}).code, 2);

    TempDir dir;
    auto bad_graph = dir.write("bad.g", "vertex 1\nvertex 2\nedge a 1 3\n");
    auto r = run({"structure", "-g", bad_graph});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;

    auto bad_labels = dir.write("bad.lbl", "edge a 1\nedge b 7\n");
    auto s = run({"check", "-g", data("triangle.g"), "--group", "Z4", "--labels", bad_labels});
    EXPECT_EQ(s.code, 2);
    EXPECT_NE(s.err.find("line 2"), std::string::npos) << s.err;

    auto help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("structure"), std::string::npos);
}

// Every CLI verdict matches the library, and reports are byte-identical across runs.
TEST(CliProperty, VerdictsMatchLibrary) {
    gen::Rng rng(71);
    TempDir dir;
    auto A = parse_group("Z4");
    for (int i = 0; i < 40; ++i) {
        auto g = gen::multigraph(rng, {5, 7, 0.1, 0.3});
        auto graph = dir.write("g" + std::to_string(i) + ".g", to_text(g));
        const BalanceFrame frame(g);
        auto h = i % 2 ? gen::full_labeling(rng, g, A) : frame.xi_inv(A, gen::full_coordinates(rng, frame, A));
        auto labels = dir.write("h" + std::to_string(i) + ".lbl", format_labeling(g, h));
        auto verts = dir.write("v" + std::to_string(i) + ".lbl", format_labeling(g, h.vertices));

        auto check = run({"check", "-g", graph, "--group", "Z4", "--labels", labels});
        EXPECT_EQ(check.code == 0, frame.is_balanced_full(A, h));
        EXPECT_EQ(run({"check", "-g", graph, "--group", "Z4", "--labels", labels}).out, check.out);
        EXPECT_EQ(run({"balanceable", "-g", graph, "--group", "Z4", "--labels", verts}).code == 0,
                  frame.is_balanceable(A, h.vertices));
        auto bal = run({"balance", "-g", graph, "--group", "Z4", "--labels", verts});
        auto lib = frame.balance(A, h.vertices);
        EXPECT_EQ(bal.code == 0, lib.has_value());
        if (lib) EXPECT_EQ(bal.out, format_labeling(g, *lib));
    }
}
