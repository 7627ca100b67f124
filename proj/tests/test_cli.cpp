#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "homlab");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = homlab::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(HOMLAB_SAMPLES_DIR) + "/" + name; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("homlab_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST(Cli, SolveAndOracleExamples) {
    for (const char* mode : {"solve", "oracle"}) {
        SCOPED_TRACE(mode);
        auto cut = run({mode, "whom", "--target", "loop-edge", "--weights", "maxcut", "-g", sample("c5.graph")});
        EXPECT_EQ(cut.code, 0);
        EXPECT_EQ(first_line(cut.out), "optimum 4");
        auto p3 = run({mode, "lshom", "--target", "P3", "-g", sample("k2.graph")});
        EXPECT_EQ(p3.code, 2);
        EXPECT_EQ(p3.out, "no\n");
        auto k3 = run({mode, "lihom", "--target", "K3", "-g", sample("star3.graph")});
        EXPECT_EQ(k3.code, 2);
        EXPECT_EQ(k3.out, "no\n");
    }
}

TEST(Cli, SolveAgreesWithOracleOnSamples) {
    for (const char* g : {"c4.graph", "c5.graph", "k2.graph", "k3.graph", "p5.graph", "star3.graph", "k1.graph"})
        for (const char* t : {"P3", "C4", "K3"}) {
            for (const char* problem : {"lihom", "lbhom"}) {
                auto a = run({"solve", problem, "-t", t, "-g", sample(g)});
                auto b = run({"oracle", problem, "-t", t, "-g", sample(g)});
                EXPECT_EQ(a.code, b.code) << problem << ' ' << g << ' ' << t;
                EXPECT_EQ(first_line(a.out), first_line(b.out));
            }
            auto w = run({"solve", "whom", "-t", t, "-g", sample(g)});
            auto wo = run({"oracle", "whom", "-t", t, "-g", sample(g)});
            EXPECT_EQ(first_line(w.out), first_line(wo.out)) << g << ' ' << t;
        }
}

TEST(Cli, ThresholdAndWitness) {
    auto yes = run({"solve", "whom", "-t", "loop-edge", "-w", "maxcut", "--threshold", "4", "-g", sample("c5.graph")});
    EXPECT_EQ(yes.code, 0);
    EXPECT_NE(yes.out.find("threshold 4\n"), std::string::npos);
    EXPECT_NE(yes.out.find("m 4 "), std::string::npos);
    auto no = run({"solve", "whom", "-t", "loop-edge", "-w", "maxcut", "--threshold", "5", "-g", sample("c5.graph")});
    EXPECT_EQ(no.code, 2);
    auto surj = run({"oracle", "local", "--variant", "surj", "-t", "Ck:5", "-g", sample("c5.graph")});
    EXPECT_EQ(surj.code, 0);
    EXPECT_EQ(surj.out, "yes\nm 0 0\nm 1 1\nm 2 2\nm 3 3\nm 4 4\n");
}

TEST(Cli, Errors) {
    EXPECT_EQ(run({"solve", "whom", "-t", "nonsense", "-g", sample("c5.graph")}).code, 1);
    EXPECT_EQ(run({"solve", "whom", "-t", "P3", "-g", "/nonexistent.graph"}).code, 1);
    EXPECT_EQ(run({"solve", "lshom", "-t", "P4", "-g", sample("c5.graph")}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"solve"}).code, 1);
    auto budget = run({"oracle", "whom", "-t", "loop-edge", "-w", "maxcut", "--nodes", "3", "-g", sample("c5.graph")});
    EXPECT_EQ(budget.code, 3);
    EXPECT_NE(budget.err.find("budget"), std::string::npos);
}

TEST(Cli, CheckStar) {
    auto c4 = run({"check-star", sample("c4.graph")});
    EXPECT_EQ(c4.code, 0);
    EXPECT_EQ(first_line(c4.out), "false");
    EXPECT_NE(c4.out.find("witness c\n"), std::string::npos);
    auto p3 = run({"check-star", "-t", "P3"});
    EXPECT_EQ(p3.out, "true\n");
}

TEST(Cli, SeparatorAndInducedPath) {
    auto p5 = run({"separator", sample("p5.graph")});
    EXPECT_EQ(p5.code, 0);
    EXPECT_EQ(p5.out, "size 1\nS 2\nV1 0 1\nV2 3 4\n");
    auto k3 = run({"separator", sample("k3.graph"), "--max-size", "1"});
    EXPECT_EQ(k3.code, 2);
    EXPECT_EQ(k3.out, "none\n");
    EXPECT_EQ(run({"separator", sample("p5.graph"), "--beta", "1/3"}).code, 1);
    EXPECT_EQ(run({"induced-path", sample("p5.graph")}).out, "longest-induced-path 5\n");
    EXPECT_EQ(run({"induced-path", sample("p5.graph"), "--cap", "3"}).out, "longest-induced-path >3\n");
}

TEST(Cli, SegmentsToGraph) {
    auto r = run({"segments-to-graph", sample("grid3.seg")});
    EXPECT_EQ(r.code, 0);
    std::istringstream in(r.out);
    const homlab::Graph g = homlab::io::read_graph(in);
    EXPECT_EQ(g.vertex_count(), 6);
    EXPECT_EQ(g.edge_count(), 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j)
            EXPECT_TRUE(g.adjacent(i, j));
    EXPECT_EQ(first_line(r.out), "# slopes 2");
}

TEST(Cli, GenerateWritesFiles) {
    const fs::path dir = scratch("generate");
    const std::string prefix = (dir / "oct").string();
    auto r = run({"generate", "oct", "--cnf", "no", "--graph", sample("k2.graph"), "-k", "1", "-o", prefix});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("vertices 20\n"), std::string::npos);
    EXPECT_NE(r.out.find("threshold 17\n"), std::string::npos);
    for (const char* ext : {".graph", ".target", ".weights", ".lists", ".seg", ".info"})
        EXPECT_TRUE(fs::exists(prefix + ext)) << ext;
    auto solved = run({"solve", "whom", "-g", prefix + ".graph", "--target-file", prefix + ".target", "-w",
                       prefix + ".weights", "-l", prefix + ".lists", "--threshold", "17"});
    EXPECT_EQ(solved.code, 0) << solved.out << solved.err;
    auto seg = run({"segments-to-graph", prefix + ".seg"});
    EXPECT_NE(seg.out.find("n 20\n"), std::string::npos);

    auto ms = run({"generate", "maxcut-segments", "-g", sample("k2.graph"), "-k", "1"});
    EXPECT_NE(ms.out.find("vertices 40\n"), std::string::npos);
    EXPECT_NE(ms.out.find("threshold 74\n"), std::string::npos);

    const fs::path empty_cnf = dir / "empty.cnf";
    std::ofstream(empty_cnf) << "p cnf 0 0\n";
    auto e = run({"generate", "maxcut", "--cnf", empty_cnf.string(), "-o", (dir / "empty").string()});
    EXPECT_EQ(e.code, 0) << e.err;
    EXPECT_EQ(slurp(dir / "empty.graph"), "n 0\n");
    EXPECT_NE(e.out.find("threshold 0\n"), std::string::npos);
    fs::remove_all(dir);
}

TEST(Cli, VerifyReductions) {
    auto nae = run({"verify", "maxcut", "--cnf", sample("nae_triangle.cnf")});
    EXPECT_EQ(nae.code, 0) << nae.err;
    EXPECT_NE(nae.out.find("equivalent true\n"), std::string::npos);
    auto oct = run({"verify", "oct", "-g", sample("k2.graph"), "-k", "2", "--jobs", "2"});
    EXPECT_EQ(oct.code, 0);
    EXPECT_EQ(oct.out, "source no\ngenerated no\narrangement matches\nequivalent true\n");
    auto path = run({"verify", "lshom-path", "--cnf", sample("sat_two_vars.cnf"), "-k", "4"});
    EXPECT_EQ(path.code, 0) << path.err;
    EXPECT_NE(path.out.find("source yes\n"), std::string::npos);
    auto cycle = run({"verify", "lshom-cycle", "--cnf", sample("unsat_one_var.cnf"), "-k", "3"});
    EXPECT_EQ(cycle.code, 0) << cycle.err;
    EXPECT_NE(cycle.out.find("source no\n"), std::string::npos);
    auto pendant = run({"verify", "lshom-loop-pendant", "--cnf", sample("sat_three_lits.cnf")});
    EXPECT_EQ(pendant.code, 0) << pendant.err;
    auto c4 = run({"verify", "c4", "-g", sample("c5.graph"), "-k", "2"});
    EXPECT_EQ(c4.out, "source yes\ngenerated yes\narrangement matches\nequivalent true\n");
    EXPECT_EQ(run({"verify", "random-2dir"}).code, 1);
    EXPECT_EQ(run({"verify", "oct", "-g", sample("k2.graph")}).code, 1);
}

TEST(Cli, OutputIsReproducible) {
    const std::vector<std::vector<std::string>> cmds = {
        {"generate", "random-2dir", "--count", "25", "--seed", "4"},
        {"generate", "lshom-cycle", "--cnf", sample("sat_two_vars.cnf"), "-k", "5"},
        {"solve", "whom", "-t", "oct", "-w", "oct", "-g", sample("p5.graph")},
        {"solve", "lshom", "-t", "C4", "-g", sample("c4.graph")},
    };
    for (const auto& c : cmds) {
        auto a = run(c), b = run(c);
        EXPECT_EQ(a.code, b.code);
        EXPECT_EQ(a.out, b.out);
    }
    const fs::path d1 = scratch("repro1"), d2 = scratch("repro2");
    for (const fs::path& d : {d1, d2})
        run({"generate", "random-2dir", "--count", "30", "--seed", "11", "-o", (d / "r").string()});
    for (const char* ext : {".graph", ".seg", ".weights", ".info"})
        EXPECT_EQ(slurp(d1 / (std::string("r") + ext)), slurp(d2 / (std::string("r") + ext))) << ext;
    run({"generate", "random-2dir", "--count", "30", "--seed", "12", "-o", (d2 / "r").string()});
    EXPECT_NE(slurp(d1 / "r.seg"), slurp(d2 / "r.seg"));
    fs::remove_all(d1);
    fs::remove_all(d2);
}
