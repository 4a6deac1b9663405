#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "cli/cli.hpp"
#include "lplanar/io.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = lplanar::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(LPLANAR_SOURCE_DIR) + "/data/samples/" + name; }

bool has(const std::string& s, const std::string& pat) { return s.find(pat) != std::string::npos; }

}  // namespace

TEST_CASE("check commands exit 0 on accept and 1 on reject") {
    auto r = run({"check-bitonic", sample("diamond.dg"), "--format", "structured"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "format: lplanar-result/1\n"));
    CHECK(has(r.out, "verdict: accept\n"));
    CHECK(has(r.out, "rank 1 s\n"));
    CHECK(has(r.out, "embedding: begin\n"));
    auto m = run({"check-monotone", sample("octahedron.dg")});
    CHECK(m.code == 1);
    CHECK(has(m.out, "reject"));
    CHECK(run({"check-bitonic", sample("octahedron.dg")}).code == 0);
    CHECK(run({"check-fixed", sample("fan.dg")}).code == 0);
    CHECK(run({"check-fixed", sample("fan.dg"), "--monotone"}).code == 1);
    CHECK(run({"check-fixed", sample("diamond.dg"), sample("diamond.emb")}).code == 0);
    CHECK(run({"check-ports", sample("diamond.dg"), sample("diamond.emb"), sample("diamond.labels")}).code == 0);
    auto bad = run({"check-ports", sample("diamond.dg"), sample("diamond.emb"), sample("diamond-bad.labels"), "--format",
                    "structured"});
    CHECK(bad.code == 1);
    CHECK(has(bad.out, "stage: face-equation\n"));
}

TEST_CASE("modality prefilter rejects the alternating 6-wheel") {
    auto r = run({"modality", sample("wheel6-alt.dg"), "--min-over-embeddings", "--format", "structured"});
    CHECK(r.code == 1);
    CHECK(has(r.out, "min_max_modality: 6\n"));
    CHECK(has(r.out, "four_modal: no\n"));
    CHECK(run({"modality", sample("diamond.dg")}).code == 0);
}

TEST_CASE("draw output renders from stdin") {
    auto d = run({"draw", sample("diamond.dg"), "--monotone"});
    REQUIRE(d.code == 0);
    CHECK(has(d.out, "ldrawing diamond\n"));
    auto svg = run({"render", "-"}, d.out);
    CHECK(svg.code == 0);
    CHECK(has(svg.out, "<svg"));
    CHECK(svg.err.empty());
    CHECK(run({"render", "-"}, d.out).out == svg.out);
    CHECK(run({"draw", sample("octahedron.dg"), "--monotone"}).code == 1);
    // a bare drawing needs the graph passed separately
    auto bare = run({"render", "-"}, "ldrawing d\nv 0 1 1\nv 1 2 2\n");
    CHECK(bare.code == 2);
}

TEST_CASE("input errors exit 2 with file and line") {
    auto r = run({"check-bitonic", "-"}, "digraph x\na -> b\nb -> a\na -> a\n");
    CHECK(r.code == 2);
    CHECK(has(r.err, "<stdin>:4"));
    CHECK(run({"check-bitonic", sample("missing.dg")}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check-bitonic", sample("diamond.dg"), "--format", "xml"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"check-fixed", sample("diamond.dg")}).code == 2);
    CHECK(run({"oracle", "sweep", "--check", "drawing", "--max-n", "7"}).code == 2);
}

TEST_CASE("reduce writes the graph and its role sidecar") {
    auto dir = std::filesystem::temp_directory_path() / "lplanar_cli_test";
    std::filesystem::create_directories(dir);
    auto out = (dir / "rect.dg").string();
    REQUIRE(run({"reduce", sample("rect.hv"), "-o", out}).code == 0);
    auto g = lplanar::parse_graph(lplanar::read_file(out));
    CHECK(g.graph.num_vertices() == 32);
    CHECK(has(lplanar::read_file(out + ".roles"), "v a.c center 0\n"));
    CHECK_FALSE(std::filesystem::exists(out + ".tmp"));
    std::filesystem::remove_all(dir);
    auto k4 = run({"reduce", "-"}, "hvgraph k4\ne a b H\ne a c H\ne a d H\ne b c V\ne b d V\ne c d V\n");
    CHECK(k4.code == 2);
    CHECK(has(k4.err, "more than two H-edges"));
}

TEST_CASE("oracle sweep is deterministic") {
    auto a = run({"oracle", "sweep", "--max-n", "5", "--random", "20", "--random-max-n", "9", "--seed", "3"});
    CHECK(a.code == 0);
    CHECK(has(a.out, "mismatches=0"));
    CHECK(run({"oracle", "sweep", "--max-n", "5", "--random", "20", "--random-max-n", "9", "--seed", "3"}).out == a.out);
    auto t = run({"oracle", "sweep", "--max-n", "5", "--check", "drawing"});
    CHECK(t.code == 0);
    auto m = run({"oracle", "sweep", "--max-n", "5", "--check", "monotone", "--format", "structured"});
    CHECK(m.code == 0);
}
