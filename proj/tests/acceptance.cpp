// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lplanar/ldraw.hpp"
#include "lplanar/oracle.hpp"
#include "lplanar/portcheck.hpp"
#include "lplanar/reduction.hpp"
#include "lplanar/variable.hpp"

using namespace lplanar;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, const Outcome& o, double secs) {
    std::printf("criterion %d: %s  %s: %s (%.1fs)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
}

std::string fmt(const char* f, auto... a) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, a...);
    return buf;
}

// Accepted instances from criteria 1 and 2 run through construction (criterion 3) and
// the port check of their drawings (second half of criterion 6).
struct DrawingStats {
    long drawings = 0, bad_valid = 0, bad_kandinsky = 0, bad_roundtrip = 0, ports_rejected = 0;

    void add(const DirectedGraph& g, const VariableResult& r, Mode mode) {
        ++drawings;
        LDrawing d = mode == Mode::Bitonic ? construct_upward_ldrawing(g, r.embedding, r.pi)
                                           : construct_upward_rightward_ldrawing(g, r.embedding, r.pi);
        if (!validate_ldrawing(g, d, true, mode == Mode::Monotone).ok()) {
            ++bad_valid;
            return;
        }
        PlaneEmbedding emb = drawing_embedding(g, d);
        if (!check_kandinsky_conditions(g, emb, shape_of(g, d))) ++bad_kandinsky;
        if (extract_bitonic_pair(g, d).pi != r.pi) ++bad_roundtrip;
        if (!check_port_feasibility(g, emb, labeling_of(g, d)).feasible) ++ports_rejected;
    }
};

struct Options {
    int max_n = 7;
    int random = 10000;
    int rmin = 8, rmax = 12;
    int drawing_n = 6, rightward_n = 5;
    int super_source_graphs = 1000;
    int typem_n = 7;
    int ports_n = 5, ports_m = 8;
    std::vector<int> perf_sizes{1000, 10000, 100000};
    double perf_exponent = 1.3;
    std::uint64_t seed = 0;
};

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"acceptance checks"};
    bool quick = false;
    app.add_flag("--quick", quick, "smaller sweeps, for smoke runs");
    app.add_option("--seed", o.seed)->capture_default_str();
    CLI11_PARSE(app, argc, argv);
    if (quick) {
        o.max_n = 6, o.random = 500, o.drawing_n = 5, o.rightward_n = 4, o.super_source_graphs = 200, o.typem_n = 6, o.ports_n = 4;
        o.perf_sizes = {1000, 10000};
    }
    DrawingStats draws;

    // 1, 3, 5: one pass over every small st-graph plus the random sample.
    {
        auto t0 = Clock::now();
        long graphs = 0, mismatches = 0, random_graphs = 0;
        long typem_checked = 0, typem_m = 0, typem_bad = 0;
        TypeMCache cache;
        auto one = [&](const DirectedGraph& g, bool audit) {
            ++graphs;
            for (Mode m : {Mode::Bitonic, Mode::Monotone}) {
                auto r = test_variable(g, m);
                if (r.accepted != brute_force_pair(g, m).found) ++mismatches;
                if (r.accepted) draws.add(g, r, m);
                if (audit) {
                    auto a = audit_type_m(r, m, o.typem_n, &cache);
                    typem_checked += a.checked, typem_m += a.oracle_m, typem_bad += a.violations;
                }
            }
        };
        for (int n = 1; n <= o.max_n; ++n)
            for_each_small_st_graph(n, [&](const DirectedGraph& g) { one(g, true); });
        std::mt19937_64 rng(o.seed);
        for (int i = 0; i < o.random; ++i) {
            int n = o.rmin + i % (o.rmax - o.rmin + 1);
            ++random_graphs;
            one(random_planar_st_graph(n, rng), false);
        }
        double secs = seconds_since(t0);
        report(1, "variable-embedding tests agree with brute force",
               {mismatches == 0 && random_graphs >= o.random,
                fmt("%ld mismatches over %ld graphs (all n<=%d, %ld random n=%d..%d), both modes", mismatches, graphs,
                    o.max_n, random_graphs, o.rmin, o.rmax)},
               secs);
        report(5, "type M reported whenever the oracle finds it",
               {typem_bad == 0 && typem_checked > 0,
                fmt("%ld violations over %ld nodes with pertinent graph <= %d vertices (%ld oracle type M)", typem_bad,
                    typem_checked, o.typem_n, typem_m)},
               0.0);
    }

    // 2
    {
        auto t0 = Clock::now();
        long graphs = 0, mis_b = 0, mis_r = 0;
        for (int n = 1; n <= o.drawing_n; ++n)
            for_each_small_st_graph(n, [&](const DirectedGraph& g) {
                ++graphs;
                auto rb = test_bitonic_variable(g);
                if (brute_force_upward_ldrawing_exists(g) != rb.accepted) ++mis_b;
                if (rb.accepted) draws.add(g, rb, Mode::Bitonic);
                if (n <= o.rightward_n) {
                    auto rm = test_monotone_variable(g);
                    if (brute_force_upward_ldrawing_exists(g, true) != rm.accepted) ++mis_r;
                    if (rm.accepted) draws.add(g, rm, Mode::Monotone);
                }
            });
        report(2, "drawing search matches the pair tests",
               {mis_b == 0 && mis_r == 0,
                fmt("%ld upward mismatches (n<=%d), %ld rightward mismatches (n<=%d), %ld graphs", mis_b, o.drawing_n,
                    mis_r, o.rightward_n, graphs)},
               seconds_since(t0));
    }

    report(3, "constructed drawings are valid",
           {draws.bad_valid == 0 && draws.bad_kandinsky == 0 && draws.bad_roundtrip == 0 && draws.drawings > 0,
            fmt("%ld drawings: %ld invalid, %ld fail the Kandinsky conditions, %ld change pi", draws.drawings,
                draws.bad_valid, draws.bad_kandinsky, draws.bad_roundtrip)},
           0.0);

    // 4
    {
        auto t0 = Clock::now();
        std::mt19937_64 rng(o.seed + 4);
        long done = 0, mismatches = 0;
        while (done < o.super_source_graphs) {
            int n = 3 + static_cast<int>(rng() % 8);
            auto g = random_planar_st_graph(n, rng, 0.5, false);
            auto st = validate_st_graph(g);
            if (!st.ok || g.has_edge(*st.source, *st.sink)) continue;
            ++done;
            auto h = add_super_source(g);
            for (Mode m : {Mode::Bitonic, Mode::Monotone})
                if (test_variable(g, m).accepted != test_variable(h, m).accepted) ++mismatches;
        }
        report(4, "adding a new source keeps the verdict",
               {mismatches == 0, fmt("%ld mismatches over %ld graphs without (s,t), n<=10", mismatches, done)},
               seconds_since(t0));
    }

    // 6
    {
        auto t0 = Clock::now();
        long instances = 0, feasible = 0, mis_bf = 0, mis_geo = 0, bad_witness = 0, graphs = 0;
        for (int n = 1; n <= o.ports_n; ++n)
            for_each_connected_planar_digraph(n, o.ports_m, [&](const DirectedGraph& g) {
                ++graphs;
                auto geo = realized_port_labelings(g);
                const int m = g.num_edges();
                enumerate_plane_embeddings(g, [&](const PlaneEmbedding& emb) {
                    auto key = embedding_key(emb);
                    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * m)); ++code) {
                        auto l = labeling_from_code(m, code);
                        auto r = check_port_feasibility(g, emb, l);
                        ++instances;
                        feasible += r.feasible;
                        if (r.feasible != brute_force_port_feasibility(g, emb, l)) ++mis_bf;
                        if (r.feasible != (geo.count({key, code}) > 0)) ++mis_geo;
                        if (r.feasible && !witness_to_partial_drawing_check(g, emb, l, r.witness)) ++bad_witness;
                    }
                    return true;
                });
            });
        report(6, "port feasibility agrees with brute force",
               {mis_bf == 0 && mis_geo == 0 && bad_witness == 0 && draws.ports_rejected == 0,
                fmt("%ld labeled plane graphs (%ld graphs, n<=%d, m<=%d, %ld feasible): %ld mismatches vs witness "
                    "search, %ld vs drawings, %ld bad witnesses; %ld of %ld constructed drawings rejected",
                    instances, graphs, o.ports_n, o.ports_m, feasible, mis_bf, mis_geo, bad_witness,
                    draws.ports_rejected, draws.drawings)},
               seconds_since(t0));
    }

    // 7
    {
        auto t0 = Clock::now();
        DirectedGraph w(7);
        for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {2, 0}, {0, 3}, {4, 0}, {0, 5}, {6, 0},
                                                            {2, 1}, {2, 3}, {4, 3}, {4, 5}, {6, 5}, {6, 1}})
            w.add_edge(a, b);
        int k = min_modality_over_embeddings(w);
        report(7, "alternating 6-wheel is not 4-modal", {k == 6, fmt("min max-modality %d", k)}, seconds_since(t0));
    }

    // 8
    {
        auto t0 = Clock::now();
        auto w = build_wheel();
        auto rep = rim_rectangle_search(w);
        int ref_ok = 0;
        auto refs = wheel_drawings();
        for (const auto& d : refs) ref_ok += check_rectangle_property(w, d);
        report(8, "outer rim of W is always a rectangle",
               {rep.non_rectangular == 0 && rep.rim_outer > 0 && ref_ok == 2 && refs.size() == 2,
                fmt("%ld candidates, %ld valid, %ld with rim outside, %ld not rectangular; %d/2 reference drawings pass",
                    rep.candidates, rep.valid, rep.rim_outer, rep.non_rectangular, ref_ok)},
               seconds_since(t0));
    }

    // 9
    {
        auto t0 = Clock::now();
        std::mt19937_64 rng(o.seed + 9);
        std::vector<double> lx, ly;
        std::string times;
        bool all_accepted = true;
        for (int n : o.perf_sizes) {
            auto g = random_series_parallel(n, rng);
            double best = 1e100;
            for (int rep = 0; rep < 3; ++rep) {
                auto t = Clock::now();
                auto r = test_bitonic_variable(g);
                best = std::min(best, seconds_since(t));
                all_accepted = all_accepted && r.accepted;
            }
            lx.push_back(std::log(g.num_vertices()));
            ly.push_back(std::log(best));
            times += fmt("%sn=%d %.4fs", times.empty() ? "" : ", ", g.num_vertices(), best);
        }
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < lx.size(); ++i) mx += lx[i], my += ly[i];
        mx /= lx.size(), my /= ly.size();
        double sxy = 0, sxx = 0;
        for (std::size_t i = 0; i < lx.size(); ++i) sxy += (lx[i] - mx) * (ly[i] - my), sxx += (lx[i] - mx) * (lx[i] - mx);
        double slope = sxy / sxx;
        report(9, "runtime growth on series-parallel graphs",
               {slope <= o.perf_exponent && all_accepted,
                fmt("%s; fitted exponent %.2f (limit %.2f)", times.c_str(), slope, o.perf_exponent)},
               seconds_since(t0));
    }

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
