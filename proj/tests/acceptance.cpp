// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "usn/cli.hpp"
#include "usn/constructions.hpp"
#include "usn/dynamic_ops.hpp"
#include "usn/graph.hpp"
#include "usn/labeling.hpp"
#include "usn/solver.hpp"

using namespace usn;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::vector<std::string> detail;

void note(const std::string& line) { detail.push_back("    " + line); }

void flush_criterion(int id, const std::string& name, bool pass) {
    std::printf("CRITERION %d %s — %s\n", id, pass ? "PASS" : "FAIL", name.c_str());
    for (const auto& line : detail) std::printf("%s\n", line.c_str());
    detail.clear();
    if (!pass) ++failures;
}

int universe_of(const Labeling& labeling) {
    return static_cast<int>(labeling.universe().size());
}

int ceil_log2(int n) {
    int k = 0;
    while ((1 << k) < n) ++k;
    return k;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// --- criterion 1: closed-form exactness --------------------------------

bool criterion1() {
    bool pass = true;
    auto solve = [&](const Graph& g, int expected, const std::string& what) {
        auto start = Clock::now();
        SolveResult r = exact_usn(g);
        double secs = seconds_since(start);
        bool ok = r.status == SolveStatus::optimal && r.value == expected && r.witness &&
                  verify(g, *r.witness).valid && secs < 60.0;
        if (!ok) {
            pass = false;
            note(what + ": got " + std::to_string(r.value) + " want " +
                 std::to_string(expected) + " (" + solve_status_name(r.status) + ")");
        }
    };
    for (int n = 1; n <= 5; ++n)
        solve(build_family({Family::complete, {n}}), n, "complete n=" + std::to_string(n));
    for (int n = 2; n <= 8; ++n)
        solve(build_family({Family::independent, {n}}), 1 + ceil_log2(n),
              "edgeless n=" + std::to_string(n));
    for (auto [s, t] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}, {4, 2}})
        solve(build_family({Family::complete_bipartite, {s, t}}),
              2 + ceil_log2(s) + ceil_log2(t),
              "bipartite " + std::to_string(s) + "," + std::to_string(t));
    return pass;
}

// --- criterion 2: lower-bound consistency over the tiny-graph corpus ----

bool criterion2() {
    bool pass = true;
    auto start = Clock::now();
    const int expected_counts[] = {0, 1, 2, 4, 11, 34};
    int solved = 0;
    for (int n = 1; n <= 5; ++n) {
        std::vector<Graph> classes = testing::all_graphs_up_to_iso(n);
        if (static_cast<int>(classes.size()) != expected_counts[n]) {
            pass = false;
            note("isomorphism classes n=" + std::to_string(n) + ": " +
                 std::to_string(classes.size()) + " found, expected " +
                 std::to_string(expected_counts[n]));
        }
        for (const Graph& g : classes) {
            // round through the graph6 corpus encoding
            Graph g2 = parse_graph(write_graph6(g), GraphFormat::graph6);
            if (!(g2 == g)) {
                pass = false;
                note("graph6 round trip failed at n=" + std::to_string(n));
                continue;
            }
            SolveResult r = exact_usn(g2);
            ++solved;
            bool ok = r.status == SolveStatus::optimal && r.value >= lower_bound_usn(n) &&
                      r.value <= n + g2.non_edge_count();
            Labeling any = label_arbitrary(g2);
            ok = ok && verify(g2, any).valid &&
                 universe_of(any) == n + g2.non_edge_count();
            if (!ok) {
                pass = false;
                note("bounds/witness failed on a graph with n=" + std::to_string(n));
            }
        }
    }
    double secs = seconds_since(start);
    note(std::to_string(solved) + " graphs solved in " + std::to_string(secs) + " s");
    if (secs >= 600.0) {
        pass = false;
        note("sweep exceeded the 10 minute budget");
    }
    return pass;
}

// --- criterion 3: construction validity sweep with universe ceilings ----

bool criterion3() {
    bool pass = true;
    for (int pairs = 1; pairs <= 512; ++pairs) {
        Labeling m = label_matching(pairs);
        if (!verify(build_family({Family::matching, {pairs}}), m).valid ||
            universe_of(m) != matching_universe_size(pairs)) {
            pass = false;
            note("matching pairs=" + std::to_string(pairs) + " failed");
        }
    }
    auto one_dim = [&](const char* name, int lo, int hi, auto build, auto graph) {
        for (int n = lo; n <= hi; ++n) {
            Labeling lab = build(n);
            double ceiling = 4.5 * std::log2(std::max(n, 2));
            if (!verify(graph(n), lab).valid || universe_of(lab) > ceiling) {
                pass = false;
                note(std::string(name) + " n=" + std::to_string(n) + " failed (universe " +
                     std::to_string(universe_of(lab)) + ", ceiling " +
                     std::to_string(ceiling) + ")");
            }
        }
    };
    one_dim("path", 1, 2000, label_path,
            [](int n) { return build_family({Family::path, {n}}); });
    one_dim("cycle", 3, 2000, label_cycle,
            [](int n) { return build_family({Family::cycle, {n}}); });
    one_dim("wheel", 4, 2000, label_wheel,
            [](int n) { return build_family({Family::wheel, {n}}); });
    for (int n = 1; n <= 4096; ++n) {
        Labeling s = label_independent_set(n);
        int want = n == 1 ? 1 : 1 + ceil_log2(n);
        if (universe_of(s) != want ||
            !verify(build_family({Family::independent, {n}}), s).valid) {
            pass = false;
            note("independent n=" + std::to_string(n) + " failed");
        }
    }
    // hypercubes, plain and uniform, against the strict pool-budget ceiling
    for (int d = 1; d <= 8; ++d) {
        int bound = 3 * d + universe_of(label_path(d + 1));
        Labeling h = label_hypercube(d);
        bool valid = verify(build_family({Family::hypercube, {d}}), h).valid;
        bool under = universe_of(h) < bound;
        char buf[160];
        std::snprintf(buf, sizeof buf, "hypercube d=%d: universe %d, ceiling %d => %s%s", d,
                      universe_of(h), bound, valid ? "" : "INVALID ",
                      under ? "ok" : "NOT strictly below");
        note(buf);
        if (!valid || !under) pass = false;
        if (d >= 2) {
            Labeling hu = label_hypercube_uniform(d);
            bool valid_u = verify(build_family({Family::hypercube, {d}}), hu).valid;
            bool under_u = universe_of(hu) < bound;
            std::snprintf(buf, sizeof buf,
                          "hypercube_uniform d=%d: universe %d, ceiling %d => %s%s", d,
                          universe_of(hu), bound, valid_u ? "" : "INVALID ",
                          under_u ? "ok" : "NOT strictly below");
            note(buf);
            if (!valid_u || !under_u) pass = false;
        }
    }
    if (!pass)
        note("note: at d=5,6 the three d-element pools are all fully used and the path base "
             "is already optimal, so universe = ceiling exactly; no labeling in this "
             "construction family can go lower (see also the uniform cases d=4..6, where the "
             "uniform path base exceeds the plain one)");
    return pass;
}

// --- criterion 4: uniform variants at no extra universe cost ------------

bool criterion4() {
    bool pass = true;
    for (int n = 1; n <= 2000; ++n) {
        PathBuild b = build_path_labeling(n, true);
        if (!stats(b.labeling).uniform ||
            universe_of(b.labeling) != b.info.base_universe + 3 * b.info.rounds) {
            pass = false;
            note("path_uniform n=" + std::to_string(n) + " failed");
        }
    }
    for (int n = 3; n <= 2000; ++n) {
        PathBuild b = build_cycle_labeling(n, true);
        if (!stats(b.labeling).uniform ||
            universe_of(b.labeling) != b.info.base_universe + 3 * b.info.rounds) {
            pass = false;
            note("cycle_uniform n=" + std::to_string(n) + " failed");
        }
    }
    for (int n = 4; n <= 2000; ++n) {
        Labeling w = label_wheel_uniform(n);
        Labeling rim = label_cycle_uniform(n - 1);
        LabelStats ws = stats(w);
        // the hub forces exactly one fresh block of the common label size
        if (!ws.uniform || universe_of(w) != universe_of(rim) + stats(rim).max_label) {
            pass = false;
            note("wheel_uniform n=" + std::to_string(n) + " failed");
        }
    }
    for (int d = 2; d <= 8; ++d)
        if (!stats(label_hypercube_uniform(d)).uniform) {
            pass = false;
            note("hypercube_uniform d=" + std::to_string(d) + " not uniform");
        }
    return pass;
}

// --- criterion 5: individual label size ceilings -------------------------

bool criterion5() {
    bool pass = true;
    auto check_max = [&](const char* name, int lo, int hi, auto build) {
        for (int n = lo; n <= hi; ++n) {
            int max_label = stats(build(n)).max_label;
            double ceiling = 3.0 * std::log2(std::max(n, 2));
            if (max_label > ceiling) {
                pass = false;
                note(std::string(name) + " n=" + std::to_string(n) + ": max label " +
                     std::to_string(max_label) + " above " + std::to_string(ceiling));
            }
        }
    };
    check_max("path", 1, 2000, label_path);
    check_max("cycle", 3, 2000, label_cycle);
    check_max("wheel", 4, 2000, label_wheel);
    for (int d = 1; d <= 8; ++d) {
        int max_label = stats(label_hypercube(d)).max_label;
        double ceiling = d + 3.0 * std::log2(d + 1);
        if (max_label >= ceiling) {
            pass = false;
            note("hypercube d=" + std::to_string(d) + ": max label " +
                 std::to_string(max_label) + " not below " + std::to_string(ceiling));
        }
    }
    // padding 100 randomly mutated valid labelings preserves everything
    std::mt19937 rng(7121766);
    for (int trial = 0; trial < 100; ++trial) {
        int pick = trial % 5;
        int n = 3 + static_cast<int>(rng() % 60);
        Labeling lab;
        Graph g;
        switch (pick) {
            case 0: g = build_family({Family::path, {n}}); lab = label_path(n); break;
            case 1: g = build_family({Family::cycle, {n}}); lab = label_cycle(n); break;
            case 2: g = build_family({Family::wheel, {n + 1}}); lab = label_wheel(n + 1); break;
            case 3:
                g = build_family({Family::matching, {n}});
                lab = label_matching(n);
                break;
            default:
                g = build_family({Family::independent, {n}});
                lab = label_independent_set(n);
                break;
        }
        // valid-preserving mutation: private fresh elements on random vertices
        int fresh = 1 + universe_of(lab) * 2 + n;
        int touches = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < touches; ++i) {
            int v = static_cast<int>(rng() % lab.size());
            lab.labels[v].push_back(fresh++);
            normalize_label(lab.labels[v]);
        }
        if (!verify(g, lab).valid) {
            pass = false;
            note("mutated labeling unexpectedly invalid at trial " + std::to_string(trial));
            continue;
        }
        int before = stats(lab).max_label;
        Labeling padded = uniformize(g, lab);
        if (!verify(g, padded).valid || stats(padded).max_label != before ||
            !stats(padded).uniform) {
            pass = false;
            note("uniformize failed at trial " + std::to_string(trial));
        }
    }
    return pass;
}

// --- criterion 6: dynamic operations -------------------------------------

bool criterion6() {
    bool pass = true;
    // universal vertex: +1 on the labeling and +1 on the exact value
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : testing::all_graphs_up_to_iso(n)) {
            Labeling lab = label_arbitrary(g);
            auto [g2, lab2] = add_universal_vertex(g, lab);
            if (universe_of(lab2) != universe_of(lab) + 1 || !verify(g2, lab2).valid) {
                pass = false;
                note("universal vertex labeling failed at n=" + std::to_string(n));
            }
            if (exact_usn(g2).value != exact_usn(g).value + 1) {
                pass = false;
                note("universal vertex exact value failed at n=" + std::to_string(n));
            }
        }
    // 500 random edge deletions from graphs with up to 8 vertices
    std::mt19937 rng(580217);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) edges.emplace_back(u, v);
        if (edges.empty()) edges.emplace_back(0, 1);
        Graph g(n, edges);
        Labeling lab = label_arbitrary(g);
        auto edge = g.edges()[rng() % g.edges().size()];
        auto [g2, lab2] = delete_edge(g, lab, edge);
        if (!verify(g2, lab2).valid || universe_of(lab2) != universe_of(lab) + 1) {
            pass = false;
            note("delete_edge failed at trial " + std::to_string(trial));
        }
    }
    // a path as the union of its two matchings
    for (int n = 2; n <= 256; n += 2) {
        std::vector<std::pair<int, int>> e1, e2;
        for (int v = 0; v + 1 < n; v += 2) e1.emplace_back(v, v + 1);
        for (int v = 1; v + 1 < n; v += 2) e2.emplace_back(v, v + 1);
        Graph g1(n, e1), g2(n, e2);
        Labeling l1 = testing::label_matching_isolates(n / 2, 0);
        Labeling raw = testing::label_matching_isolates((n - 2) / 2, 2);
        Labeling l2;
        l2.labels.resize(n);
        l2.labels[0] = raw.labels[n - 2];
        l2.labels[n - 1] = raw.labels[n - 1];
        for (int i = 0; i + 2 < n; ++i) l2.labels[1 + i] = raw.labels[i];
        auto [path, lab] = product_union(g1, g2, l1, l2);
        int k = matching_universe_size(n / 2);
        if (!(path == build_family({Family::path, {n}})) || !verify(path, lab).valid ||
            universe_of(lab) > k * k) {
            pass = false;
            note("two-matching product failed at n=" + std::to_string(n));
        }
    }
    // product membership matches componentwise intersection, 10^4 trials
    std::mt19937 rng2(99173);
    std::uniform_int_distribution<int> mask_dist(0, (1 << 12) - 1);
    int bad = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        unsigned a = mask_dist(rng2), b = mask_dist(rng2), c = mask_dist(rng2),
                 d = mask_dist(rng2);
        bool meets = false;
        for (int x = 0; x < 12 && !meets; ++x)
            for (int y = 0; y < 12 && !meets; ++y)
                if ((a >> x & 1) && (b >> y & 1) && (c >> x & 1) && (d >> y & 1)) meets = true;
        if (meets != ((a & c) != 0 && (b & d) != 0)) ++bad;
    }
    if (bad != 0) {
        pass = false;
        note("set product lemma counterexamples: " + std::to_string(bad));
    }
    return pass;
}

// --- criterion 7: the documented 7-vertex path labeling ------------------

bool criterion7() {
    bool pass = true;
    Labeling documented{{{2, 4, 5}, {1, 3}, {2, 5}, {1, 4}, {2, 3}, {1, 5}, {2, 3, 4}}};
    Graph p7 = build_family({Family::path, {7}});
    if (!verify(p7, documented).valid) {
        pass = false;
        note("the documented 7-vertex labeling does not verify");
    }
    SolveResult r = exact_usn(p7);
    if (r.status != SolveStatus::optimal) {
        pass = false;
        note("solver did not complete on the 7-vertex path");
    } else {
        note(std::string("solver verdict: smallest universe for the 7-vertex path is ") +
             std::to_string(r.value) + (r.value == 5 ? " (optimality of 5 confirmed)"
                                                      : " (5 is NOT optimal; finding recorded)"));
    }
    return pass;
}

// --- criterion 8: byte-identical reruns -----------------------------------

bool criterion8() {
    bool pass = true;
    auto bench_once = [&]() {
        std::ostringstream out, err;
        int code = run_cli({"bench", "--families",
                            "path,cycle,wheel,matching,independent,complete,hypercube",
                            "--max-n", "256"},
                           out, err);
        if (code != 0) {
            pass = false;
            note("bench exited with " + std::to_string(code));
        }
        return out.str();
    };
    std::string first = bench_once();
    std::string second = bench_once();
    if (first != second) {
        pass = false;
        note("bench output differs between consecutive runs");
    }
    std::vector<Graph> graphs = {
        build_family({Family::path, {7}}),
        build_family({Family::cycle, {8}}),
        build_family({Family::independent, {6}}),
        build_family({Family::complete, {5}}),
    };
    for (const Graph& g : graphs)
        for (const std::string& param : {std::string("usn"), std::string("iln"),
                                          std::string("uusn")}) {
            SolveConfig cfg;
            auto run = [&]() {
                SolveResult r = param == "usn"   ? exact_usn(g, cfg)
                                : param == "iln" ? exact_iln(g, cfg)
                                                 : exact_uusn(g, cfg);
                return solve_certificate(g, param, cfg, r);
            };
            if (run() != run()) {
                pass = false;
                note("certificate differs between runs (" + param + ")");
            }
        }
    return pass;
}

}  // namespace

int main() {
    flush_criterion(1, "closed-form exactness (solver vs known values)", criterion1());
    flush_criterion(2, "lower-bound consistency across all tiny graphs", criterion2());
    flush_criterion(3, "construction validity sweep with universe ceilings", criterion3());
    flush_criterion(4, "uniform variants at no extra universe cost", criterion4());
    flush_criterion(5, "individual label size ceilings and padding", criterion5());
    flush_criterion(6, "dynamic operations", criterion6());
    flush_criterion(7, "documented 7-vertex path labeling and optimality verdict",
                    criterion7());
    flush_criterion(8, "byte-identical reruns of bench and solves", criterion8());
    std::printf("SUMMARY: %d/8 criteria passed\n", 8 - failures);
    return failures;
}
