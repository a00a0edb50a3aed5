#include "usn/constructions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace usn {

namespace {

// ---------------------------------------------------------------------
// Embedded base labelings, produced once by the exact solver (see
// tools/make_bases.cpp) and frozen here so 1-D constructions start from
// an optimal base. Regression tests recompute and compare them.
// ---------------------------------------------------------------------

using Table = std::vector<Labeling>;

Labeling mk(std::vector<Label> labels) { return Labeling{std::move(labels)}; }

const Table& path_bases() {
    static const Table t = {
        mk({{1}}),                                                      // P1
        mk({{1}, {2}}),                                                 // P2
        mk({{2}, {1}, {2, 3}}),                                         // P3
        mk({{2, 3}, {1}, {2}, {1, 3}}),                                 // P4
        mk({{3, 4}, {1, 2}, {3}, {1, 4}, {2, 3}}),                      // P5
        mk({{3, 5}, {1, 2}, {3, 4}, {1, 5}, {2, 3}, {1, 4, 5}}),        // P6
        mk({{2, 4, 5}, {1, 3}, {2, 5}, {1, 4}, {2, 3}, {1, 5}, {2, 3, 4}}),  // P7
        mk({{3, 4, 5}, {1, 2}, {3, 4}, {1, 5}, {2, 3, 6}, {1, 4}, {2, 3, 5}, {1, 4, 6}}),  // P8
        mk({{3, 4, 6}, {1, 2}, {3, 4, 5}, {1, 6}, {2, 3}, {1, 4}, {2, 5, 6}, {1, 3},
            {2, 4, 6}}),                                                // P9
    };
    return t;
}

const Table& path_bases_uniform() {
    static const Table t = {
        mk({{1}}),                                                      // P1
        mk({{1}, {2}}),                                                 // P2
        mk({{3, 4}, {1, 2}, {3, 5}}),                                   // P3
        mk({{3, 5}, {1, 2}, {3, 4}, {1, 5}}),                           // P4
        mk({{3, 5}, {1, 2}, {3, 4}, {1, 5}, {2, 3}}),                   // P5
        mk({{4, 5, 7}, {1, 2, 3}, {4, 5, 6}, {1, 2, 7}, {3, 4, 5}, {1, 6, 7}}),  // P6
        mk({{4, 6, 7}, {1, 2, 3}, {4, 5, 6}, {1, 2, 7}, {3, 4, 5}, {1, 2, 6}, {3, 4, 7}}),
        mk({{4, 6, 7}, {1, 2, 3}, {4, 5, 6}, {1, 2, 7}, {3, 4, 5}, {1, 2, 6}, {3, 4, 7},
            {1, 5, 6}}),                                                // P8
        mk({{5, 6, 7}, {1, 2, 3}, {4, 5, 6}, {1, 2, 7}, {3, 4, 5}, {1, 2, 6}, {3, 4, 7},
            {1, 2, 5}, {3, 6, 7}}),                                     // P9
    };
    return t;
}

const Table& cycle_bases() {
    static const Table t = {
        mk({{1}, {2}, {3}}),                                            // C3
        mk({{1}, {2}, {1, 3}, {2, 4}}),                                 // C4
        mk({{1, 2}, {3, 4}, {1, 5}, {2, 3}, {4, 5}}),                   // C5
        mk({{1, 2}, {3, 4}, {1, 5}, {2, 3}, {1, 4}, {3, 5}}),           // C6
        mk({{1, 2}, {3, 4}, {1, 5, 6}, {2, 3, 7}, {1, 4}, {2, 3, 5}, {4, 6, 7}}),  // C7
        mk({{1, 2}, {3, 4, 5}, {1, 6}, {2, 3, 4}, {1, 5}, {2, 3, 6}, {1, 4}, {3, 5, 6}}),
    };
    return t;
}

const Table& cycle_bases_uniform() {
    static const Table t = {
        mk({{1}, {2}, {3}}),                                            // C3
        mk({{1, 2}, {3, 4}, {1, 5}, {3, 6}}),                           // C4
        mk({{1, 2}, {3, 4}, {1, 5}, {2, 3}, {4, 5}}),                   // C5
        mk({{1, 2}, {3, 4}, {1, 5}, {2, 3}, {1, 4}, {3, 5}}),           // C6
        mk({{1, 2, 3}, {4, 5, 6}, {1, 2, 7}, {3, 4, 5}, {1, 6, 7}, {2, 3, 4}, {5, 6, 7}}),
        mk({{1, 2, 3}, {4, 5, 6}, {1, 2, 7}, {3, 4, 5}, {1, 2, 6}, {3, 4, 7}, {1, 2, 5},
            {4, 6, 7}}),                                                // C8
    };
    return t;
}

int max_element_id(const Labeling& labeling) {
    int m = 0;
    for (const auto& label : labeling.labels)
        for (int e : label) m = std::max(m, e);
    return m;
}

Label with_extra(const Label& label, std::initializer_list<int> extra) {
    Label out = label;
    out.insert(out.end(), extra);
    normalize_label(out);
    return out;
}

// One batch of path splices sharing a fresh triple. Each window
// (w, w+1, w+2, w+3) splits the edge between its 3rd and 4th vertices and
// inserts copies of the 2nd and 3rd labels there. With pad_suffix, vertices
// after the last window alternately absorb c and b so every label grows by
// exactly one element.
std::vector<Label> splice_round(const std::vector<Label>& old, const std::vector<int>& anchors,
                                const std::array<int, 3>& fresh, bool pad_suffix) {
    int m = static_cast<int>(old.size());
    int a = fresh[0], b = fresh[1], c = fresh[2];
    std::vector<std::vector<int>> add(m);
    std::vector<int> insert_after(m, -1);  // position -> window anchor
    int last_window_end = -1;
    for (int w : anchors) {
        add[w % m].push_back(a);
        add[(w + 1) % m].push_back(c);
        add[(w + 2) % m].push_back(b);
        add[(w + 3) % m].push_back(b);
        insert_after[(w + 2) % m] = w;
        last_window_end = std::max(last_window_end, w + 3);
    }
    if (pad_suffix) {
        bool use_c = true;  // the vertex before the suffix carries b
        for (int p = last_window_end + 1; p < m; ++p, use_c = !use_c)
            add[p].push_back(use_c ? c : b);
    }
    std::vector<Label> out;
    out.reserve(m + 2 * anchors.size());
    for (int p = 0; p < m; ++p) {
        Label grown = old[p];
        grown.insert(grown.end(), add[p].begin(), add[p].end());
        normalize_label(grown);
        out.push_back(std::move(grown));
        if (insert_after[p] >= 0) {
            int w = insert_after[p];
            out.push_back(with_extra(old[(w + 1) % m], {a}));
            out.push_back(with_extra(old[(w + 2) % m], {c}));
        }
    }
    return out;
}

// Greedy splice assembly: grow the base by rounds of windows, three fresh
// elements per round, until the target vertex count is reached.
PathBuild grow(const Labeling& base, const std::string& base_id, int target, bool ring,
               bool uniform) {
    PathBuild out;
    out.info.base_id = base_id;
    out.info.base_universe = static_cast<int>(base.universe().size());
    out.labeling = base;
    int next_fresh = max_element_id(base) + 1;
    std::vector<Label>& labels = out.labeling.labels;
    while (static_cast<int>(labels.size()) < target) {
        int m = static_cast<int>(labels.size());
        int capacity = uniform ? m / 4 : (ring ? m / 3 : (m - 1) / 3);
        int windows = std::min<int>(capacity, (target - m) / 2);
        std::vector<int> anchors;
        int stride = uniform ? 4 : 3;
        for (int j = 0; j < windows; ++j) anchors.push_back(stride * j);
        std::array<int, 3> fresh = {next_fresh, next_fresh + 1, next_fresh + 2};
        labels = splice_round(labels, anchors, fresh, uniform);
        next_fresh += 3;
        ++out.info.rounds;
    }
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

const Labeling& path_base(int n, bool uniform) {
    const Table& t = uniform ? path_bases_uniform() : path_bases();
    require(n >= 1 && n <= static_cast<int>(t.size()),
            "path_base: no embedded base for n=" + std::to_string(n));
    return t[n - 1];
}

const Labeling& cycle_base(int n, bool uniform) {
    const Table& t = uniform ? cycle_bases_uniform() : cycle_bases();
    require(n >= 3 && n <= static_cast<int>(t.size()) + 2,
            "cycle_base: no embedded base for n=" + std::to_string(n));
    return t[n - 3];
}

Labeling label_complete(int n) {
    require(n >= 1, "label_complete: n must be at least 1");
    Labeling out;
    out.labels.reserve(n);
    for (int v = 1; v <= n; ++v) out.labels.push_back({v});
    return out;
}

Labeling label_independent_set(int n) {
    require(n >= 1, "label_independent_set: n must be at least 1");
    if (n == 1) return mk({{1}});
    int k = 1;
    while ((1LL << (k + 1)) <= n) ++k;  // 2^k <= n < 2^(k+1)
    long long full = 1LL << k;
    int shared = k + 1;
    Labeling out;
    // n = 2^k: every non-empty subset of {1..k} extended by a shared element,
    // plus the bare shared element; all pairs intersect, all sets distinct.
    auto base_label = [&](long long idx) {  // idx in [0, 2^k)
        if (idx == full - 1) return Label{shared};
        Label label;
        long long mask = idx + 1;
        for (int e = 1; e <= k; ++e)
            if (mask >> (e - 1) & 1) label.push_back(e);
        label.push_back(shared);
        return label;
    };
    long long x = n - full;
    for (long long i = 0; i < std::min<long long>(n, full); ++i)
        out.labels.push_back(base_label(i));
    // Leftover vertices take complements of used labels with respect to
    // {1..k+2}, re-inserting the shared element so every pair still meets.
    int wide = k + 2;
    for (long long j = 0; j < x; ++j) {
        Label used = base_label(j);
        Label out_label;
        for (int e = 1; e <= wide; ++e)
            if (!std::binary_search(used.begin(), used.end(), e)) out_label.push_back(e);
        out_label.push_back(shared);
        normalize_label(out_label);
        out.labels.push_back(std::move(out_label));
    }
    return out;
}

Labeling label_complete_bipartite(int s, int t) {
    require(s >= 1 && t >= 1, "label_complete_bipartite: sides must be at least 1");
    Labeling a = label_independent_set(s);
    Labeling b = label_independent_set(t);
    int shift = static_cast<int>(a.universe().size());
    Labeling out = a;
    for (const auto& label : b.labels) {
        Label shifted;
        for (int e : label) shifted.push_back(e + shift);
        out.labels.push_back(std::move(shifted));
    }
    return out;
}

int matching_universe_size(long long pairs) {
    require(pairs >= 1, "matching_universe_size: pair count must be at least 1");
    for (int k = 2;; k += 2) {
        unsigned long long c = 1;
        bool big = false;
        for (int i = 0; i < k / 2; ++i) {
            c = c * (k - i) / (i + 1);
            if (c > (1ULL << 62)) {
                big = true;
                break;
            }
        }
        if (big || c >= 2ULL * static_cast<unsigned long long>(pairs)) return k;
    }
}

Labeling label_matching(int pairs) {
    require(pairs >= 1, "label_matching: pair count must be at least 1");
    int k = matching_universe_size(pairs);
    int half = k / 2;
    // Half-size subsets containing element 1, in lexicographic order, each
    // paired with its complement. Two half-size subsets of {1..k} are
    // disjoint exactly when complementary, so the pattern is the matching.
    Labeling out;
    out.labels.reserve(2 * pairs);
    Label pick(half);
    for (int i = 0; i < half; ++i) pick[i] = i + 1;
    int produced = 0;
    while (true) {
        Label comp;
        for (int e = 1; e <= k; ++e)
            if (!std::binary_search(pick.begin(), pick.end(), e)) comp.push_back(e);
        out.labels.push_back(pick);
        out.labels.push_back(std::move(comp));
        if (++produced == pairs) break;
        // next half-size subset of {2..k} after position 0 (element 1 fixed)
        int i = half - 1;
        while (i >= 1 && pick[i] == k - (half - 1 - i)) --i;
        require(i >= 1, "label_matching: subset supply exhausted");  // cannot happen
        ++pick[i];
        for (int j = i + 1; j < half; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

Labeling addedge_round(const Labeling& base, const std::vector<int>& anchors,
                       const std::array<int, 3>& fresh) {
    int m = base.size();
    require(m >= 4, "addedge: path must have at least 4 vertices");
    Graph path = build_family({Family::path, {m}});
    require(verify(path, base).valid, "addedge: base is not a valid path labeling");
    require(fresh[0] != fresh[1] && fresh[1] != fresh[2] && fresh[0] != fresh[2],
            "addedge: fresh elements must be distinct");
    auto universe = base.universe();
    for (int f : fresh)
        require(!std::binary_search(universe.begin(), universe.end(), f),
                "addedge: fresh element " + std::to_string(f) + " already in the universe");
    require(!anchors.empty(), "addedge: no windows given");
    std::vector<int> sorted = anchors;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        require(sorted[i] >= 0 && sorted[i] + 3 < m,
                "addedge: window at " + std::to_string(sorted[i]) + " out of range");
        if (i)
            require(sorted[i] - sorted[i - 1] >= 3,
                    "addedge: window at " + std::to_string(sorted[i]) +
                        " overlaps a previously consumed edge");
    }
    Labeling out;
    out.labels = splice_round(base.labels, sorted, fresh, /*pad_suffix=*/false);
    return out;
}

Labeling addedge(const AddedgeState& state) {
    return addedge_round(state.base, {state.anchor}, state.fresh);
}

PathBuild build_path_labeling(int n, bool uniform) {
    require(n >= 1, "label_path: n must be at least 1");
    if (n <= 7) {
        PathBuild out;
        out.labeling = path_base(n, uniform);
        out.info.base_id = "P" + std::to_string(n) + (uniform ? "u" : "");
        out.info.base_universe = static_cast<int>(out.labeling.universe().size());
        return out;
    }
    int base_n = (n % 2 == 0) ? 6 : 7;
    std::string id = "P" + std::to_string(base_n) + (uniform ? "u" : "");
    return grow(path_base(base_n, uniform), id, n, /*ring=*/false, uniform);
}

Labeling label_path(int n) { return build_path_labeling(n, false).labeling; }

Labeling label_path_uniform(int n) { return build_path_labeling(n, true).labeling; }

PathBuild build_cycle_labeling(int n, bool uniform) {
    require(n >= 3, "label_cycle: n must be at least 3");
    if (n <= 8) {
        PathBuild out;
        out.labeling = cycle_base(n, uniform);
        out.info.base_id = "C" + std::to_string(n) + (uniform ? "u" : "");
        out.info.base_universe = static_cast<int>(out.labeling.universe().size());
        return out;
    }
    int base_n = (n % 2 == 0) ? 8 : 7;
    std::string id = "C" + std::to_string(base_n) + (uniform ? "u" : "");
    return grow(cycle_base(base_n, uniform), id, n, /*ring=*/true, uniform);
}

Labeling label_cycle(int n) { return build_cycle_labeling(n, false).labeling; }

Labeling label_cycle_uniform(int n) { return build_cycle_labeling(n, true).labeling; }

Labeling label_wheel(int n) {
    require(n >= 4, "label_wheel: n must be at least 4");
    Labeling out = label_cycle(n - 1);
    out.labels.push_back({max_element_id(out) + 1});
    return out;
}

Labeling label_wheel_uniform(int n) {
    require(n >= 4, "label_wheel_uniform: n must be at least 4");
    Labeling out = label_cycle_uniform(n - 1);
    // The hub is adjacent to the whole rim, whose labels cover the universe,
    // so its label is a block of fresh elements of the common rim size.
    int size = static_cast<int>(out.labels[0].size());
    int fresh = max_element_id(out) + 1;
    Label hub;
    for (int i = 0; i < size; ++i) hub.push_back(fresh + i);
    out.labels.push_back(std::move(hub));
    return out;
}

namespace {

// Layered d-cube labeling over a path base.
//
// Layer i (vertices whose subset has i elements) carries path label PL_i,
// which settles every pair of layers at distance >= 2 and every same-layer
// pair. Three rotating pools of d elements each give layer i an image of its
// vertex subset (pool class i mod 3): adjacent layers then use different
// pools, so edges stay disjoint, and same-layer labels become distinct.
// Finally each vertex takes the lower pool's image of its complement, which
// meets every non-neighbour one layer down (that vertex has an element
// outside this one's subset) but avoids all actual neighbours. The pool
// below a layer must also differ from the pool above it, hence three pools.
//
// Trimmed mode: nothing above the top layer ever looks for its pool image,
// so the top keeps only its path label, and the layer below it keeps only
// its complement image (a distinct singleton per vertex). Full mode keeps
// pool images everywhere, which puts every label at path size + d except on
// the two bottom layers; the uniform construction pads those separately.
Labeling hypercube_core(int d, const Labeling& path, bool full) {
    int path_universe = static_cast<int>(path.universe().size());
    auto img = [&](int cls, int x) { return path_universe + cls * d + x; };
    auto class_of = [&](int layer) {
        int r = layer % 3;
        return r == 1 ? 0 : (r == 2 ? 1 : 2);
    };
    auto has_pool_image = [&](int layer) {
        if (layer < 1 || layer > d) return false;
        if (full) return true;
        return layer <= d - 2 || (d == 2 && layer == 1);
    };
    Labeling out;
    out.labels.resize(size_t{1} << d);
    for (int v = 0; v < (1 << d); ++v) {
        int layer = std::popcount(static_cast<unsigned>(v));
        Label label = path.labels[layer];
        if (has_pool_image(layer))
            for (int x = 1; x <= d; ++x)
                if (v >> (x - 1) & 1) label.push_back(img(class_of(layer), x));
        if (layer >= 2 && has_pool_image(layer - 1))
            for (int x = 1; x <= d; ++x)
                if (!(v >> (x - 1) & 1)) label.push_back(img(class_of(layer - 1), x));
        normalize_label(label);
        out.labels[v] = std::move(label);
    }
    return out;
}

}  // namespace

Labeling label_hypercube(int d) {
    require(d >= 1, "label_hypercube: dimension must be at least 1");
    if (d == 1) return mk({{1}, {2}});
    Labeling path =
        d + 1 <= 9 ? path_base(d + 1, false) : build_path_labeling(d + 1, false).labeling;
    return hypercube_core(d, path, /*full=*/false);
}

Labeling label_hypercube_uniform(int d) {
    require(d >= 2, "label_hypercube_uniform: dimension must be at least 2");
    if (d == 2) {
        // The 2-cube is the 4-cycle; reuse its uniform base in ring order.
        const Labeling& ring = cycle_base(4, true);
        Labeling out;
        out.labels.resize(4);
        const int order[4] = {0, 1, 3, 2};  // 00, 01, 11, 10
        for (int i = 0; i < 4; ++i) out.labels[order[i]] = ring.labels[i];
        return out;
    }
    Labeling path =
        d + 1 <= 9 ? path_base(d + 1, true) : build_path_labeling(d + 1, true).labeling;
    int path_universe = static_cast<int>(path.universe().size());
    auto img = [&](int cls, int x) { return path_universe + cls * d + x; };
    if (d == 3) {
        // The trimmed labeling over a uniform base has every label at path
        // size + 1 except the two bare ends; one shared element lifts both
        // (they are non-adjacent, so sharing is harmless).
        Labeling out = hypercube_core(d, path, /*full=*/false);
        int f = path_universe + d + 1;  // right after the single pool block
        out.labels[0].push_back(f);
        out.labels[(1 << d) - 1].push_back(f);
        normalize_label(out.labels[0]);
        normalize_label(out.labels[(1 << d) - 1]);
        return out;
    }
    Labeling out = hypercube_core(d, path, /*full=*/true);
    // Bottom vertex: the whole pool of layer 2 (class 1) is disjoint from
    // every layer-1 label. Layer-1 vertices: the layer-3 pool's image of the
    // complement, clear of both neighbouring layers.
    for (int x = 1; x <= d; ++x) out.labels[0].push_back(img(1, x));
    normalize_label(out.labels[0]);
    for (int x = 1; x <= d; ++x) {
        int v = 1 << (x - 1);
        for (int y = 1; y <= d; ++y)
            if (y != x) out.labels[v].push_back(img(2, y));
        normalize_label(out.labels[v]);
    }
    return out;
}

}  // namespace usn
