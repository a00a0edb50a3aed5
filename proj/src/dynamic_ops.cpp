#include "usn/dynamic_ops.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace usn {

namespace {

int next_fresh_id(const Labeling& labeling) {
    int m = 0;
    for (const auto& label : labeling.labels)
        for (int e : label) m = std::max(m, e);
    return m + 1;
}

void require_valid(const Graph& g, const Labeling& labeling, const char* who) {
    if (!verify(g, labeling).valid)
        throw std::invalid_argument(std::string(who) + ": input labeling is not valid");
}

}  // namespace

GraphLabeling add_universal_vertex(const Graph& g, const Labeling& labeling) {
    require_valid(g, labeling, "add_universal_vertex");
    int n = g.vertex_count();
    auto edges = g.edges();
    for (int v = 0; v < n; ++v) edges.emplace_back(v, n);
    Labeling out = labeling;
    out.labels.push_back({next_fresh_id(labeling)});
    return {Graph(n + 1, std::move(edges)), std::move(out)};
}

GraphLabeling delete_edge(const Graph& g, const Labeling& labeling, std::pair<int, int> e) {
    require_valid(g, labeling, "delete_edge");
    auto [u, v] = e;
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= g.vertex_count() || !g.adjacent(u, v))
        throw std::invalid_argument("delete_edge: (" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + ") is not an edge");
    std::vector<std::pair<int, int>> edges;
    for (auto edge : g.edges())
        if (edge != std::make_pair(u, v)) edges.push_back(edge);
    Labeling out = labeling;
    int fresh = next_fresh_id(labeling);
    out.labels[u].push_back(fresh);
    out.labels[v].push_back(fresh);
    normalize_label(out.labels[u]);
    normalize_label(out.labels[v]);
    return {Graph(g.vertex_count(), std::move(edges)), std::move(out)};
}

Labeling label_arbitrary(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("label_arbitrary: graph must be non-empty");
    Labeling labeling;
    labeling.labels.reserve(n);
    for (int v = 0; v < n; ++v) labeling.labels.push_back({v + 1});
    int fresh = n + 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            labeling.labels[u].push_back(fresh);
            labeling.labels[v].push_back(fresh);
            ++fresh;
        }
    return labeling;
}

GraphLabeling product_union(const Graph& g, const Graph& h, const Labeling& lg,
                            const Labeling& lh) {
    int n = g.vertex_count();
    if (h.vertex_count() != n)
        throw std::invalid_argument("product_union: graphs must share one vertex set");
    for (auto e : g.edges())
        if (h.adjacent(e.first, e.second))
            throw std::invalid_argument("product_union: edge sets must be disjoint");
    require_valid(g, lg, "product_union (first labeling)");
    require_valid(h, lh, "product_union (second labeling)");

    auto ug = lg.universe();
    auto uh = lh.universe();
    auto dense = [](const std::vector<int>& ids, int e) {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), e) - ids.begin());
    };
    int stride = static_cast<int>(uh.size());

    auto edges = g.edges();
    auto he = h.edges();
    edges.insert(edges.end(), he.begin(), he.end());

    Labeling out;
    out.labels.reserve(n);
    for (int v = 0; v < n; ++v) {
        Label label;
        label.reserve(lg.labels[v].size() * lh.labels[v].size());
        for (int x : lg.labels[v])
            for (int y : lh.labels[v]) label.push_back(dense(ug, x) * stride + dense(uh, y));
        normalize_label(label);
        out.labels.push_back(std::move(label));
    }
    return {Graph(n, std::move(edges)), std::move(out)};
}

bool singleton_eligible(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("singleton_eligible: vertex out of range");
    std::vector<int> non_neighbors;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v && !g.adjacent(u, v)) non_neighbors.push_back(u);
    for (size_t i = 0; i < non_neighbors.size(); ++i)
        for (size_t j = i + 1; j < non_neighbors.size(); ++j)
            if (g.adjacent(non_neighbors[i], non_neighbors[j])) return false;
    return true;
}

}  // namespace usn
