// Undirected simple graphs on dense vertex ids, the named family
// generators, and text parsers (edge list, graph6).
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace usn {

// Immutable after construction; safe to share between threads.
class Graph {
public:
    Graph() = default;
    // Edges are unordered pairs (u,v), u != v, 0 <= u,v < n.
    // Throws std::invalid_argument on self-loops, duplicates, or range errors.
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool adjacent(int u, int v) const;

    // Normalized (u < v), sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Sorted neighbor list of v.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    int non_edge_count() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

enum class Family {
    complete,
    independent,
    complete_bipartite,
    matching,
    path,
    cycle,
    wheel,
    hypercube,
};

// Tagged family description. params meaning: complete/independent/path/cycle/
// wheel: vertex count n; complete_bipartite: side sizes (s,t); matching: pair
// count (graph has 2n vertices); hypercube: dimension d.
struct FamilySpec {
    Family family;
    std::vector<int> params;
};

const char* family_name(Family f);
// Accepts the names used by family_name(); throws std::invalid_argument.
Family family_from_name(const std::string& name);

// Canonical vertex orders: path/cycle in chain/ring order, wheel rim first
// with the hub last, hypercube in binary order, bipartite side A then side B,
// matching pairs (2i, 2i+1).
Graph build_family(const FamilySpec& spec);

Graph complement(const Graph& g);

enum class GraphFormat { edge_list, graph6 };

// edge_list: "n" on the first line, then one "u v" pair per line, 0-indexed.
// Throws std::runtime_error naming the offending line on malformed input.
Graph parse_graph(const std::string& text, GraphFormat format);

std::string write_edge_list(const Graph& g);

// Standard ASCII graph6 encoding (short and long size forms, n < 2^20).
std::string write_graph6(const Graph& g);

}  // namespace usn
