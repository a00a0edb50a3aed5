// Labeling-preserving graph mutations: universal vertex addition, edge
// deletion, the delete-down-from-complete labeler for arbitrary graphs, the
// edge-disjoint union combinator, and the singleton-label criterion.
#pragma once

#include <utility>

#include "usn/graph.hpp"
#include "usn/labeling.hpp"

namespace usn {

struct GraphLabeling {
    Graph graph;
    Labeling labeling;
};

// Appends a vertex adjacent to everything; its label is one fresh singleton,
// all other labels are unchanged. Requires (g, labeling) valid.
GraphLabeling add_universal_vertex(const Graph& g, const Labeling& labeling);

// Removes edge e and gives both endpoints one shared fresh element; the
// universe grows by exactly 1. Requires (g, labeling) valid and e in E(g).
GraphLabeling delete_edge(const Graph& g, const Labeling& labeling,
                          std::pair<int, int> e);

// Valid labeling of any graph: start from the all-singletons labeling of the
// complete graph and delete every non-edge of g in lexicographic order.
// Universe size is exactly n + #non-edges.
Labeling label_arbitrary(const Graph& g);

// For graphs g, h on the same vertices with disjoint edge sets: the union
// graph labeled by per-vertex products of the two labels. A product element
// (x, y) is flattened to x' * |U_h| + y' over dense re-indexed universes.
GraphLabeling product_union(const Graph& g, const Graph& h, const Labeling& lg,
                            const Labeling& lh);

// True iff no two non-neighbours of v are adjacent, i.e. v can carry a
// singleton label in some valid labeling.
bool singleton_eligible(const Graph& g, int v);

}  // namespace usn
