// Deterministic labeling constructions for the named graph families, the
// path-splice growth procedure, and the uniform (equal label size) variants.
// Every output verifies against build_family of the matching family.
#pragma once

#include <array>
#include <string>

#include "usn/graph.hpp"
#include "usn/labeling.hpp"

namespace usn {

// All-singletons labeling of the complete graph; universe exactly n.
Labeling label_complete(int n);

// Labeling of the edgeless graph with universe exactly 1 + ceil(log2 n):
// every label contains one shared element, so all pairs intersect.
Labeling label_independent_set(int n);

// Two independent-set labelings over disjoint element ranges; universe
// exactly (1 + ceil(log2 s)) + (1 + ceil(log2 t)).
Labeling label_complete_bipartite(int s, int t);

// Matched pairs get complementary half-size subsets of {1..k} where k is the
// smallest even integer with C(k, k/2) >= 2*pairs; two half-size subsets are
// disjoint only if complementary, so the pattern is exactly the matching.
Labeling label_matching(int pairs);

// min even k with C(k, k/2) >= 2*pairs (the matching universe size).
int matching_universe_size(long long pairs);

// One application of the path splice. The window is the four consecutive
// path vertices anchor..anchor+3 with labels (m, p, q, r); two new vertices
// carrying copies of p and q are inserted between the third and fourth, and
// the three fresh elements patch the broken pairs: a joins {m, p-copy},
// b joins {q, r}, c joins {p, q-copy}.
struct AddedgeState {
    Labeling base;             // valid labeling of a path
    int anchor = 0;            // window start (0-based vertex index)
    std::array<int, 3> fresh;  // a, b, c: distinct, outside the base universe
};

// Returns the labeling of the path with two more vertices. Throws
// std::invalid_argument if the base is not a valid path labeling, the anchor
// is out of range, or the fresh elements collide with the base universe.
Labeling addedge(const AddedgeState& state);

// Batch of splices sharing one fresh triple. Window anchors must be spaced
// at least 3 apart (consumed edges separated by two untouched edges);
// overlapping windows are a procedure error.
Labeling addedge_round(const Labeling& base, const std::vector<int>& anchors,
                       const std::array<int, 3>& fresh);

// How a 1-D labeling was assembled: which embedded base and how many splice
// rounds (each round adds 3 universe elements).
struct BuildInfo {
    std::string base_id;
    int base_universe = 0;
    int rounds = 0;
};

struct PathBuild {
    Labeling labeling;
    BuildInfo info;
};

// Solver-optimal embedded bases for n <= 7, then splice rounds from the
// parity-matching base (P6 for even n, P7 for odd n).
Labeling label_path(int n);
PathBuild build_path_labeling(int n, bool uniform);

// Cycles n <= 8 from embedded bases, then splice rounds on the ring
// (parity base C7/C8). Wheels are the cycle plus a hub.
Labeling label_cycle(int n);
PathBuild build_cycle_labeling(int n, bool uniform);
Labeling label_wheel(int n);

// Layered labeling of the d-cube. Layers carry the labels of a path on
// d+1 vertices; rotating element pools separate adjacent layers, and each
// vertex's pool image of its complement restores the intersections with the
// layer below. The two top layers need no pool image of their own.
Labeling label_hypercube(int d);

// Uniform variants: every label has one common size.
Labeling label_path_uniform(int n);
Labeling label_cycle_uniform(int n);
Labeling label_wheel_uniform(int n);
Labeling label_hypercube_uniform(int d);

// Embedded base access (paths n=1..9, cycles n=3..8), for tests and tools.
const Labeling& path_base(int n, bool uniform);
const Labeling& cycle_base(int n, bool uniform);

}  // namespace usn
