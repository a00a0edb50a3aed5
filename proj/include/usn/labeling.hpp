// Disjointness labelings: the data model, the pairwise verifier, label
// statistics, the floor(log2 n)+1 universe lower bound, and the padding
// uniformizer. Everything here is pure; Labeling is immutable by convention.
#pragma once

#include <string>
#include <vector>

#include "usn/graph.hpp"

namespace usn {

// A label is a non-empty set of element ids, kept sorted and unique.
using Label = std::vector<int>;

struct Labeling {
    // labels[v] is the label of vertex v.
    std::vector<Label> labels;

    int size() const { return static_cast<int>(labels.size()); }

    // Sorted list of all distinct element ids in use.
    std::vector<int> universe() const;
};

// Normalizes a label in place (sort + dedupe).
void normalize_label(Label& label);

enum class ViolationKind {
    empty_label,
    duplicate_label,
    adjacent_not_disjoint,
    nonadjacent_disjoint,
};

const char* violation_name(ViolationKind k);

struct Violation {
    ViolationKind kind;
    // Witness: vertex for empty_label (v == u), vertex pair otherwise.
    int u;
    int v;
};

struct VerifyReport {
    bool valid = true;
    std::vector<Violation> violations;
};

// The full pairwise check: every label non-empty, all labels pairwise
// distinct, adjacent pairs disjoint, non-adjacent pairs intersecting.
// Pairs are scanned in ascending (u,v) order, so the first witness of each
// kind is deterministic. Throws std::invalid_argument if the label count
// does not match the vertex count.
VerifyReport verify(const Graph& g, const Labeling& labeling);

struct LabelStats {
    int universe_size = 0;
    int max_label = 0;
    int min_label = 0;
    bool uniform = false;
};

// Throws std::invalid_argument on an empty labeling.
LabelStats stats(const Labeling& labeling);

// floor(log2 n) + 1; throws std::invalid_argument for n < 1.
int lower_bound_usn(long long n);

// Pads every label up to the current maximum size with globally fresh
// elements, each used in exactly one label. Preserves validity and the
// maximum label size. Throws std::invalid_argument if (g, labeling) does
// not verify.
Labeling uniformize(const Graph& g, const Labeling& labeling);

std::string label_to_string(const Label& label);

}  // namespace usn
