// Shared test utilities: exhaustive isomorphism-class enumeration for tiny
// graphs and a matching labeling that also covers isolated vertices.
#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "usn/graph.hpp"
#include "usn/labeling.hpp"

namespace usn::testing {

// All graphs on n vertices up to isomorphism (n <= 6 practical), found by
// minimizing the edge bitmask over all vertex permutations.
inline std::vector<Graph> all_graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    int bits = static_cast<int>(pairs.size());
    auto pair_index = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        for (int i = 0; i < bits; ++i)
            if (pairs[i] == std::make_pair(u, v)) return i;
        return -1;
    };
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<unsigned> canon_seen;
    std::vector<Graph> out;
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
        unsigned canon = mask;
        std::vector<int> p = perm;
        do {
            unsigned image = 0;
            for (int i = 0; i < bits; ++i)
                if (mask >> i & 1) image |= 1u << pair_index(p[pairs[i].first], p[pairs[i].second]);
            canon = std::min(canon, image);
        } while (std::next_permutation(p.begin(), p.end()));
        if (canon_seen.insert(canon).second) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < bits; ++i)
                if (canon >> i & 1) edges.push_back(pairs[i]);
            out.emplace_back(n, std::move(edges));
        }
    }
    return out;
}

// Labeling for a graph that is `pairs` disjoint edges plus `isolates` extra
// vertices (pairs first, isolates after). Pairs take complementary half-size
// subsets of {1..k}; isolates take (k/2 + 1)-size subsets, which meet every
// half-size subset and each other.
inline Labeling label_matching_isolates(int pairs, int isolates) {
    if (pairs == 0) {
        // no disjointness constraints at all: nested prefix sets
        Labeling out;
        Label prefix;
        for (int i = 1; i <= isolates; ++i) {
            prefix.push_back(i);
            out.labels.push_back(prefix);
        }
        return out;
    }
    auto choose = [](int k, int r) {
        unsigned long long c = 1;
        for (int i = 0; i < r; ++i) c = c * (k - i) / (i + 1);
        return c;
    };
    int k = 2;
    while (choose(k, k / 2) < 2ull * pairs ||
           choose(k, k / 2 + 1) < static_cast<unsigned long long>(isolates))
        k += 2;
    int half = k / 2;
    Labeling out;
    Label pick(half);
    std::iota(pick.begin(), pick.end(), 1);
    for (int produced = 0; produced < pairs; ++produced) {
        Label comp;
        for (int e = 1; e <= k; ++e)
            if (!std::binary_search(pick.begin(), pick.end(), e)) comp.push_back(e);
        out.labels.push_back(pick);
        out.labels.push_back(comp);
        if (produced + 1 == pairs) break;
        int i = half - 1;
        while (i >= 1 && pick[i] == k - (half - 1 - i)) --i;
        ++pick[i];
        for (int j = i + 1; j < half; ++j) pick[j] = pick[j - 1] + 1;
    }
    Label wide(half + 1);
    std::iota(wide.begin(), wide.end(), 1);
    for (int produced = 0; produced < isolates; ++produced) {
        out.labels.push_back(wide);
        if (produced + 1 == isolates) break;
        int i = half;
        while (i >= 0 && wide[i] == k - (half - i)) --i;
        ++wide[i];
        for (int j = i + 1; j <= half; ++j) wide[j] = wide[j - 1] + 1;
    }
    return out;
}

}  // namespace usn::testing
