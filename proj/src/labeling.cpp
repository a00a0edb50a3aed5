#include "usn/labeling.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace usn {

std::vector<int> Labeling::universe() const {
    std::vector<int> all;
    for (const auto& label : labels) all.insert(all.end(), label.begin(), label.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

void normalize_label(Label& label) {
    std::sort(label.begin(), label.end());
    label.erase(std::unique(label.begin(), label.end()), label.end());
}

const char* violation_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::empty_label: return "empty_label";
        case ViolationKind::duplicate_label: return "duplicate_label";
        case ViolationKind::adjacent_not_disjoint: return "adjacent_not_disjoint";
        case ViolationKind::nonadjacent_disjoint: return "nonadjacent_disjoint";
    }
    return "?";
}

namespace {

// Dense bitmask image of the labels so the pair scan is word operations.
struct MaskedLabels {
    int words;
    std::vector<std::uint64_t> bits;  // labels.size() x words

    const std::uint64_t* row(int v) const { return bits.data() + static_cast<size_t>(v) * words; }

    static MaskedLabels build(const Labeling& labeling) {
        std::vector<int> ids = labeling.universe();
        MaskedLabels m;
        m.words = std::max<int>(1, (static_cast<int>(ids.size()) + 63) / 64);
        m.bits.assign(static_cast<size_t>(labeling.size()) * m.words, 0);
        for (int v = 0; v < labeling.size(); ++v) {
            for (int e : labeling.labels[v]) {
                int idx = static_cast<int>(std::lower_bound(ids.begin(), ids.end(), e) -
                                           ids.begin());
                m.bits[static_cast<size_t>(v) * m.words + idx / 64] |= 1ULL << (idx % 64);
            }
        }
        return m;
    }
};

bool rows_intersect(const std::uint64_t* a, const std::uint64_t* b, int words) {
    for (int w = 0; w < words; ++w)
        if (a[w] & b[w]) return true;
    return false;
}

}  // namespace

VerifyReport verify(const Graph& g, const Labeling& labeling) {
    if (labeling.size() != g.vertex_count())
        throw std::invalid_argument("verify: label count " + std::to_string(labeling.size()) +
                                    " does not match vertex count " +
                                    std::to_string(g.vertex_count()));
    VerifyReport report;
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (labeling.labels[v].empty())
            report.violations.push_back({ViolationKind::empty_label, v, v});

    MaskedLabels masks = MaskedLabels::build(labeling);

    // Duplicates: first occurrence of each repeated set, in ascending order.
    {
        std::map<std::vector<int>, int> seen;
        for (int v = 0; v < n; ++v) {
            Label key = labeling.labels[v];
            normalize_label(key);
            auto [it, inserted] = seen.emplace(std::move(key), v);
            if (!inserted)
                report.violations.push_back({ViolationKind::duplicate_label, it->second, v});
        }
    }

    std::vector<char> adjacent_row(n, 0);
    for (int u = 0; u < n; ++u) {
        for (int w : g.neighbors(u)) adjacent_row[w] = 1;
        const std::uint64_t* row_u = masks.row(u);
        for (int v = u + 1; v < n; ++v) {
            // Pairs with an empty side are covered by empty_label above.
            if (labeling.labels[u].empty() || labeling.labels[v].empty()) continue;
            bool meet = rows_intersect(row_u, masks.row(v), masks.words);
            if (adjacent_row[v] && meet)
                report.violations.push_back({ViolationKind::adjacent_not_disjoint, u, v});
            else if (!adjacent_row[v] && !meet)
                report.violations.push_back({ViolationKind::nonadjacent_disjoint, u, v});
        }
        for (int w : g.neighbors(u)) adjacent_row[w] = 0;
    }
    report.valid = report.violations.empty();
    return report;
}

LabelStats stats(const Labeling& labeling) {
    if (labeling.size() == 0) throw std::invalid_argument("stats: empty labeling");
    LabelStats s;
    s.universe_size = static_cast<int>(labeling.universe().size());
    s.max_label = 0;
    s.min_label = static_cast<int>(labeling.labels[0].size());
    for (const auto& label : labeling.labels) {
        int sz = static_cast<int>(label.size());
        s.max_label = std::max(s.max_label, sz);
        s.min_label = std::min(s.min_label, sz);
    }
    s.uniform = s.max_label == s.min_label;
    return s;
}

int lower_bound_usn(long long n) {
    if (n < 1) throw std::invalid_argument("lower_bound_usn: n must be at least 1");
    int bits = 0;
    while ((1LL << (bits + 1)) <= n) ++bits;
    return bits + 1;
}

Labeling uniformize(const Graph& g, const Labeling& labeling) {
    if (!verify(g, labeling).valid)
        throw std::invalid_argument("uniformize: input labeling is not valid for the graph");
    Labeling out = labeling;
    size_t target = 0;
    for (const auto& label : out.labels) target = std::max(target, label.size());
    int next_fresh = 0;
    for (const auto& label : out.labels)
        for (int e : label) next_fresh = std::max(next_fresh, e);
    ++next_fresh;
    for (auto& label : out.labels)
        while (label.size() < target) label.push_back(next_fresh++);
    for (auto& label : out.labels) normalize_label(label);
    return out;
}

std::string label_to_string(const Label& label) {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < label.size(); ++i) {
        if (i) out << ",";
        out << label[i];
    }
    out << "}";
    return out.str();
}

}  // namespace usn
