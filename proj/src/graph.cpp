#include "usn/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace usn {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: vertex count must be non-negative");
    if (n > (1 << 20)) throw std::invalid_argument("graph: vertex count exceeds 2^20");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw std::invalid_argument("graph: duplicate edge (" + std::to_string(dup->first) + "," +
                                    std::to_string(dup->second) + ")");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool Graph::adjacent(int u, int v) const {
    if (u == v) return false;
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

int Graph::non_edge_count() const {
    long long pairs = static_cast<long long>(n_) * (n_ - 1) / 2;
    return static_cast<int>(pairs - static_cast<long long>(edges_.size()));
}

const char* family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::independent: return "independent";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::matching: return "matching";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::wheel: return "wheel";
        case Family::hypercube: return "hypercube";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    for (Family f : {Family::complete, Family::independent, Family::complete_bipartite,
                     Family::matching, Family::path, Family::cycle, Family::wheel,
                     Family::hypercube}) {
        if (name == family_name(f)) return f;
    }
    throw std::invalid_argument("unknown family: " + name);
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
    const auto& p = spec.params;
    for (int x : p) require(x > 0, "family parameters must be strictly positive");
    std::vector<std::pair<int, int>> edges;
    switch (spec.family) {
        case Family::complete: {
            require(p.size() == 1, "complete takes one parameter n");
            int n = p[0];
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return Graph(n, std::move(edges));
        }
        case Family::independent: {
            require(p.size() == 1, "independent takes one parameter n");
            return Graph(p[0], {});
        }
        case Family::complete_bipartite: {
            require(p.size() == 2, "complete_bipartite takes parameters (s,t)");
            int s = p[0], t = p[1];
            for (int u = 0; u < s; ++u)
                for (int v = 0; v < t; ++v) edges.emplace_back(u, s + v);
            return Graph(s + t, std::move(edges));
        }
        case Family::matching: {
            require(p.size() == 1, "matching takes one parameter (pair count)");
            int pairs = p[0];
            for (int i = 0; i < pairs; ++i) edges.emplace_back(2 * i, 2 * i + 1);
            return Graph(2 * pairs, std::move(edges));
        }
        case Family::path: {
            require(p.size() == 1, "path takes one parameter n");
            int n = p[0];
            for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            return Graph(n, std::move(edges));
        }
        case Family::cycle: {
            require(p.size() == 1, "cycle takes one parameter n");
            int n = p[0];
            require(n >= 3, "cycle requires n >= 3");
            for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
            return Graph(n, std::move(edges));
        }
        case Family::wheel: {
            require(p.size() == 1, "wheel takes one parameter n");
            int n = p[0];
            require(n >= 4, "wheel requires n >= 4");
            int rim = n - 1;
            for (int v = 0; v < rim; ++v) edges.emplace_back(v, (v + 1) % rim);
            for (int v = 0; v < rim; ++v) edges.emplace_back(v, rim);
            return Graph(n, std::move(edges));
        }
        case Family::hypercube: {
            require(p.size() == 1, "hypercube takes one parameter d");
            int d = p[0];
            require(d <= 20, "hypercube dimension too large");
            int n = 1 << d;
            for (int v = 0; v < n; ++v)
                for (int b = 0; b < d; ++b) {
                    int u = v ^ (1 << b);
                    if (v < u) edges.emplace_back(v, u);
                }
            return Graph(n, std::move(edges));
        }
    }
    throw std::invalid_argument("unknown family");
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

namespace {

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 0)
                throw std::runtime_error("edge list line 1: expected vertex count");
            std::string rest;
            if (ls >> rest)
                throw std::runtime_error("edge list line 1: trailing content after vertex count");
            continue;
        }
        int u, v;
        if (!(ls >> u)) {
            std::string rest;
            std::istringstream probe(line);
            if (!(probe >> rest)) continue;  // blank line
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": malformed edge");
        }
        std::string extra;
        if (!(ls >> v) || (ls >> extra))
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": expected exactly \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": vertex out of range");
        if (u == v)
            throw std::runtime_error("edge list line " + std::to_string(lineno) + ": self-loop");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw std::runtime_error("edge list: empty input");
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("edge list: ") + e.what());
    }
}

Graph parse_graph6(const std::string& text) {
    // One graph per input; optional ">>graph6<<" header; trailing whitespace ok.
    std::string s = text;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    if (s.empty()) throw std::runtime_error("graph6: empty input");
    size_t pos = 0;
    auto byte = [&](size_t i) -> int {
        if (i >= s.size()) throw std::runtime_error("graph6: truncated input");
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw std::runtime_error("graph6: invalid character");
        return c - 63;
    };
    long long n;
    if (s[0] != '~') {
        n = byte(0);
        pos = 1;
    } else if (s.size() > 1 && s[1] != '~') {
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | byte(i);
        pos = 4;
    } else {
        throw std::runtime_error("graph6: vertex count exceeds supported range");
    }
    if (n > (1 << 20)) throw std::runtime_error("graph6: vertex count exceeds 2^20");
    long long bits_needed = n * (n - 1) / 2;
    long long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != bytes_needed)
        throw std::runtime_error("graph6: wrong payload length");
    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int word = byte(pos + bit / 6);
            if ((word >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    return Graph(static_cast<int>(n), std::move(edges));
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_graph6(text);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string s;
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else {
        s.push_back('~');
        s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        s.push_back(static_cast<char>((n & 63) + 63));
    }
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<int> words((bits + 5) / 6, 0);
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.adjacent(u, v)) words[bit / 6] |= 1 << (5 - bit % 6);
    for (int w : words) s.push_back(static_cast<char>(w + 63));
    return s;
}

}  // namespace usn
