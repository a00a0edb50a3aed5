#include "usn/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace usn {

const char* solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::infeasible_at_cap: return "infeasible_at_cap";
        case SolveStatus::timeout: return "timeout";
    }
    return "?";
}

namespace {

struct TimeoutReached {};

using Clock = std::chrono::steady_clock;

// Backtracking over vertices in descending-degree order. Element ids are
// interchangeable, so candidate labels may extend the used-element prefix
// only by a contiguous block; this breaks the renaming symmetry while
// keeping the search complete.
class Searcher {
public:
    Searcher(const Graph& g, int k, std::optional<int> max_label,
             std::optional<int> uniform_size, std::optional<Clock::time_point> deadline)
        : n_(g.vertex_count()),
          k_(k),
          max_label_(max_label.value_or(k)),
          uniform_size_(uniform_size),
          deadline_(deadline) {
        if (n_ > 62) throw std::invalid_argument("exact solver: graph too large (n > 62)");
        if (k_ > 30) throw std::invalid_argument("exact solver: universe cap too large (k > 30)");
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return g.degree(a) > g.degree(b);
        });
        adj_.assign(n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (g.adjacent(order_[i], order_[j])) adj_[i] |= 1ULL << j;
        assigned_.assign(n_, 0);
    }

    long long nodes() const { return nodes_; }

    bool run() {
        if (count_infeasible()) return false;
        return extend(0, 0);
    }

    // Witness in original vertex order, elements renamed to 1-based ids.
    Labeling witness() const {
        Labeling out;
        out.labels.assign(n_, {});
        for (int i = 0; i < n_; ++i) {
            Label label;
            for (int e = 0; e < k_; ++e)
                if (assigned_[i] >> e & 1) label.push_back(e + 1);
            out.labels[order_[i]] = std::move(label);
        }
        return out;
    }

private:
    bool count_infeasible() const {
        // Distinct non-empty labels of admissible size must cover n vertices.
        double total = 0;
        int lo = uniform_size_ ? *uniform_size_ : 1;
        int hi = uniform_size_ ? *uniform_size_ : max_label_;
        for (int sz = lo; sz <= std::min(hi, k_); ++sz) {
            double c = 1;
            for (int i = 0; i < sz; ++i) c = c * (k_ - i) / (i + 1);
            total += c;
            if (total >= n_) return false;
        }
        return total < n_;
    }

    bool size_ok(std::uint32_t mask) const {
        int pc = std::popcount(mask);
        if (uniform_size_) return pc == *uniform_size_;
        return pc >= 1 && pc <= max_label_;
    }

    bool compatible(int i, std::uint32_t mask) const {
        for (int j = 0; j < i; ++j) {
            bool meet = (mask & assigned_[j]) != 0;
            if ((adj_[i] >> j & 1) ? meet : !meet) return false;
        }
        return true;
    }

    bool extend(int i, int used) {
        if ((++nodes_ & 0xFFF) == 0 && deadline_ && Clock::now() > *deadline_)
            throw TimeoutReached{};
        if (i == n_) return true;
        int max_new = k_ - used;
        for (int t = 0; t <= max_new; ++t) {
            std::uint32_t new_part = ((t ? (1u << t) - 1 : 0u)) << used;
            std::uint32_t old_limit = used ? (1u << used) : 1u;
            for (std::uint32_t old = 0; old < old_limit; ++old) {
                std::uint32_t mask = old | new_part;
                if (mask == 0 || !size_ok(mask)) continue;
                if (t == 0) {
                    bool dup = false;
                    for (int j = 0; j < i && !dup; ++j) dup = assigned_[j] == mask;
                    if (dup) continue;
                }
                if (!compatible(i, mask)) continue;
                assigned_[i] = mask;
                if (extend(i + 1, used + t)) return true;
            }
        }
        assigned_[i] = 0;
        return false;
    }

    int n_;
    int k_;
    int max_label_;
    std::optional<int> uniform_size_;
    std::optional<Clock::time_point> deadline_;
    std::vector<int> order_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint32_t> assigned_;
    long long nodes_ = 0;
};

std::optional<Clock::time_point> make_deadline(const SolveConfig& cfg) {
    if (!cfg.time_budget_secs) return std::nullopt;
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(*cfg.time_budget_secs));
}

int default_universe_cap(const Graph& g) {
    // A valid labeling always exists with n + #non-edges elements.
    return std::max(1, g.vertex_count() + g.non_edge_count());
}

int default_uniform_cap(const Graph& g) {
    // Padding the n + #non-edges witness to a common size m = 1 + max
    // non-degree uses n*m - #non-edges elements in total.
    int n = g.vertex_count();
    int m = 1;
    for (int v = 0; v < n; ++v) m = std::max(m, 1 + (n - 1 - g.degree(v)));
    return std::max(1, n * m - g.non_edge_count());
}

// Largest universe the mask-based searcher handles.
constexpr int kMaxSearchUniverse = 30;

}  // namespace

SolveResult exact_usn(const Graph& g, const SolveConfig& cfg) {
    if (g.vertex_count() < 1) throw std::invalid_argument("exact_usn: graph must be non-empty");
    SolveResult result;
    int cap = std::min(cfg.max_universe.value_or(default_universe_cap(g)), kMaxSearchUniverse);
    auto deadline = make_deadline(cfg);
    int k = lower_bound_usn(g.vertex_count());
    for (; k <= cap; ++k) {
        if (deadline && Clock::now() > *deadline) {
            result.status = SolveStatus::timeout;
            result.value = k;
            return result;
        }
        Searcher s(g, k, cfg.max_label, std::nullopt, deadline);
        bool ok;
        try {
            ok = s.run();
        } catch (const TimeoutReached&) {
            result.status = SolveStatus::timeout;
            result.value = k;  // everything below k proved infeasible
            return result;
        }
        result.trials.push_back({k, ok, s.nodes()});
        if (ok) {
            result.status = SolveStatus::optimal;
            result.value = k;
            result.witness = s.witness();
            return result;
        }
    }
    result.status = SolveStatus::infeasible_at_cap;
    result.value = cap + 1;
    return result;
}

SolveResult exact_iln(const Graph& g, const SolveConfig& cfg) {
    if (g.vertex_count() < 1) throw std::invalid_argument("exact_iln: graph must be non-empty");
    SolveResult result;
    auto deadline = make_deadline(cfg);
    int cap;
    if (cfg.max_universe) {
        cap = std::min(*cfg.max_universe, kMaxSearchUniverse);
    } else {
        // The smallest-universe labeling bounds the search space: some valid
        // labeling exists inside it, so every label cap is decided exactly
        // relative to that universe.
        SolveConfig usn_cfg = cfg;
        usn_cfg.max_label.reset();
        SolveResult usn = exact_usn(g, usn_cfg);
        if (usn.status != SolveStatus::optimal) return usn;
        cap = usn.value;
    }
    for (int L = 1; L <= cap; ++L) {
        if (deadline && Clock::now() > *deadline) {
            result.status = SolveStatus::timeout;
            result.value = L;
            return result;
        }
        Searcher s(g, cap, L, std::nullopt, deadline);
        bool ok;
        try {
            ok = s.run();
        } catch (const TimeoutReached&) {
            result.status = SolveStatus::timeout;
            result.value = L;
            return result;
        }
        result.trials.push_back({L, ok, s.nodes()});
        if (ok) {
            result.status = SolveStatus::optimal;
            result.value = L;
            result.witness = s.witness();
            return result;
        }
    }
    result.status = SolveStatus::infeasible_at_cap;
    result.value = cap + 1;
    return result;
}

SolveResult exact_uusn(const Graph& g, const SolveConfig& cfg) {
    if (g.vertex_count() < 1) throw std::invalid_argument("exact_uusn: graph must be non-empty");
    SolveResult result;
    int cap = std::min(cfg.max_universe.value_or(default_uniform_cap(g)), kMaxSearchUniverse);
    auto deadline = make_deadline(cfg);
    for (int k = lower_bound_usn(g.vertex_count()); k <= cap; ++k) {
        if (deadline && Clock::now() > *deadline) {
            result.status = SolveStatus::timeout;
            result.value = k;
            return result;
        }
        long long nodes = 0;
        bool ok = false;
        for (int t = 1; t <= k && !ok; ++t) {
            if (cfg.max_label && t > *cfg.max_label) break;
            Searcher s(g, k, std::nullopt, t, deadline);
            try {
                ok = s.run();
            } catch (const TimeoutReached&) {
                result.status = SolveStatus::timeout;
                result.value = k;
                return result;
            }
            nodes += s.nodes();
            if (ok) result.witness = s.witness();
        }
        result.trials.push_back({k, ok, nodes});
        if (ok) {
            result.status = SolveStatus::optimal;
            result.value = k;
            return result;
        }
    }
    result.status = SolveStatus::infeasible_at_cap;
    result.value = cap + 1;
    result.witness.reset();
    return result;
}

std::string solve_certificate(const Graph& g, const std::string& param,
                              const SolveConfig& cfg, const SolveResult& result) {
    nlohmann::ordered_json j;
    j["format"] = "usn-certificate/1";
    j["param"] = param;
    j["graph"]["n"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["graph"]["edges"] = std::move(edges);
    j["config"]["max_universe"] =
        cfg.max_universe ? nlohmann::ordered_json(*cfg.max_universe) : nullptr;
    j["config"]["max_label"] = cfg.max_label ? nlohmann::ordered_json(*cfg.max_label) : nullptr;
    j["config"]["require_uniform"] = cfg.require_uniform;
    j["config"]["time_budget_secs"] =
        cfg.time_budget_secs ? nlohmann::ordered_json(*cfg.time_budget_secs) : nullptr;
    auto trials = nlohmann::ordered_json::array();
    for (const auto& t : result.trials)
        trials.push_back({{"k", t.k}, {"feasible", t.feasible}, {"nodes", t.nodes}});
    j["trials"] = std::move(trials);
    j["result"]["status"] = solve_status_name(result.status);
    j["result"]["value"] = result.value;
    if (result.witness) {
        auto labels = nlohmann::ordered_json::array();
        for (const auto& label : result.witness->labels) labels.push_back(label);
        j["result"]["witness"] = std::move(labels);
    } else {
        j["result"]["witness"] = nullptr;
    }
    return j.dump(2) + "\n";
}

}  // namespace usn
