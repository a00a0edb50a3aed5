// Exact minimization of labeling parameters by canonical backtracking
// search. Ground truth for small graphs; every optimal result carries a
// witness that passes verify().
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "usn/graph.hpp"
#include "usn/labeling.hpp"

namespace usn {

struct SolveConfig {
    // Cap on universe size. Unset: n + #non-edges for usn/uusn (a labeling
    // always exists there), the exact usn value for iln.
    std::optional<int> max_universe;
    // Cap on individual label size (iln search sets this internally).
    std::optional<int> max_label;
    bool require_uniform = false;
    // Wall-clock budget in seconds; unset = unlimited.
    std::optional<double> time_budget_secs;
};

enum class SolveStatus { optimal, infeasible_at_cap, timeout };

const char* solve_status_name(SolveStatus s);

// Per-k record kept for the machine-readable certificate.
struct SolveTrial {
    int k;                 // universe size tried (or label cap for iln)
    bool feasible;
    long long nodes;       // search tree nodes expanded
};

struct SolveResult {
    SolveStatus status = SolveStatus::infeasible_at_cap;
    // Minimized parameter when optimal; for timeout, the largest value
    // proven infeasible plus one (a valid lower bound).
    int value = 0;
    std::optional<Labeling> witness;
    std::vector<SolveTrial> trials;
};

// Smallest universe size admitting a valid labeling. Deterministic:
// vertices are branched in descending-degree order and element ids are
// canonicalized by first use, so the witness does not depend on timing.
SolveResult exact_usn(const Graph& g, const SolveConfig& cfg = {});

// Smallest achievable maximum label size, searched with the universe capped
// (default cap: exact usn, which always admits some labeling). The value is
// exact relative to that cap.
SolveResult exact_iln(const Graph& g, const SolveConfig& cfg = {});

// Smallest universe size admitting a valid labeling with all labels of one
// common cardinality (the cardinality itself is searched).
SolveResult exact_uusn(const Graph& g, const SolveConfig& cfg = {});

// Machine-readable certificate: graph, parameter, per-k trial record,
// result and witness. Stable byte-for-byte across runs.
std::string solve_certificate(const Graph& g, const std::string& param,
                              const SolveConfig& cfg, const SolveResult& result);

}  // namespace usn
