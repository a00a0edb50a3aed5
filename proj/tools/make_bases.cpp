// Maintenance utility: recomputes the embedded base labelings for small
// paths and cycles with the exact solver and prints them as C++ tables.
// The output is pasted into src/constructions.cpp when the tables change.
#include <cstdio>
#include <string>

#include "usn/graph.hpp"
#include "usn/labeling.hpp"
#include "usn/solver.hpp"

using namespace usn;

namespace {

void print_table(const char* name, const Labeling& labeling) {
    std::printf("    // %s (universe %d)\n", name,
                static_cast<int>(labeling.universe().size()));
    std::printf("    {");
    for (size_t v = 0; v < labeling.labels.size(); ++v) {
        if (v) std::printf(", ");
        std::printf("{");
        for (size_t i = 0; i < labeling.labels[v].size(); ++i) {
            if (i) std::printf(",");
            std::printf("%d", labeling.labels[v][i]);
        }
        std::printf("}");
    }
    std::printf("},\n");
}

void solve_and_print(const std::string& tag, const Graph& g, bool uniform) {
    SolveResult r = uniform ? exact_uusn(g) : exact_usn(g);
    if (r.status != SolveStatus::optimal || !r.witness) {
        std::printf("    // %s: solver status %s\n", tag.c_str(),
                    solve_status_name(r.status));
        return;
    }
    print_table(tag.c_str(), *r.witness);
}

}  // namespace

int main() {
    std::printf("paths, smallest universe:\n");
    for (int n = 1; n <= 9; ++n)
        solve_and_print("P" + std::to_string(n), build_family({Family::path, {n}}), false);
    std::printf("cycles, smallest universe:\n");
    for (int n = 3; n <= 8; ++n)
        solve_and_print("C" + std::to_string(n), build_family({Family::cycle, {n}}), false);
    std::printf("paths, smallest uniform universe:\n");
    for (int n = 1; n <= 9; ++n)
        solve_and_print("P" + std::to_string(n) + "u", build_family({Family::path, {n}}), true);
    std::printf("cycles, smallest uniform universe:\n");
    for (int n = 3; n <= 8; ++n)
        solve_and_print("C" + std::to_string(n) + "u", build_family({Family::cycle, {n}}), true);
    return 0;
}
