#pragma once

#include "cliquecover/graph.hpp"

#include <cstddef>
#include <cstdint>

namespace cliquecover {

// Desk-scale guard for the exact search. Vertex sets are 64-bit masks, so
// max_vertices cannot exceed 64.
struct SolverLimits {
    std::size_t max_vertices = 16;
    std::size_t max_edges = 30;
};

struct SolveResult {
    bool feasible = false;
    std::uint64_t best_sum = 0; // meaningful only when feasible
    CliqueCover witness;        // meaningful only when feasible
};

// Exact maximum vertex sum over partitions of E(g) into at most k cliques of g,
// padded with K_1 cliques to exactly k. Among optimal covers the witness uses
// the lexicographically smallest sorted list of edge-covering cliques; padding
// K_1s sit on vertices 0, 1, 2, ... (mod n). The witness list is sorted.
//
// Throws InputError for k == 0 and InstanceTooLarge when g exceeds `limits`.
SolveResult max_cover_sum(const Graph &g, std::size_t k, const SolverLimits &limits = {});

struct TExactResult {
    std::uint64_t best_sum = 0;
    Graph witness_graph;
    CliqueCover witness_cover;
};

// Maximum of max_cover_sum(g, n) over every labeled graph g on n vertices.
// Ties between graphs go to the one with more edges, then the smaller edge list.
// Throws InputError for n == 0 and InstanceTooLarge for n > max_n.
TExactResult t_exact(std::size_t n, std::size_t max_n = 6);

} // namespace cliquecover
