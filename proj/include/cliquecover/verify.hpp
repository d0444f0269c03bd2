#pragma once

#include "cliquecover/graph.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace cliquecover {

struct VerifyReport {
    bool cliques_valid = false;    // every clique induces a complete subgraph of g
    bool edge_disjoint = false;    // multiply_covered is empty
    bool covers_all_edges = false; // uncovered is empty
    bool count_matches = false;    // number of cliques == g.n()
    std::uint64_t vertex_sum = 0;
    double bound_total = 0.0;
    bool within_bound = false;
    std::vector<Edge> multiply_covered;
    std::vector<Edge> uncovered;
    // multiplicity -> number of edges of g covered that many times
    std::map<std::uint64_t, std::uint64_t> multiplicity_histogram;

    bool valid() const noexcept { return cliques_valid && edge_disjoint && covers_all_edges && count_matches; }
};

std::uint64_t vertex_sum(const CliqueCover &cover) noexcept;

// Exhaustive edge accounting of `cover` against `g`.
// Throws InputError if a clique names a vertex >= g.n().
VerifyReport verify(const Graph &g, const CliqueCover &cover);

} // namespace cliquecover
