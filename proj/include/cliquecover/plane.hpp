#pragma once

#include "cliquecover/graph.hpp"

#include <cstdint>

namespace cliquecover {

// Vertex layout for the order-p construction on n = p^2+p+1 vertices:
// p+1 groups of p grid vertices, v(i,j) -> i*p + j, plus one special vertex -> n-1.
class PlaneParams {
public:
    // Throws NotPrimeError unless p is prime.
    explicit PlaneParams(std::uint64_t p);

    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t n() const noexcept { return p_ * p_ + p_ + 1; }

private:
    std::uint64_t p_;
};

struct GridVertex {
    std::uint64_t i = 0; // group, 0..p
    std::uint64_t j = 0; // position in group, 0..p-1
};

struct SpecialVertex {};
inline constexpr SpecialVertex kSpecialVertex{};

// Throws InputError when (i,j) is outside the grid.
Vertex plane_vertex_index(const PlaneParams &params, GridVertex v);
Vertex plane_vertex_index(const PlaneParams &params, SpecialVertex);

// The special vertex together with every vertex of group `group`.
Clique type1_clique(const PlaneParams &params, std::uint64_t group);

// For each group i < p the vertex v(i, (b - a*i) mod p), plus v(p, a).
Clique type2_clique(const PlaneParams &params, std::uint64_t a, std::uint64_t b);

struct PlaneCover {
    Graph graph;
    CliqueCover cover;
};

// K_n with n = p^2+p+1 and its cover by n edge-disjoint copies of K_{p+1}:
// the p+1 type 1 cliques by group, then the p^2 type 2 cliques in (a,b) order.
// Throws NotPrimeError for composite p.
PlaneCover plane_cover(std::uint64_t p);

} // namespace cliquecover
