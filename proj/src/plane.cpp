#include "cliquecover/plane.hpp"

#include "cliquecover/error.hpp"
#include "cliquecover/primes.hpp"

#include <string>

namespace cliquecover {

PlaneParams::PlaneParams(std::uint64_t p) : p_(p)
{
    if (!is_prime(p))
        throw NotPrimeError(std::to_string(p) + " is not prime");
    if (n() > kMaxVertices)
        throw InputError("plane of order " + std::to_string(p) + " exceeds the vertex limit");
}

Vertex plane_vertex_index(const PlaneParams &params, GridVertex v)
{
    if (v.i > params.p() || v.j >= params.p())
        throw InputError("grid vertex (" + std::to_string(v.i) + "," + std::to_string(v.j) +
                         ") outside order " + std::to_string(params.p()));
    return static_cast<Vertex>(v.i * params.p() + v.j);
}

Vertex plane_vertex_index(const PlaneParams &params, SpecialVertex)
{
    return static_cast<Vertex>(params.n() - 1);
}

Clique type1_clique(const PlaneParams &params, std::uint64_t group)
{
    if (group > params.p())
        throw InputError("type 1 group " + std::to_string(group) + " out of range");
    std::vector<Vertex> vs;
    vs.reserve(params.p() + 1);
    for (std::uint64_t j = 0; j < params.p(); ++j)
        vs.push_back(plane_vertex_index(params, GridVertex{group, j}));
    vs.push_back(plane_vertex_index(params, kSpecialVertex));
    return Clique(std::move(vs));
}

Clique type2_clique(const PlaneParams &params, std::uint64_t a, std::uint64_t b)
{
    const std::uint64_t p = params.p();
    if (a >= p || b >= p)
        throw InputError("type 2 parameters (" + std::to_string(a) + "," + std::to_string(b) +
                         ") out of range for order " + std::to_string(p));
    std::vector<Vertex> vs;
    vs.reserve(p + 1);
    for (std::uint64_t i = 0; i < p; ++i) {
        // (b - a*i) mod p without going negative.
        std::uint64_t j = (b + p - (a * i) % p) % p;
        vs.push_back(plane_vertex_index(params, GridVertex{i, j}));
    }
    vs.push_back(plane_vertex_index(params, GridVertex{p, a}));
    return Clique(std::move(vs));
}

PlaneCover plane_cover(std::uint64_t p)
{
    PlaneParams params(p);
    std::vector<Clique> cliques;
    cliques.reserve(params.n());
    for (std::uint64_t group = 0; group <= p; ++group)
        cliques.push_back(type1_clique(params, group));
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b)
            cliques.push_back(type2_clique(params, a, b));
    return {complete_graph(params.n()), CliqueCover(params.n(), std::move(cliques))};
}

} // namespace cliquecover
