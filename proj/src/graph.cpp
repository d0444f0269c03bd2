#include "cliquecover/graph.hpp"

#include "cliquecover/error.hpp"

#include <algorithm>
#include <string>

namespace cliquecover {

namespace {

void check_vertex_count(std::size_t n)
{
    if (n > kMaxVertices)
        throw InputError("graph has " + std::to_string(n) + " vertices, limit is " +
                         std::to_string(kMaxVertices));
}

std::string pair_text(Vertex u, Vertex v)
{
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

Graph complete_graph(std::size_t n)
{
    check_vertex_count(n);
    std::vector<Edge> edges;
    edges.reserve(n < 2 ? 0 : n * (n - 1) / 2);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    return Graph(n, std::move(edges));
}

Graph graph_from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs)
{
    check_vertex_count(n);
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a == b)
            throw InputError("self-loop " + pair_text(a, b));
        if (a >= n || b >= n)
            throw InputError("vertex out of range in " + pair_text(a, b) + " for n=" + std::to_string(n));
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept
{
    if (u == v)
        return false;
    Edge e{std::min(u, v), std::max(u, v)};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Clique::Clique(std::vector<Vertex> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.empty())
        throw InputError("clique must have at least one vertex");
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        if (vertices_[i - 1] >= vertices_[i])
            throw InputError("clique vertices not strictly increasing at position " + std::to_string(i));
}

Clique Clique::canonical(std::vector<Vertex> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    return Clique(std::move(vertices));
}

std::vector<Edge> Clique::edges() const
{
    std::vector<Edge> out;
    out.reserve(size() * (size() - 1) / 2);
    for (std::size_t a = 0; a < vertices_.size(); ++a)
        for (std::size_t b = a + 1; b < vertices_.size(); ++b)
            out.push_back({vertices_[a], vertices_[b]});
    return out;
}

CliqueCover::CliqueCover(std::size_t n, std::vector<Clique> cliques)
    : n_(n), cliques_(std::move(cliques))
{
    for (std::size_t i = 0; i < cliques_.size(); ++i)
        if (cliques_[i].back() >= n_)
            throw InputError("clique " + std::to_string(i) + " has vertex " +
                             std::to_string(cliques_[i].back()) + " >= n=" + std::to_string(n_));
}

bool is_clique_in(const Graph &g, const Clique &c)
{
    if (c.back() >= g.n())
        throw InputError("clique vertex " + std::to_string(c.back()) + " out of range for n=" +
                         std::to_string(g.n()));
    auto vs = c.vertices();
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (!g.has_edge(vs[a], vs[b]))
                return false;
    return true;
}

} // namespace cliquecover
