#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cliquecover {

using Vertex = std::uint32_t;

inline constexpr std::size_t kMaxVertices = std::size_t{1} << 20;

// Undirected edge in canonical form, u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

class Graph;
Graph complete_graph(std::size_t n);
Graph graph_from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);

// Simple undirected graph on vertices 0..n-1. Edges are kept sorted and unique.
class Graph {
public:
    Graph() = default;

    std::size_t n() const noexcept { return n_; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    // Order of u and v does not matter; out-of-range or equal vertices give false.
    bool has_edge(Vertex u, Vertex v) const noexcept;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    Graph(std::size_t n, std::vector<Edge> sorted_unique_edges)
        : n_(n), edges_(std::move(sorted_unique_edges)) {}

    friend Graph complete_graph(std::size_t n);
    friend Graph graph_from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

// Nonempty, strictly increasing vertex list.
class Clique {
public:
    // Throws InputError unless `vertices` is nonempty and strictly increasing.
    explicit Clique(std::vector<Vertex> vertices);

    // Sorts first; duplicates are still an error.
    static Clique canonical(std::vector<Vertex> vertices);

    std::size_t size() const noexcept { return vertices_.size(); }
    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    Vertex front() const noexcept { return vertices_.front(); }
    Vertex back() const noexcept { return vertices_.back(); }

    // All pairs {a,b} with a < b, in lexicographic order.
    std::vector<Edge> edges() const;

    friend auto operator<=>(const Clique &, const Clique &) = default;

private:
    std::vector<Vertex> vertices_;
};

// Ordered list of cliques whose vertices all lie below n.
class CliqueCover {
public:
    CliqueCover() = default;
    CliqueCover(std::size_t n, std::vector<Clique> cliques);

    std::size_t n() const noexcept { return n_; }
    std::span<const Clique> cliques() const noexcept { return cliques_; }
    std::size_t size() const noexcept { return cliques_.size(); }

    friend bool operator==(const CliqueCover &, const CliqueCover &) = default;

private:
    std::size_t n_ = 0;
    std::vector<Clique> cliques_;
};

bool is_clique_in(const Graph &g, const Clique &c);

} // namespace cliquecover
