#include "cliquecover/error.hpp"
#include "cliquecover/graph.hpp"

#include <doctest.h>

#include <random>

using namespace cliquecover;

namespace {

std::vector<std::pair<Vertex, Vertex>> as_pairs(const Graph &g)
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto &e : g.edges())
        out.emplace_back(e.u, e.v);
    return out;
}

} // namespace

TEST_CASE("complete_graph")
{
    Graph k3 = complete_graph(3);
    CHECK(k3.n() == 3);
    std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 2}};
    CHECK(std::vector<Edge>(k3.edges().begin(), k3.edges().end()) == expected);

    CHECK(complete_graph(0).edge_count() == 0);
    CHECK(complete_graph(1).n() == 1);
    CHECK(complete_graph(1).edge_count() == 0);
    CHECK(complete_graph(7).edge_count() == 21);

    for (std::size_t n = 0; n <= 40; ++n)
        CHECK(complete_graph(n).edge_count() == n * (n > 0 ? n - 1 : 0) / 2);
}

TEST_CASE("graph_from_edges canonicalizes and deduplicates")
{
    std::vector<std::pair<Vertex, Vertex>> pairs{{1, 0}, {0, 1}, {2, 3}};
    Graph g = graph_from_edges(4, pairs);
    std::vector<Edge> expected{{0, 1}, {2, 3}};
    CHECK(std::vector<Edge>(g.edges().begin(), g.edges().end()) == expected);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(3, 3));
}

TEST_CASE("graph_from_edges rejects bad pairs")
{
    std::vector<std::pair<Vertex, Vertex>> loop{{0, 0}};
    CHECK_THROWS_WITH_AS(graph_from_edges(2, loop), doctest::Contains("self-loop (0,0)"), InputError);
    std::vector<std::pair<Vertex, Vertex>> far{{0, 5}};
    CHECK_THROWS_WITH_AS(graph_from_edges(3, far), doctest::Contains("out of range in (0,5)"), InputError);
}

TEST_CASE("graph_from_edges is idempotent on its own output")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + rng() % 12;
        std::vector<std::pair<Vertex, Vertex>> pairs;
        std::size_t count = rng() % 40;
        while (pairs.size() < count) {
            Vertex a = rng() % n, b = rng() % n;
            if (a != b)
                pairs.emplace_back(a, b);
        }
        Graph once = graph_from_edges(n, pairs);
        Graph twice = graph_from_edges(n, as_pairs(once));
        CHECK(once == twice);
        CHECK(once.edge_count() <= n * (n - 1) / 2);
    }
}

TEST_CASE("Clique form")
{
    CHECK(Clique({0, 3, 5}).size() == 3);
    CHECK_THROWS_AS(Clique({}), InputError);
    CHECK_THROWS_AS(Clique({2, 1}), InputError);
    CHECK_THROWS_AS(Clique({1, 1}), InputError);
    CHECK(Clique::canonical({5, 0, 3}) == Clique({0, 3, 5}));
    CHECK_THROWS_AS(Clique::canonical({4, 4}), InputError);
    std::vector<Edge> expected{{0, 3}, {0, 5}, {3, 5}};
    CHECK(Clique({0, 3, 5}).edges() == expected);
}

TEST_CASE("CliqueCover checks vertex range")
{
    CHECK_NOTHROW(CliqueCover(3, {Clique({0, 2})}));
    CHECK_THROWS_AS(CliqueCover(3, {Clique({0, 3})}), InputError);
}

TEST_CASE("is_clique_in")
{
    CHECK(is_clique_in(complete_graph(4), Clique({0, 1, 2})));
    std::vector<std::pair<Vertex, Vertex>> path{{0, 1}, {1, 2}};
    Graph p3 = graph_from_edges(3, path);
    CHECK_FALSE(is_clique_in(p3, Clique({0, 1, 2})));
    CHECK(is_clique_in(p3, Clique({1, 2})));

    Graph empty = graph_from_edges(6, {});
    for (Vertex v = 0; v < 6; ++v)
        CHECK(is_clique_in(empty, Clique({v})));
    CHECK_THROWS_AS(is_clique_in(empty, Clique({6})), InputError);
}
