#include "cliquecover/bounds.hpp"
#include "cliquecover/error.hpp"
#include "cliquecover/plane.hpp"
#include "cliquecover/solver.hpp"
#include "cliquecover/verify.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace cliquecover;

namespace {

std::vector<Clique> cliques_of(const SolveResult &r)
{
    return {r.witness.cliques().begin(), r.witness.cliques().end()};
}

oracle::EdgeList edge_list(const Graph &g)
{
    oracle::EdgeList out;
    for (const auto &e : g.edges())
        out.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
    return out;
}

Graph random_graph(std::mt19937 &rng, std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng() % 2)
                pairs.emplace_back(u, v);
    return graph_from_edges(n, pairs);
}

} // namespace

TEST_CASE("max_cover_sum on K_4")
{
    SolveResult r = max_cover_sum(complete_graph(4), 4);
    REQUIRE(r.feasible);
    CHECK(r.best_sum == 9);
    CHECK(r.best_sum == *oracle::max_cover_sum(4, oracle::complete_edges(4), 4));
    std::vector<Clique> expected{Clique({0, 1}), Clique({0, 2}), Clique({0, 3}), Clique({1, 2, 3})};
    CHECK(cliques_of(r) == expected);
    CHECK(verify(complete_graph(4), r.witness).valid());
}

TEST_CASE("max_cover_sum on K_3")
{
    SolveResult r = max_cover_sum(complete_graph(3), 3);
    REQUIRE(r.feasible);
    CHECK(r.best_sum == 6);
    std::vector<Clique> expected{Clique({0, 1}), Clique({0, 2}), Clique({1, 2})};
    CHECK(cliques_of(r) == expected);

    CHECK(max_cover_sum(complete_graph(3), 1).best_sum == 3);
    CHECK(max_cover_sum(complete_graph(3), 2).best_sum == 4);
}

TEST_CASE("max_cover_sum on an edgeless graph pads with K_1s")
{
    SolveResult r = max_cover_sum(graph_from_edges(3, {}), 3);
    REQUIRE(r.feasible);
    CHECK(r.best_sum == 3);
    std::vector<Clique> expected{Clique({0}), Clique({1}), Clique({2})};
    CHECK(cliques_of(r) == expected);
}

TEST_CASE("max_cover_sum infeasible instances")
{
    // A 4-cycle has no triangles, so its 4 edges need 4 cliques.
    std::vector<std::pair<Vertex, Vertex>> c4{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    Graph g = graph_from_edges(4, c4);
    CHECK_FALSE(max_cover_sum(g, 3).feasible);
    CHECK(max_cover_sum(g, 4).best_sum == 8);
    CHECK_FALSE(max_cover_sum(Graph(), 1).feasible);
}

TEST_CASE("max_cover_sum guards")
{
    CHECK_THROWS_AS(max_cover_sum(complete_graph(3), 0), InputError);
    CHECK_THROWS_WITH_AS(max_cover_sum(complete_graph(17), 17), doctest::Contains("instance too large"),
                         InstanceTooLarge);
    CHECK_THROWS_AS(max_cover_sum(complete_graph(9), 9), InstanceTooLarge); // 36 edges
    SolverLimits wide{40, 100};
    CHECK(max_cover_sum(complete_graph(9), 9, wide).feasible);
    CHECK_THROWS_AS(max_cover_sum(complete_graph(3), 3, SolverLimits{65, 30}), InputError);
}

TEST_CASE("max_cover_sum agrees with brute-force partition enumeration")
{
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 5;
        std::size_t k = 1 + rng() % (n + 2);
        Graph g = random_graph(rng, n);
        CAPTURE(trial);
        SolveResult r = max_cover_sum(g, k);
        auto expected = oracle::max_cover_sum(static_cast<int>(n), edge_list(g), static_cast<int>(k));
        REQUIRE(r.feasible == expected.has_value());
        if (!r.feasible)
            continue;
        CHECK(static_cast<long>(r.best_sum) == *expected);
        CHECK(r.witness.size() == k);
        CHECK(vertex_sum(r.witness) == r.best_sum);
        VerifyReport v = verify(g, r.witness);
        CHECK(v.cliques_valid);
        CHECK(v.edge_disjoint);
        CHECK(v.covers_all_edges);
        if (k == n) {
            CHECK(v.valid());
            CHECK(v.within_bound);
        }
    }
}

TEST_CASE("witness is deterministic")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 6);
        SolveResult a = max_cover_sum(g, 6);
        SolveResult b = max_cover_sum(g, 6);
        CHECK(a.feasible == b.feasible);
        CHECK(a.best_sum == b.best_sum);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("an extra clique slot keeps feasibility and adds at least one")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + rng() % 5;
        Graph g = random_graph(rng, n);
        for (std::size_t k = 1; k <= n + 1; ++k) {
            SolveResult at = max_cover_sum(g, k);
            if (!at.feasible)
                continue;
            SolveResult next = max_cover_sum(g, k + 1);
            REQUIRE(next.feasible);
            CHECK(next.best_sum >= at.best_sum + 1);
        }
    }
}

TEST_CASE("every valid cover on small n respects the bound")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 1 + rng() % 6;
        Graph g = random_graph(rng, n);
        SolveResult r = max_cover_sum(g, n);
        if (!r.feasible)
            continue;
        VerifyReport v = verify(g, r.witness);
        CHECK(v.valid());
        CHECK(v.within_bound);
        CHECK(static_cast<double>(r.best_sum) <= bound_B(n).total + 1e-9);
    }
}

TEST_CASE("Fano plane is optimal on K_7")
{
    SolveResult r = max_cover_sum(complete_graph(7), 7);
    REQUIRE(r.feasible);
    CHECK(r.best_sum == 21);
    CHECK(static_cast<double>(r.best_sum) == bound_B(7).total);
    VerifyReport v = verify(complete_graph(7), r.witness);
    CHECK(v.valid());
    for (const auto &c : r.witness.cliques())
        CHECK(c.size() == 3);
    // smallest Fano plane in sorted order
    std::vector<Clique> expected{Clique({0, 1, 2}), Clique({0, 3, 4}), Clique({0, 5, 6}), Clique({1, 3, 5}),
                                 Clique({1, 4, 6}), Clique({2, 3, 6}), Clique({2, 4, 5})};
    CHECK(cliques_of(r) == expected);
}

TEST_CASE("t_exact")
{
    TExactResult t1 = t_exact(1);
    CHECK(t1.best_sum == 1);

    TExactResult t2 = t_exact(2);
    CHECK(t2.best_sum == 3);
    CHECK(t2.witness_graph == complete_graph(2));

    TExactResult t3 = t_exact(3);
    CHECK(t3.best_sum == 6);
    CHECK(t3.witness_graph == complete_graph(3));
    std::vector<Clique> triangle{Clique({0, 1}), Clique({0, 2}), Clique({1, 2})};
    CHECK(std::vector<Clique>(t3.witness_cover.cliques().begin(), t3.witness_cover.cliques().end()) == triangle);

    TExactResult t4 = t_exact(4);
    CHECK(t4.best_sum == 9);
    CHECK(t4.best_sum == static_cast<std::uint64_t>(oracle::t_value(4)));

    TExactResult t5 = t_exact(5);
    CHECK(t5.best_sum == 12);
    CHECK(t5.witness_graph == complete_graph(5));
    std::vector<Clique> k5{Clique({0, 1}), Clique({0, 2}), Clique({0, 3}), Clique({0, 4}), Clique({1, 2, 3, 4})};
    CHECK(std::vector<Clique>(t5.witness_cover.cliques().begin(), t5.witness_cover.cliques().end()) == k5);

    for (const auto *t : {&t1, &t2, &t3, &t4, &t5}) {
        VerifyReport v = verify(t->witness_graph, t->witness_cover);
        CHECK(v.valid());
        CHECK(v.within_bound);
        CHECK(v.vertex_sum == t->best_sum);
    }

    CHECK_THROWS_AS(t_exact(0), InputError);
    CHECK_THROWS_AS(t_exact(7), InstanceTooLarge);
}

TEST_CASE("t_exact(6) meets the integer part of the bound")
{
    TExactResult t6 = t_exact(6);
    // B(6) ~ 16.77, so a verified cover of sum 16 is optimal.
    CHECK(t6.best_sum == 16);
    CHECK(static_cast<std::uint64_t>(std::floor(bound_B(6).total)) == 16);
    CHECK(verify(t6.witness_graph, t6.witness_cover).valid());
    CHECK(vertex_sum(t6.witness_cover) == 16);
    // The complete graph itself falls short here.
    CHECK(t6.witness_graph.edge_count() == 14);
    CHECK(max_cover_sum(complete_graph(6), 6).best_sum == 15);
}
