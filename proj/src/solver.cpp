#include "cliquecover/solver.hpp"

#include "cliquecover/bounds.hpp"
#include "cliquecover/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <vector>

namespace cliquecover {

namespace {

using Mask = std::uint64_t;

std::uint64_t pairs(std::uint64_t s) noexcept
{
    return s * (s - 1) / 2;
}

class CoverSearch {
public:
    CoverSearch(const Graph &g, std::size_t k) : n_(g.n()), k_(k), adj_(g.n(), 0), remaining_(g.edge_count())
    {
        for (const auto &e : g.edges()) {
            adj_[e.u] |= Mask{1} << e.v;
            adj_[e.v] |= Mask{1} << e.u;
        }
    }

    SolveResult run()
    {
        if (n_ > 0)
            expand(0);
        SolveResult result;
        if (!found_)
            return result;
        result.feasible = true;
        result.best_sum = best_sum_;
        std::vector<Clique> cliques;
        cliques.reserve(k_);
        for (const auto &c : best_cliques_)
            cliques.emplace_back(c);
        for (std::size_t pad = 0; cliques.size() < k_; ++pad)
            cliques.emplace_back(std::vector<Vertex>{static_cast<Vertex>(pad % n_)});
        std::sort(cliques.begin(), cliques.end());
        result.witness = CliqueCover(n_, std::move(cliques));
        return result;
    }

private:
    void expand(std::uint64_t covered_sum)
    {
        const std::size_t used = chosen_.size();
        if (remaining_ == 0) {
            record(covered_sum + (k_ - used));
            return;
        }
        if (used == k_)
            return;
        const std::uint64_t slots = k_ - used;

        unsigned max_degree = 0;
        for (Mask m : adj_)
            max_degree = std::max(max_degree, static_cast<unsigned>(std::popcount(m)));
        const std::uint64_t largest = max_degree + 1;
        if (remaining_ > slots * pairs(largest))
            return;

        if (found_) {
            // Mean-size bound on the remaining slots, each at least a K_1.
            double mean_cap = f_inv(2.0 * static_cast<double>(remaining_) / static_cast<double>(slots));
            auto optimistic = static_cast<std::uint64_t>(std::floor(static_cast<double>(slots) * mean_cap + 1e-9));
            optimistic = std::min(optimistic, slots * largest);
            if (covered_sum + optimistic < best_sum_)
                return;
        }

        // Lowest uncovered edge (u,v); every cover must place it in exactly one clique.
        Vertex u = 0;
        while (adj_[u] == 0)
            ++u;
        auto v = static_cast<Vertex>(std::countr_zero(adj_[u]));

        std::vector<Mask> candidates;
        collect(Mask{1} << u | Mask{1} << v, adj_[u] & adj_[v], candidates);
        std::sort(candidates.begin(), candidates.end(), [](Mask a, Mask b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            if (pa != pb)
                return pa > pb;
            return a < b;
        });

        for (Mask clique : candidates) {
            apply(clique, false);
            chosen_.push_back(clique);
            expand(covered_sum + static_cast<std::uint64_t>(std::popcount(clique)));
            chosen_.pop_back();
            apply(clique, true);
        }
    }

    // Every residual clique containing `base` and drawn from `pool`.
    void collect(Mask base, Mask pool, std::vector<Mask> &out) const
    {
        out.push_back(base);
        while (pool) {
            auto w = static_cast<unsigned>(std::countr_zero(pool));
            pool &= pool - 1;
            collect(base | Mask{1} << w, pool & adj_[w], out);
        }
    }

    void apply(Mask clique, bool restore)
    {
        for (Mask rest = clique; rest; rest &= rest - 1) {
            auto a = static_cast<unsigned>(std::countr_zero(rest));
            Mask others = clique & ~(Mask{1} << a);
            if (restore)
                adj_[a] |= others;
            else
                adj_[a] &= ~others;
        }
        std::uint64_t edges = pairs(static_cast<std::uint64_t>(std::popcount(clique)));
        remaining_ = restore ? remaining_ + edges : remaining_ - edges;
    }

    void record(std::uint64_t total)
    {
        std::vector<std::vector<Vertex>> cliques;
        cliques.reserve(chosen_.size());
        for (Mask c : chosen_) {
            std::vector<Vertex> vs;
            for (Mask rest = c; rest; rest &= rest - 1)
                vs.push_back(static_cast<Vertex>(std::countr_zero(rest)));
            cliques.push_back(std::move(vs));
        }
        std::sort(cliques.begin(), cliques.end());
        if (!found_ || total > best_sum_ || (total == best_sum_ && cliques < best_cliques_)) {
            found_ = true;
            best_sum_ = total;
            best_cliques_ = std::move(cliques);
        }
    }

    std::size_t n_;
    std::size_t k_;
    std::vector<Mask> adj_;
    std::uint64_t remaining_;
    std::vector<Mask> chosen_;

    bool found_ = false;
    std::uint64_t best_sum_ = 0;
    std::vector<std::vector<Vertex>> best_cliques_;
};

} // namespace

SolveResult max_cover_sum(const Graph &g, std::size_t k, const SolverLimits &limits)
{
    if (k == 0)
        throw InputError("max_cover_sum: clique count must be at least 1");
    if (limits.max_vertices > 64)
        throw InputError("max_cover_sum: vertex limit cannot exceed 64");
    if (g.n() > limits.max_vertices || g.edge_count() > limits.max_edges)
        throw InstanceTooLarge("instance too large: " + std::to_string(g.n()) + " vertices, " +
                               std::to_string(g.edge_count()) + " edges (limits " +
                               std::to_string(limits.max_vertices) + ", " + std::to_string(limits.max_edges) + ")");
    return CoverSearch(g, k).run();
}

TExactResult t_exact(std::size_t n, std::size_t max_n)
{
    if (n == 0)
        throw InputError("t_exact: n must be at least 1");
    if (n > max_n)
        throw InstanceTooLarge("instance too large: t_exact enumerates all graphs and is limited to n <= " +
                               std::to_string(max_n));
    const Graph full = complete_graph(n);
    const auto all = full.edges();
    if (all.size() >= 63)
        throw InstanceTooLarge("instance too large: t_exact cannot enumerate 2^" + std::to_string(all.size()) + " graphs");
    const SolverLimits limits{n, all.size()};

    bool have = false;
    TExactResult best;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
        pairs.clear();
        for (std::size_t e = 0; e < all.size(); ++e)
            if (mask >> e & 1)
                pairs.emplace_back(all[e].u, all[e].v);
        Graph g = graph_from_edges(n, pairs);
        SolveResult r = max_cover_sum(g, n, limits);
        if (!r.feasible)
            continue;
        bool better = !have || r.best_sum > best.best_sum;
        if (!better && r.best_sum == best.best_sum) {
            auto ours = g.edges();
            auto theirs = best.witness_graph.edges();
            better = ours.size() > theirs.size() ||
                     (ours.size() == theirs.size() &&
                      std::lexicographical_compare(ours.begin(), ours.end(), theirs.begin(), theirs.end()));
        }
        if (better) {
            have = true;
            best = {r.best_sum, std::move(g), std::move(r.witness)};
        }
    }
    return best;
}

} // namespace cliquecover
