#include "cliquecover/verify.hpp"

#include "cliquecover/bounds.hpp"
#include "cliquecover/error.hpp"

#include <algorithm>
#include <string>

namespace cliquecover {

namespace {

std::uint64_t key(Vertex u, Vertex v) noexcept
{
    return (std::uint64_t{u} << 32) | v;
}

Edge unkey(std::uint64_t k) noexcept
{
    return {static_cast<Vertex>(k >> 32), static_cast<Vertex>(k & 0xffffffffu)};
}

} // namespace

std::uint64_t vertex_sum(const CliqueCover &cover) noexcept
{
    std::uint64_t sum = 0;
    for (const auto &c : cover.cliques())
        sum += c.size();
    return sum;
}

VerifyReport verify(const Graph &g, const CliqueCover &cover)
{
    for (std::size_t i = 0; i < cover.size(); ++i)
        if (cover.cliques()[i].back() >= g.n())
            throw InputError("clique " + std::to_string(i) + " has vertex " +
                             std::to_string(cover.cliques()[i].back()) + " outside graph of " +
                             std::to_string(g.n()) + " vertices");

    VerifyReport r;
    r.cliques_valid = true;
    std::vector<std::uint64_t> used;
    for (const auto &c : cover.cliques()) {
        auto vs = c.vertices();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                if (!g.has_edge(vs[a], vs[b]))
                    r.cliques_valid = false;
                used.push_back(key(vs[a], vs[b]));
            }
    }
    std::sort(used.begin(), used.end());

    for (std::size_t i = 0; i < used.size();) {
        std::size_t j = i;
        while (j < used.size() && used[j] == used[i])
            ++j;
        if (j - i >= 2)
            r.multiply_covered.push_back(unkey(used[i]));
        i = j;
    }

    // Both sequences are sorted; walk them together.
    std::size_t pos = 0;
    for (const auto &e : g.edges()) {
        std::uint64_t k = key(e.u, e.v);
        while (pos < used.size() && used[pos] < k)
            ++pos;
        std::uint64_t count = 0;
        while (pos < used.size() && used[pos] == k) {
            ++count;
            ++pos;
        }
        ++r.multiplicity_histogram[count];
        if (count == 0)
            r.uncovered.push_back(e);
    }

    r.edge_disjoint = r.multiply_covered.empty();
    r.covers_all_edges = r.uncovered.empty();
    r.count_matches = cover.size() == g.n();
    r.vertex_sum = vertex_sum(cover);
    if (g.n() >= 1) {
        r.bound_total = bound_B(g.n()).total;
        r.within_bound = static_cast<double>(r.vertex_sum) <= r.bound_total + 1e-9;
    }
    return r;
}

} // namespace cliquecover
