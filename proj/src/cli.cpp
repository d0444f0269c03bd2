#include "cliquecover/cli.hpp"

#include "cliquecover/bounds.hpp"
#include "cliquecover/error.hpp"
#include "cliquecover/io.hpp"
#include "cliquecover/plane.hpp"
#include "cliquecover/primes.hpp"
#include "cliquecover/report.hpp"
#include "cliquecover/solver.hpp"
#include "cliquecover/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cliquecover {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInvalid = 2;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw IoError("cannot write " + path);
}

const char *flag(bool b)
{
    return b ? "true" : "false";
}

std::string edge_list(const std::vector<Edge> &edges)
{
    std::string s;
    for (const auto &e : edges)
        s += fmt::format("{}({},{})", s.empty() ? "" : " ", e.u, e.v);
    return s;
}

void print_report(std::ostream &out, const VerifyReport &r)
{
    out << "cliques_valid: " << flag(r.cliques_valid) << '\n'
        << "edge_disjoint: " << flag(r.edge_disjoint) << '\n'
        << "covers_all_edges: " << flag(r.covers_all_edges) << '\n'
        << "count_matches: " << flag(r.count_matches) << '\n'
        << "vertex_sum: " << r.vertex_sum << '\n'
        << fmt::format("bound_total: {:.6f}\n", r.bound_total)
        << "within_bound: " << flag(r.within_bound) << '\n'
        << "multiply_covered: " << edge_list(r.multiply_covered) << '\n'
        << "uncovered: " << edge_list(r.uncovered) << '\n';
}

} // namespace

int cli_dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Edge-disjoint clique covers with as many cliques as vertices", "cliquecover"};
    app.require_subcommand(1);

    std::uint64_t bound_n = 0;
    auto *bound = app.add_subcommand("bound", "Upper bound B(N) on the total clique size");
    bound->add_option("N", bound_n, "vertex count")->required();

    std::uint64_t construct_p = 0;
    std::string graph_out, cover_out;
    auto *construct = app.add_subcommand("construct", "Plane cover of K_{P^2+P+1} for a prime P");
    construct->add_option("P", construct_p, "prime order")->required();
    construct->add_option("--graph-out", graph_out, "write the complete graph here");
    construct->add_option("--cover-out", cover_out, "write the cover here instead of standard output");

    std::string graph_path, cover_path;
    auto *verify_cmd = app.add_subcommand("verify", "Certify a cover against a graph");
    verify_cmd->add_option("--graph", graph_path, "graph file")->required();
    verify_cmd->add_option("--cover", cover_path, "cover file")->required();

    std::string solve_graph;
    std::optional<std::size_t> solve_k;
    auto *solve = app.add_subcommand("solve", "Exact maximum vertex sum of a K-clique cover");
    solve->add_option("--graph", solve_graph, "graph file")->required();
    solve->add_option("--cliques", solve_k, "clique count (default: n)");

    std::size_t texact_n = 0;
    auto *texact = app.add_subcommand("texact", "Exact optimum over all graphs on N vertices");
    texact->add_option("N", texact_n, "vertex count")->required();

    std::uint64_t window_n = 0;
    double window_eps = 0.0;
    auto *window = app.add_subcommand("prime-window", "Largest plane size in (N(1-E), N]");
    window->add_option("N", window_n)->required();
    window->add_option("--epsilon", window_eps)->required();

    std::uint64_t lemma_n = 0;
    double lemma_eps = 0.0;
    auto *lemma1 = app.add_subcommand("lemma1", "Count primes in (N(1-E), N)");
    lemma1->add_option("N", lemma_n)->required();
    lemma1->add_option("--epsilon", lemma_eps)->required();

    std::uint64_t from = 0, to = 0, step = 1;
    auto *table = app.add_subcommand("ratio-table", "Constructive lower bound against B(N), as TSV");
    table->add_option("--from", from)->required();
    table->add_option("--to", to)->required();
    table->add_option("--step", step);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << e.what() << "\n\n" << app.help();
        return kExitError;
    }

    try {
        if (*bound) {
            BoundValue b = bound_B(bound_n);
            out << "n: " << b.n << '\n'
                << fmt::format("mean_cap: {:.6f}\n", b.mean_cap)
                << fmt::format("total: {:.6f}\n", b.total);
        } else if (*construct) {
            PlaneCover pc = plane_cover(construct_p);
            if (!graph_out.empty())
                write_file(graph_out, write_graph_file(pc.graph));
            if (!cover_out.empty())
                write_file(cover_out, write_cover_file(pc.cover));
            else
                out << write_cover_file(pc.cover);
        } else if (*verify_cmd) {
            Graph g = parse_graph_file(read_file(graph_path));
            CliqueCover cover = parse_cover_file(read_file(cover_path));
            VerifyReport r = verify(g, cover);
            print_report(out, r);
            return r.valid() ? kExitOk : kExitInvalid;
        } else if (*solve) {
            Graph g = parse_graph_file(read_file(solve_graph));
            SolveResult r = max_cover_sum(g, solve_k.value_or(g.n()));
            out << "feasible: " << flag(r.feasible) << '\n';
            if (r.feasible)
                out << "best_sum: " << r.best_sum << '\n' << write_cover_file(r.witness);
        } else if (*texact) {
            TExactResult r = t_exact(texact_n);
            out << "best_sum: " << r.best_sum << '\n'
                << "# witness graph\n"
                << write_graph_file(r.witness_graph) << "# witness cover\n"
                << write_cover_file(r.witness_cover);
        } else if (*window) {
            PrimeWindowResult r = prime_window(window_n, window_eps);
            out << "found: " << flag(r.found) << '\n';
            if (r.found)
                out << "p: " << r.p << '\n' << "plane_n: " << r.plane_n << '\n';
            out << fmt::format("lo: {:.6f}\n", r.lo) << "hi: " << r.hi << '\n';
        } else if (*lemma1) {
            std::uint64_t count = pi_window(lemma_n, lemma_eps);
            out << "n: " << lemma_n << '\n'
                << fmt::format("epsilon: {}\n", lemma_eps)
                << fmt::format("lo: {:.6f}\n", static_cast<double>(lemma_n) * (1.0 - lemma_eps))
                << "count: " << count << '\n';
        } else if (*table) {
            out << write_ratio_table(ratio_table(from, to, step));
        }
    } catch (const InputError &e) {
        err << e.what() << '\n';
        return kExitError;
    } catch (const IoError &e) {
        err << e.what() << '\n';
        return kExitError;
    }
    return kExitOk;
}

} // namespace cliquecover
