#include "cliquecover/io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <utility>
#include <vector>

namespace cliquecover {

namespace {

// Splits text into numbered lines and hands out the non-blank, non-comment ones.
class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    // Next meaningful line as whitespace-separated tokens.
    std::optional<std::vector<std::string_view>> next()
    {
        while (pos_ < text_.size()) {
            std::size_t end = text_.find('\n', pos_);
            if (end == std::string_view::npos)
                end = text_.size();
            std::string_view line = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
            ++line_;
            auto tokens = split(line);
            if (tokens.empty() || tokens.front().front() == '#')
                continue;
            return tokens;
        }
        return std::nullopt;
    }

    std::size_t line() const noexcept { return line_; }

private:
    static std::vector<std::string_view> split(std::string_view line)
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
        while (i < line.size()) {
            while (i < line.size() && space(line[i]))
                ++i;
            std::size_t start = i;
            while (i < line.size() && !space(line[i]))
                ++i;
            if (i > start)
                out.push_back(line.substr(start, i - start));
        }
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

std::uint64_t to_integer(std::string_view token, std::size_t line)
{
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    return value;
}

} // namespace

Graph parse_graph_file(std::string_view text)
{
    LineReader reader(text);
    auto header = reader.next();
    if (!header)
        throw ParseError(reader.line(), "missing header \"n m\"");
    if (header->size() != 2)
        throw ParseError(reader.line(), "header must be \"n m\"");
    const std::size_t header_line = reader.line();
    const std::uint64_t n = to_integer((*header)[0], header_line);
    const std::uint64_t m = to_integer((*header)[1], header_line);
    if (n > kMaxVertices)
        throw ParseError(header_line, "vertex count " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));

    std::vector<std::pair<Vertex, Vertex>> pairs;
    while (auto tokens = reader.next()) {
        const std::size_t line = reader.line();
        if (tokens->size() != 2)
            throw ParseError(line, "edge line must be \"u v\"");
        if (pairs.size() == m)
            throw ParseError(line, "more edge lines than the " + std::to_string(m) + " declared");
        std::uint64_t u = to_integer((*tokens)[0], line);
        std::uint64_t v = to_integer((*tokens)[1], line);
        if (u >= n || v >= n)
            throw ParseError(line, "vertex " + std::to_string(u >= n ? u : v) + " >= n=" + std::to_string(n));
        if (u == v)
            throw ParseError(line, "self-loop on vertex " + std::to_string(u));
        pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (pairs.size() != m)
        throw ParseError(reader.line(), "expected " + std::to_string(m) + " edge lines, found " +
                                            std::to_string(pairs.size()));
    return graph_from_edges(n, pairs);
}

std::string write_graph_file(const Graph &g)
{
    std::string out = std::to_string(g.n()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto &e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

CliqueCover parse_cover_file(std::string_view text)
{
    LineReader reader(text);
    auto header = reader.next();
    if (!header)
        throw ParseError(reader.line(), "missing clique count");
    if (header->size() != 1)
        throw ParseError(reader.line(), "first line must be the clique count");
    const std::uint64_t k = to_integer(header->front(), reader.line());

    std::vector<Clique> cliques;
    std::size_t n = 0;
    while (auto tokens = reader.next()) {
        const std::size_t line = reader.line();
        if (cliques.size() == k)
            throw ParseError(line, "more clique lines than the " + std::to_string(k) + " declared");
        const std::uint64_t c = to_integer(tokens->front(), line);
        if (c == 0)
            throw ParseError(line, "clique must have at least one vertex");
        if (tokens->size() - 1 != c)
            throw ParseError(line, "clique declares " + std::to_string(c) + " vertices but lists " +
                                       std::to_string(tokens->size() - 1));
        std::vector<Vertex> vs;
        vs.reserve(c);
        for (std::size_t t = 1; t < tokens->size(); ++t) {
            std::uint64_t v = to_integer((*tokens)[t], line);
            if (v >= kMaxVertices)
                throw ParseError(line, "vertex " + std::to_string(v) + " exceeds the vertex limit");
            if (!vs.empty() && v <= vs.back())
                throw ParseError(line, "vertices not strictly increasing");
            vs.push_back(static_cast<Vertex>(v));
        }
        n = std::max<std::size_t>(n, vs.back() + 1);
        cliques.emplace_back(std::move(vs));
    }
    if (cliques.size() != k)
        throw ParseError(reader.line(), "expected " + std::to_string(k) + " clique lines, found " +
                                            std::to_string(cliques.size()));
    return CliqueCover(n, std::move(cliques));
}

std::string write_cover_file(const CliqueCover &cover)
{
    std::string out = std::to_string(cover.size()) + "\n";
    for (const auto &c : cover.cliques()) {
        out += std::to_string(c.size());
        for (Vertex v : c.vertices()) {
            out += ' ';
            out += std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

} // namespace cliquecover
