#pragma once

#include "cliquecover/error.hpp"
#include "cliquecover/graph.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace cliquecover {

// Malformed text input; line() is 1-based.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string &what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Graph text format:
//   # comment lines anywhere
//   n m
//   u v        (m lines, 0-indexed)
Graph parse_graph_file(std::string_view text);
std::string write_graph_file(const Graph &g);

// Cover text format:
//   k
//   c v1 v2 ... vc   (k lines, strictly increasing vertices)
// The parsed cover's n is one past its largest vertex.
CliqueCover parse_cover_file(std::string_view text);
std::string write_cover_file(const CliqueCover &cover);

} // namespace cliquecover
