#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cliquecover {

// Constructive lower bound on the optimum for n vertices: the largest
// prime-order plane that fits, as K_plane_n plus isolated vertices, covered
// by the plane's cliques and one K_1 per leftover vertex.
struct RatioRow {
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    std::uint64_t plane_n = 0;
    std::uint64_t lower = 0; // plane_n*(p+1) + (n - plane_n)
    double upper = 0.0;      // bound_B(n).total
    double ratio = 0.0;      // lower / upper
};

// Throws InputError for n < 7.
RatioRow ratio_row(std::uint64_t n);

// Rows for from, from+step, ... <= to. Needs 7 <= from <= to and step >= 1.
std::vector<RatioRow> ratio_table(std::uint64_t from, std::uint64_t to, std::uint64_t step = 1);

// TSV with header "n\tp\tplane_n\tlower\tupper\tratio"; reals use 6 decimals.
std::string write_ratio_table(const std::vector<RatioRow> &rows);

} // namespace cliquecover
