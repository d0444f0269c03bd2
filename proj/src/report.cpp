#include "cliquecover/report.hpp"

#include "cliquecover/bounds.hpp"
#include "cliquecover/error.hpp"
#include "cliquecover/primes.hpp"

#include <fmt/format.h>

namespace cliquecover {

RatioRow ratio_row(std::uint64_t n)
{
    auto p = plane_prime_below(n);
    if (!p)
        throw InputError("ratio_row: n must be at least 7, got " + std::to_string(n));
    RatioRow row;
    row.n = n;
    row.p = *p;
    row.plane_n = *p * *p + *p + 1;
    row.lower = row.plane_n * (*p + 1) + (n - row.plane_n);
    row.upper = bound_B(n).total;
    row.ratio = static_cast<double>(row.lower) / row.upper;
    return row;
}

std::vector<RatioRow> ratio_table(std::uint64_t from, std::uint64_t to, std::uint64_t step)
{
    if (from < 7 || from > to)
        throw InputError(fmt::format("ratio_table: need 7 <= from <= to, got from={} to={}", from, to));
    if (step == 0)
        throw InputError("ratio_table: step must be at least 1");
    std::vector<RatioRow> rows;
    rows.reserve((to - from) / step + 1);
    for (std::uint64_t n = from; n <= to; n += step) {
        rows.push_back(ratio_row(n));
        if (to - n < step)
            break;
    }
    return rows;
}

std::string write_ratio_table(const std::vector<RatioRow> &rows)
{
    std::string out = "n\tp\tplane_n\tlower\tupper\tratio\n";
    for (const auto &r : rows)
        out += fmt::format("{}\t{}\t{}\t{}\t{:.6f}\t{:.6f}\n", r.n, r.p, r.plane_n, r.lower, r.upper, r.ratio);
    return out;
}

} // namespace cliquecover
