#pragma once

#include <cstdint>
#include <span>

namespace cliquecover {

// f(m) = m(m-1): twice the edge count of a clique on m vertices.
double f(double m) noexcept;

// Inverse of f on [1, inf): the root m >= 1 of m(m-1) = x. Throws InputError for x < 0.
double f_inv(double x);

// d/dx f_inv(x) = 1 / (2 f_inv(x) - 1). Throws InputError for x <= 0.
double f_inv_derivative(double x);

// Upper bound on the total vertex count of n edge-disjoint cliques covering
// a graph on n vertices. The mean clique size cannot exceed mean_cap.
struct BoundValue {
    std::uint64_t n = 0;
    double mean_cap = 0.0;
    double total = 0.0;
};

// Throws InputError for n == 0. When n = p^2+p+1 for a prime p the total is
// snapped to the integer n(p+1).
BoundValue bound_B(std::uint64_t n);

// S(S/n - 1) <= sum v(v-1), with S = sum v and n = |v|. Always true for valid
// input; a false result means the arithmetic is broken. Tolerance is 1e-9
// relative. Throws InputError on an empty list or a non-positive entry.
bool mean_inequality_holds(std::span<const double> v);

} // namespace cliquecover
