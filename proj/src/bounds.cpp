#include "cliquecover/bounds.hpp"

#include "cliquecover/error.hpp"
#include "cliquecover/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cliquecover {

double f(double m) noexcept
{
    return m * (m - 1.0);
}

double f_inv(double x)
{
    if (!(x >= 0.0))
        throw InputError("f_inv: argument must be non-negative, got " + std::to_string(x));
    return (1.0 + std::sqrt(1.0 + 4.0 * x)) / 2.0;
}

double f_inv_derivative(double x)
{
    if (!(x > 0.0))
        throw InputError("f_inv_derivative: argument must be positive, got " + std::to_string(x));
    return 1.0 / (2.0 * f_inv(x) - 1.0);
}

BoundValue bound_B(std::uint64_t n)
{
    if (n == 0)
        throw InputError("bound_B: n must be at least 1");
    BoundValue b;
    b.n = n;
    b.mean_cap = f_inv(static_cast<double>(n - 1));
    b.total = static_cast<double>(n) * b.mean_cap;
    if (auto p = plane_order(n)) {
        double exact = static_cast<double>(n * (*p + 1));
        if (std::abs(b.total - exact) < 1e-9) {
            b.total = exact;
            b.mean_cap = static_cast<double>(*p + 1);
        }
    }
    return b;
}

bool mean_inequality_holds(std::span<const double> v)
{
    if (v.empty())
        throw InputError("mean_inequality_holds: empty list");
    double sum = 0.0;
    double sum_sq = 0.0;
    double rhs = 0.0;
    for (double x : v) {
        if (!(x > 0.0))
            throw InputError("mean_inequality_holds: entries must be positive, got " + std::to_string(x));
        sum += x;
        sum_sq += x * x;
        rhs += f(x);
    }
    double count = static_cast<double>(v.size());
    double lhs = sum * (sum / count - 1.0);
    double scale = std::max({std::abs(lhs), std::abs(rhs), sum_sq});
    return lhs <= rhs + 1e-9 * scale;
}

} // namespace cliquecover
