#include "cliquecover/primes.hpp"

#include "cliquecover/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace cliquecover {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept
{
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

void check_window_args(std::uint64_t n, std::uint64_t min_n, double eps, const char *what)
{
    if (n < min_n)
        throw InputError(std::string(what) + ": n must be at least " + std::to_string(min_n));
    if (!(eps > 0.0 && eps < 1.0))
        throw InputError(std::string(what) + ": epsilon must lie in (0,1), got " + std::to_string(eps));
}

std::uint64_t plane_size(std::uint64_t p) noexcept
{
    return p * p + p + 1;
}

} // namespace

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0)
            return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are sufficient for all 64-bit n.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t limit)
{
    if (limit > kSieveLimit)
        throw InputError("primes_upto: limit " + std::to_string(limit) + " exceeds " +
                         std::to_string(kSieveLimit));
    std::vector<std::uint64_t> out;
    if (limit < 2)
        return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return out;
}

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit)
{
    if (limit > kSieveLimit)
        throw InputError("PrimeTable: limit " + std::to_string(limit) + " exceeds " +
                         std::to_string(kSieveLimit));
    std::size_t words = limit / 64 + 1;
    std::vector<std::uint64_t> bits(words, ~std::uint64_t{0});
    auto clear = [&](std::uint64_t i) { bits[i / 64] &= ~(std::uint64_t{1} << (i % 64)); };
    auto test = [&](std::uint64_t i) { return (bits[i / 64] >> (i % 64)) & 1; };
    clear(0);
    if (limit >= 1)
        clear(1);
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (test(i))
            for (std::uint64_t j = i * i; j <= limit; j += i)
                clear(j);
    // Mask off bits beyond the limit in the last word.
    std::uint64_t tail = (limit + 1) % 64;
    if (tail != 0)
        bits.back() &= (std::uint64_t{1} << tail) - 1;

    // prefix_[w] = number of primes below 64*w.
    prefix_.resize(words);
    std::uint32_t running = 0;
    for (std::size_t w = 0; w < words; ++w) {
        prefix_[w] = running;
        running += static_cast<std::uint32_t>(std::popcount(bits[w]));
    }
    bits_ = std::move(bits);
}

bool PrimeTable::is_prime(std::uint64_t n) const
{
    if (n > limit_)
        throw InputError("PrimeTable: " + std::to_string(n) + " beyond table limit " + std::to_string(limit_));
    return (bits_[n / 64] >> (n % 64)) & 1;
}

std::uint64_t PrimeTable::pi(std::uint64_t x) const
{
    if (x > limit_)
        throw InputError("PrimeTable: " + std::to_string(x) + " beyond table limit " + std::to_string(limit_));
    std::size_t w = x / 64;
    std::uint64_t bit = x % 64;
    std::uint64_t mask = bit == 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (bit + 1)) - 1;
    return prefix_[w] + static_cast<std::uint64_t>(std::popcount(bits_[w] & mask));
}

std::uint64_t PrimeTable::pi_window(std::uint64_t n, double eps) const
{
    check_window_args(n, 2, eps, "pi_window");
    double lo = static_cast<double>(n) * (1.0 - eps);
    auto lo_floor = static_cast<std::uint64_t>(std::floor(lo));
    return pi(n - 1) - pi(std::min(lo_floor, n - 1));
}

std::uint64_t pi_window(std::uint64_t n, double eps)
{
    check_window_args(n, 2, eps, "pi_window");
    return PrimeTable(n).pi_window(n, eps);
}

std::optional<std::uint64_t> plane_order(std::uint64_t n) noexcept
{
    if (n < 7)
        return std::nullopt;
    auto p = static_cast<std::uint64_t>((std::sqrt(4.0 * static_cast<double>(n) - 3.0) - 1.0) / 2.0);
    while (plane_size(p + 1) <= n)
        ++p;
    while (p > 0 && plane_size(p) > n)
        --p;
    if (plane_size(p) == n && is_prime(p))
        return p;
    return std::nullopt;
}

std::optional<std::uint64_t> plane_prime_below(std::uint64_t n) noexcept
{
    if (n < 7)
        return std::nullopt;
    auto p = static_cast<std::uint64_t>((std::sqrt(4.0 * static_cast<double>(n) - 3.0) - 1.0) / 2.0);
    while (plane_size(p + 1) <= n)
        ++p;
    while (plane_size(p) > n)
        --p;
    while (!is_prime(p))
        --p;
    return p;
}

PrimeWindowResult prime_window(std::uint64_t n, double eps)
{
    check_window_args(n, 7, eps, "prime_window");
    PrimeWindowResult r;
    r.lo = static_cast<double>(n) * (1.0 - eps);
    r.hi = n;
    auto p = plane_prime_below(n);
    if (p && static_cast<double>(plane_size(*p)) > r.lo) {
        r.found = true;
        r.p = *p;
        r.plane_n = plane_size(*p);
    }
    return r;
}

double consecutive_plane_ratio(std::span<const std::uint64_t> primes, std::size_t i)
{
    if (i < 1 || i >= primes.size())
        throw InputError("consecutive_plane_ratio: index " + std::to_string(i) + " needs primes " +
                         std::to_string(i) + " and " + std::to_string(i + 1) + ", list has " +
                         std::to_string(primes.size()));
    return static_cast<double>(plane_size(primes[i - 1])) / static_cast<double>(plane_size(primes[i]));
}

double consecutive_plane_ratio(std::size_t i)
{
    if (i < 1)
        throw InputError("consecutive_plane_ratio: index must be at least 1");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t c = 2; primes.size() < i + 1; ++c)
        if (is_prime(c))
            primes.push_back(c);
    return consecutive_plane_ratio(primes, i);
}

} // namespace cliquecover
