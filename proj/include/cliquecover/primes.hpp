#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cliquecover {

inline constexpr std::uint64_t kSieveLimit = 100'000'000;

// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(std::uint64_t n) noexcept;

// All primes <= limit, increasing. Throws InputError above kSieveLimit.
std::vector<std::uint64_t> primes_upto(std::uint64_t limit);

// Sieve with prefix counts, for repeated window queries below a fixed limit.
class PrimeTable {
public:
    // Throws InputError above kSieveLimit.
    explicit PrimeTable(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }
    bool is_prime(std::uint64_t n) const;

    // Number of primes <= x; x must not exceed limit().
    std::uint64_t pi(std::uint64_t x) const;

    // Number of primes q with n(1-eps) < q < n.
    std::uint64_t pi_window(std::uint64_t n, double eps) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint32_t> prefix_;
};

// Number of primes q with n(1-eps) < q < n. Needs n >= 2 and 0 < eps < 1.
std::uint64_t pi_window(std::uint64_t n, double eps);

// p when n = p^2+p+1 for a prime p.
std::optional<std::uint64_t> plane_order(std::uint64_t n) noexcept;

// Largest prime p with p^2+p+1 <= n; empty for n < 7.
std::optional<std::uint64_t> plane_prime_below(std::uint64_t n) noexcept;

struct PrimeWindowResult {
    bool found = false;
    std::uint64_t p = 0;
    std::uint64_t plane_n = 0;
    double lo = 0.0;
    std::uint64_t hi = 0;
};

// Largest prime p with n(1-eps) < p^2+p+1 <= n. Needs n >= 7 and 0 < eps < 1.
PrimeWindowResult prime_window(std::uint64_t n, double eps);

// (P_i^2+P_i+1) / (P_{i+1}^2+P_{i+1}+1) with P_1 = 2.
double consecutive_plane_ratio(std::size_t i);

// Same, indexing into a caller-supplied increasing prime list (1-based).
double consecutive_plane_ratio(std::span<const std::uint64_t> primes, std::size_t i);

} // namespace cliquecover
