#pragma once

#include "nthprime/sieve.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace nthprime {

/// Largest x accepted by pi(). Exactness is guaranteed to 10^11 and
/// holds beyond; the limit is set by the memory of the lookup table.
inline constexpr std::uint64_t kPiMaxSupported = 10'000'000'000'000ull; // 10^13

inline constexpr std::string_view kPiMethodName = "meissel-lehmer (phi with wheel tables, P2 correction)";

struct PiCost {
    std::uint64_t phi_calls = 0;   // nodes expanded in the phi recursion
    std::uint64_t table_limit = 0; // pi values <= this were looked up, not computed
};

struct PiEvaluation {
    std::uint64_t x = 0;
    std::uint64_t count = 0;
    PiCost cost;
};

/// Exact prime counting by Meissel's formula
///
///   pi(x) = phi(x, a) + a - 1 - P2(x, a),   a = pi(cbrt x),
///
/// with phi computed by Legendre's recurrence cut off by wheel tables for
/// the first six primes and by direct table lookup once x < p_{a+1}^2.
/// Tables are built once at construction; count() is const and may be
/// called concurrently.
class PrimeCounter {
public:
    /// Prepares tables for every x <= max_x. Throws OverflowError above kPiMaxSupported.
    explicit PrimeCounter(std::uint64_t max_x);

    std::uint64_t max_x() const noexcept { return max_x_; }

    /// Throws PreconditionError if x > max_x().
    PiEvaluation count(std::uint64_t x) const;

    /// Legendre's phi over this counter's own prime table (a <= primes().size()).
    std::uint64_t phi(std::uint64_t x, std::uint64_t a) const;

    std::span<const std::uint64_t> primes() const noexcept { return primes_; }

private:
    std::uint64_t lookup(std::uint64_t x) const noexcept;

    std::uint64_t max_x_;
    std::uint64_t table_limit_;
    PrimeList primes_;                        // primes <= max(sqrt(max_x), small floor)
    std::vector<std::uint64_t> odd_composite_; // bit i set => 2i+1 composite (or 1)
    std::vector<std::uint32_t> prefix_;       // pi(64 * 2 * w) helpers, see lookup()
};

/// pi(x) with a counter sized for x. Throws OverflowError above kPiMaxSupported.
PiEvaluation pi(std::uint64_t x);

/// Number of m in [1, x] divisible by none of base[0..a). Requires a <= base.size().
std::uint64_t phi(std::uint64_t x, std::uint64_t a, std::span<const std::uint64_t> base);

} // namespace nthprime
