#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nthprime {

/// Strictly increasing list of primes. The output of every sieve.
using PrimeList = std::vector<std::uint64_t>;

inline constexpr std::size_t kDefaultSegmentSize = std::size_t{1} << 18;

/// Largest limit simple_sieve accepts by default (one bit per integer,
/// so this is 1 GiB of marks).
inline constexpr std::uint64_t kDefaultSimpleSieveBudget = std::uint64_t{1} << 33;

struct SieveConfig {
    /// Integers per segment. Output never depends on it.
    std::size_t segment_size = kDefaultSegmentSize;
    /// Worker threads for segmented sieving; 0 or 1 means sequential.
    unsigned threads = 1;
};

/// Composite marks over the closed range [lo, hi]; bit i stands for lo + i.
class SieveWindow {
public:
    SieveWindow(std::uint64_t lo, std::uint64_t hi);

    std::uint64_t lo() const noexcept { return lo_; }
    std::uint64_t hi() const noexcept { return hi_; }
    std::uint64_t size() const noexcept { return hi_ - lo_ + 1; }

    /// Marks every multiple m >= p*p of each base prime p <= sqrt(hi), plus 0 and 1.
    void cross_off(std::span<const std::uint64_t> base);

    bool is_composite(std::uint64_t value) const noexcept;
    std::uint64_t count_unmarked() const noexcept;
    void append_unmarked(PrimeList& out) const;

private:
    void mark(std::uint64_t offset) noexcept { bits_[offset >> 6] |= std::uint64_t{1} << (offset & 63); }

    std::uint64_t lo_;
    std::uint64_t hi_;
    std::vector<std::uint64_t> bits_;
};

/// Primes <= limit by the classical sieve of Eratosthenes.
/// Throws CapacityError when limit > budget.
PrimeList simple_sieve(std::uint64_t limit, std::uint64_t budget = kDefaultSimpleSieveBudget);

/// Primes up to floor(sqrt(hi)), i.e. a base sufficient for any window ending at hi.
PrimeList base_primes_for(std::uint64_t hi);

/// Primes in [lo, hi] using `base`, which must hold every prime <= floor(sqrt(hi)).
/// Values below 2 are ignored. Throws PreconditionError on an insufficient base.
PrimeList segmented_sieve(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> base,
                          const SieveConfig& config = {});

/// Same contract as segmented_sieve but only counts.
std::uint64_t count_primes_in(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> base,
                              const SieveConfig& config = {});

/// Checks the base-prime precondition for a window ending at hi.
void require_base_covers(std::uint64_t hi, std::span<const std::uint64_t> base);

std::uint64_t isqrt(std::uint64_t x) noexcept;
std::uint64_t icbrt(std::uint64_t x) noexcept;

} // namespace nthprime
