#pragma once

#include "nthprime/bounds.hpp"
#include "nthprime/sieve.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

namespace nthprime {

enum class Algorithm { BinarySearch, SieveToBound, CramerInterval };

std::string_view to_string(Algorithm algorithm) noexcept;
/// Accepts "binary", "sieve", "cramer" (and the enum spellings).
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

/// Window constant c0 for the Cramer interval. Calibrated offline as twice the
/// largest |alpha - p_n| / (sqrt(n) (ln n)^3.5) seen on a log grid of n from
/// 10^3 to 10^7, rounded up (see tools/calibrate_cramer.cpp).
inline constexpr double kCalibratedCramerConstant = 0.012;

/// Smallest n the calibration covers. Below it the window is the whole
/// (expanded) Dusart interval, which is unconditionally correct.
inline constexpr std::uint64_t kCramerCalibrationFloor = 1000;

/// Constant used below kCramerCalibrationFloor; large enough that the
/// Dusart clip always dominates.
inline constexpr double kUncalibratedCramerConstant = 1e6;

inline constexpr unsigned kMaxCramerWidenings = 4;

/// Residual sign convention: negative means |pi(x) - li(x)| <= sqrt(x) ln x / (8 pi).
inline constexpr double kSchoenfeldConstant = 0.039788735772973833942; // 1 / (8 pi)
inline constexpr std::uint64_t kSchoenfeldMinX = 2657;

/// Default ceiling on ceil(R) for the sieve-to-bound algorithm.
inline constexpr std::uint64_t kDefaultSieveBoundBudget = std::uint64_t{1} << 36;

struct NthPrimeOptions {
    SieveConfig sieve;
    double cramer_constant = kCalibratedCramerConstant;
    double li_tolerance = 0.5;
    std::uint64_t sieve_bound_budget = kDefaultSieveBoundBudget;
    /// When false, building the base primes is left out of wall_time
    /// (the "precomputed base" variant of the interval sieve).
    bool charge_base_primes = true;
};

struct NthPrimeResult {
    std::uint64_t n = 0;
    std::uint64_t prime = 0;
    Algorithm algorithm = Algorithm::BinarySearch;
    std::uint64_t pi_evals = 0;
    std::uint64_t cells_sieved = 0;
    unsigned widenings = 0;
    bool fell_back = false; // Cramer only: gave up on windows and used binary search
    std::chrono::nanoseconds wall_time{0};
};

struct CramerWindow {
    double alpha = 0;
    double width = 0; // constant * sqrt(n) * (ln n)^3.5
    double constant = 0;
    IntegerRange interval; // [floor(alpha - width), ceil(alpha + width)] clipped
};

/// p_n for n <= 5; p_1 = 2.
inline constexpr std::uint64_t kSmallPrimes[] = {2, 3, 5, 7, 11};

/// Smallest x with pi(x) = n, found by bisection over the Dusart bracket.
/// Uses at most ceil(log2(n + 2)) <= floor(log2 n) + 2 pi evaluations.
NthPrimeResult nth_prime_binary_search(std::uint64_t n, const NthPrimeOptions& options = {});

/// Sieves [2, ceil(R)] segment by segment and stops at the nth prime.
/// Throws CapacityError when ceil(R) exceeds options.sieve_bound_budget.
NthPrimeResult nth_prime_sieve_bound(std::uint64_t n, const NthPrimeOptions& options = {});

/// Window of radius c sqrt(n) (ln n)^3.5 around alpha, clipped to [2, inf) and
/// to the Dusart interval widened by one on each side. Requires n >= 6.
CramerWindow cramer_window(std::uint64_t n, double alpha, double c);

/// alpha = li^-1(n), sieve the Cramer window, anchor with one pi evaluation
/// at the window's smallest prime and count forward. A window that misses
/// p_n doubles c; after kMaxCramerWidenings it falls back to binary search,
/// so the answer never depends on the gap conjecture.
NthPrimeResult nth_prime_cramer(std::uint64_t n, const NthPrimeOptions& options = {});

NthPrimeResult nth_prime(std::uint64_t n, Algorithm algorithm, const NthPrimeOptions& options = {});

/// |pi(x) - li(x)| - sqrt(x) ln x / (8 pi); negative when the bound holds.
/// Throws DomainError for x < 2657.
double schoenfeld_check(std::uint64_t x);

} // namespace nthprime
