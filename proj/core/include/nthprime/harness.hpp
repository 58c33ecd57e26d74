#pragma once

#include "nthprime/nth_prime.hpp"
#include "nthprime/report.hpp"

#include <chrono>
#include <cstdint>
#include <string_view>
#include <vector>

namespace nthprime {

struct BenchOptions {
    NthPrimeOptions nth;
    unsigned repetitions = 3;
    /// A run slower than this ends the algorithm's sweep; later n are "skipped".
    std::chrono::milliseconds timeout{60'000};
};

/// Times every (n, algorithm) pair. Requires a non-empty ascending grid.
BenchReport bench_sweep(const std::vector<std::uint64_t>& grid, const std::vector<Algorithm>& algorithms,
                        const BenchOptions& options = {});

/// Parses a grid such as "1e3,5000,1e6" or "1e3..1e7" (one point per decade)
/// or "1e3..1e7@4" (four log-spaced points per decade). Items may be mixed
/// with commas. The result is sorted and deduplicated.
/// Throws std::invalid_argument on malformed input.
std::vector<std::uint64_t> parse_grid(std::string_view grid_text);

/// Parses a non-negative integer written in decimal or as an exact
/// scientific literal ("1e6", "2.5e3"). Throws std::invalid_argument.
std::uint64_t parse_count(std::string_view text);

struct VerifyOptions {
    std::uint64_t max_n = 100'000;
    NthPrimeOptions nth;
};

/// Runs the empirical checks (Dusart containment, Schoenfeld residual,
/// cross-algorithm agreement, li accuracy, pi budget) up to max_n.
/// The report holds no timing data and is deterministic.
VerifyReport run_verify(const VerifyOptions& options);

/// Reference li(x) for verification: Ei(ln x) by composite Gauss-Legendre
/// quadrature of (e^u - 1) / u. Independent of the series in li().
long double li_reference(long double x);

} // namespace nthprime
