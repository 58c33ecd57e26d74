#pragma once

#include "nthprime/nth_prime.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nthprime {

struct BenchEntry {
    std::uint64_t n = 0;
    Algorithm algorithm = Algorithm::BinarySearch;
    std::uint64_t wall_time_ns = 0; // median over repetitions
    std::uint64_t pi_evals = 0;
    std::uint64_t cells_sieved = 0;
    unsigned widenings = 0;
    std::uint64_t result = 0;
    std::string status = "ok"; // ok | timeout | capacity | skipped

    friend bool operator==(const BenchEntry&, const BenchEntry&) = default;
};

struct BenchMetadata {
    std::string version;
    std::string pi_method_name;
    double c0 = 0;
    std::uint64_t segment_size = 0;
    unsigned threads = 1;
    unsigned repetitions = 1;
    bool charge_base_primes = true;

    friend bool operator==(const BenchMetadata&, const BenchMetadata&) = default;
};

struct BenchReport {
    BenchMetadata metadata;
    std::vector<BenchEntry> entries;
    /// Least-squares slope of log(wall time) against log(n), per algorithm name.
    std::map<std::string, double> slopes;

    friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

struct VerifyFailure {
    std::string kind; // dusart_containment | schoenfeld | cross_algorithm | li_accuracy | pi_budget
    std::uint64_t at = 0; // n or x
    std::string details;

    friend bool operator==(const VerifyFailure&, const VerifyFailure&) = default;
};

struct VerifyReport {
    std::uint64_t max_n = 0;
    std::uint64_t checked = 0;
    std::map<std::string, std::uint64_t> checks_by_kind;
    std::vector<VerifyFailure> failures;

    bool passed() const noexcept { return failures.empty(); }
    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// Pretty-printed JSON with a trailing newline. Key order is fixed.
std::string to_json(const BenchReport& report);
std::string to_json(const VerifyReport& report);

/// Throw std::invalid_argument on malformed input.
BenchReport bench_report_from_json(std::string_view text);
VerifyReport verify_report_from_json(std::string_view text);

/// Slope of log(wall_time_ns) on log(n) over "ok" entries of one algorithm
/// with n in [n_min, n_max]. NaN with fewer than two points.
double loglog_slope(const std::vector<BenchEntry>& entries, Algorithm algorithm, std::uint64_t n_min = 0,
                    std::uint64_t n_max = UINT64_MAX);

/// True when all "ok" entries sharing an n report the same prime.
bool results_agree(const BenchReport& report);

} // namespace nthprime
