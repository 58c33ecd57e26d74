#include "nthprime/harness.hpp"

#include "nthprime/errors.hpp"
#include "nthprime/prime_count.hpp"
#include "nthprime/version.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nthprime {
namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::string_view text)
{
    if (b != 0 && a > UINT64_MAX / b)
        throw std::invalid_argument("number out of range: " + std::string(text));
    return a * b;
}

} // namespace

std::uint64_t parse_count(std::string_view text)
{
    const std::string_view s = trim(text);
    const auto bad = [&] { return std::invalid_argument("not a non-negative integer: '" + std::string(text) + "'"); };
    if (s.empty())
        throw bad();

    const std::size_t e_pos = s.find_first_of("eE");
    const std::string_view mantissa = s.substr(0, e_pos);
    long exponent = 0;
    if (e_pos != std::string_view::npos) {
        std::string_view exp_text = s.substr(e_pos + 1);
        if (!exp_text.empty() && exp_text.front() == '+')
            exp_text.remove_prefix(1);
        if (exp_text.empty() || exp_text.size() > 3)
            throw bad();
        for (const char c : exp_text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw bad();
            exponent = exponent * 10 + (c - '0');
        }
    }

    std::uint64_t digits = 0;
    bool any_digit = false;
    bool seen_point = false;
    for (const char c : mantissa) {
        if (c == '.' && !seen_point) {
            seen_point = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw bad();
        any_digit = true;
        digits = checked_mul(digits, 10, text);
        if (digits > UINT64_MAX - static_cast<std::uint64_t>(c - '0'))
            throw std::invalid_argument("number out of range: " + std::string(text));
        digits += static_cast<std::uint64_t>(c - '0');
        if (seen_point)
            --exponent;
    }
    if (!any_digit)
        throw bad();
    for (; exponent > 0; --exponent)
        digits = checked_mul(digits, 10, text);
    for (; exponent < 0; ++exponent) {
        if (digits % 10 != 0)
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
        digits /= 10;
    }
    return digits;
}

std::vector<std::uint64_t> parse_grid(std::string_view grid_text)
{
    std::vector<std::uint64_t> grid;
    std::size_t start = 0;
    while (start <= grid_text.size()) {
        const std::size_t comma = grid_text.find(',', start);
        const std::string_view item =
            trim(grid_text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (item.empty())
            throw std::invalid_argument("empty item in grid '" + std::string(grid_text) + "'");

        const std::size_t dots = item.find("..");
        if (dots == std::string_view::npos) {
            grid.push_back(parse_count(item));
        } else {
            std::string_view upper = item.substr(dots + 2);
            std::uint64_t per_decade = 1;
            if (const std::size_t at = upper.find('@'); at != std::string_view::npos) {
                per_decade = parse_count(upper.substr(at + 1));
                upper = upper.substr(0, at);
            }
            const std::uint64_t lo = parse_count(item.substr(0, dots));
            const std::uint64_t hi = parse_count(upper);
            if (lo == 0 || hi < lo || per_decade == 0)
                throw std::invalid_argument("bad range '" + std::string(item) + "'");
            for (std::uint64_t i = 0;; ++i) {
                const double v = std::round(static_cast<double>(lo) *
                                            std::pow(10.0, static_cast<double>(i) / static_cast<double>(per_decade)));
                if (v > static_cast<double>(hi) * (1 + 1e-12))
                    break;
                grid.push_back(static_cast<std::uint64_t>(v));
            }
            grid.push_back(hi);
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

BenchReport bench_sweep(const std::vector<std::uint64_t>& grid, const std::vector<Algorithm>& algorithms,
                        const BenchOptions& options)
{
    if (grid.empty())
        throw PreconditionError("bench grid is empty");
    if (!std::is_sorted(grid.begin(), grid.end()) ||
        std::adjacent_find(grid.begin(), grid.end()) != grid.end())
        throw PreconditionError("bench grid must be strictly ascending");
    if (algorithms.empty())
        throw PreconditionError("bench needs at least one algorithm");

    BenchReport report;
    report.metadata = {std::string(kVersion),
                       std::string(kPiMethodName),
                       options.nth.cramer_constant,
                       options.nth.sieve.segment_size,
                       std::max(1u, options.nth.sieve.threads),
                       std::max(1u, options.repetitions),
                       options.nth.charge_base_primes};

    std::vector<bool> stopped(algorithms.size(), false);
    for (const std::uint64_t n : grid) {
        for (std::size_t a = 0; a < algorithms.size(); ++a) {
            BenchEntry entry;
            entry.n = n;
            entry.algorithm = algorithms[a];
            if (stopped[a]) {
                entry.status = "skipped";
                report.entries.push_back(entry);
                continue;
            }
            try {
                std::vector<std::uint64_t> times;
                for (unsigned rep = 0; rep < report.metadata.repetitions; ++rep) {
                    const NthPrimeResult r = nth_prime(n, algorithms[a], options.nth);
                    if (rep == 0) {
                        entry.result = r.prime;
                        entry.pi_evals = r.pi_evals;
                        entry.cells_sieved = r.cells_sieved;
                        entry.widenings = r.widenings;
                    }
                    times.push_back(static_cast<std::uint64_t>(r.wall_time.count()));
                    if (r.wall_time > options.timeout) {
                        entry.status = "timeout";
                        stopped[a] = true;
                        break;
                    }
                }
                std::sort(times.begin(), times.end());
                entry.wall_time_ns = times[times.size() / 2];
            } catch (const CapacityError&) {
                entry.status = "capacity";
                stopped[a] = true;
            }
            report.entries.push_back(entry);
        }
    }
    for (const Algorithm algorithm : algorithms)
        report.slopes[std::string(to_string(algorithm))] = loglog_slope(report.entries, algorithm);
    return report;
}

} // namespace nthprime
