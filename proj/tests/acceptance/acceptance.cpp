// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include "../oracles.hpp"

#include "cli.hpp"
#include "nthprime/bounds.hpp"
#include "nthprime/harness.hpp"
#include "nthprime/logint.hpp"
#include "nthprime/nth_prime.hpp"
#include "nthprime/prime_count.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace nthprime;

namespace {

constexpr std::uint64_t kOracleMaxN = 10'000'000;
constexpr std::uint64_t kOracleLimit = 179'424'673;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string format(const char* fmt, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

const std::vector<std::uint64_t>& oracle_primes()
{
    static const auto primes = oracle::primes_up_to(kOracleLimit);
    return primes;
}

std::uint64_t p(std::uint64_t n)
{
    return oracle_primes()[n - 1];
}

std::vector<std::uint64_t> tested_n()
{
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 1; n <= 10'000; ++n)
        ns.push_back(n);
    for (std::uint64_t n : {100'000ull, 1'000'000ull, 5'000'000ull, 10'000'000ull})
        ns.push_back(n);
    return ns;
}

std::vector<double> log_spaced(double lo, double hi, int count)
{
    std::vector<double> xs;
    for (int i = 0; i < count; ++i)
        xs.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
    return xs;
}

double cramer_ratio(std::uint64_t n, double alpha)
{
    const double ln = std::log(static_cast<double>(n));
    return std::abs(alpha - static_cast<double>(p(n))) / (std::sqrt(static_cast<double>(n)) * std::pow(ln, 3.5));
}

Outcome correctness()
{
    if (oracle_primes().size() < kOracleMaxN || p(kOracleMaxN) != kOracleLimit)
        return {false, "oracle does not reach p_1e7 = 179424673"};
    std::uint64_t mismatches = 0, checked = 0;
    for (const auto n : tested_n()) {
        for (const auto a : {Algorithm::BinarySearch, Algorithm::SieveToBound, Algorithm::CramerInterval}) {
            ++checked;
            if (nth_prime(n, a).prime != p(n))
                ++mismatches;
        }
    }
    return {mismatches == 0, format("%llu runs, %llu mismatches", static_cast<unsigned long long>(checked),
                                    static_cast<unsigned long long>(mismatches))};
}

Outcome pi_checkpoints()
{
    std::uint64_t x = 1;
    std::string detail;
    bool pass = true;
    for (int k = 1; k <= 8; ++k) {
        x *= 10;
        const auto got = pi(x).count;
        const auto expected = oracle::count_up_to(oracle_primes(), x);
        pass = pass && got == expected;
        if (got != expected)
            detail += format("pi(1e%d) = %llu, oracle %llu; ", k, static_cast<unsigned long long>(got),
                             static_cast<unsigned long long>(expected));
    }
    return {pass, pass ? "pi(10^k) exact for k = 1..8, pi(1e8) = 5761455" : detail};
}

Outcome dusart()
{
    std::uint64_t violations = 0, width_violations = 0;
    for (std::uint64_t n = 6; n <= 100'000; ++n) {
        const Interval d = dusart_interval(n);
        if (!d.contains(static_cast<double>(p(n))))
            ++violations;
        const double ulp = std::nextafter(d.hi, std::numeric_limits<double>::infinity()) - d.hi;
        if (std::abs((d.hi - d.lo) - static_cast<double>(n)) > ulp)
            ++width_violations;
    }
    return {violations == 0 && width_violations == 0,
            format("n = 6..1e5: %llu containment violations, %llu width violations",
                   static_cast<unsigned long long>(violations), static_cast<unsigned long long>(width_violations))};
}

Outcome pi_budget()
{
    std::uint64_t violations = 0, worst_slack = 0, checked = 0;
    bool first = true;
    for (const auto n : tested_n()) {
        if (n < 6)
            continue;
        const auto limit = static_cast<std::uint64_t>(std::floor(std::log2(static_cast<double>(n)))) + 2;
        const auto used = nth_prime_binary_search(n).pi_evals;
        ++checked;
        if (used > limit)
            ++violations;
        else if (first || limit - used < worst_slack) {
            worst_slack = limit - used;
            first = false;
        }
    }
    return {violations == 0, format("%llu n checked, %llu over floor(log2 n) + 2, min slack %llu",
                                    static_cast<unsigned long long>(checked),
                                    static_cast<unsigned long long>(violations),
                                    static_cast<unsigned long long>(worst_slack))};
}

Outcome schoenfeld()
{
    std::uint64_t violations = 0, disagreements = 0;
    double worst = -std::numeric_limits<double>::infinity();
    for (const double xs : log_spaced(2657.0, 1e8, 200)) {
        const auto x = static_cast<std::uint64_t>(std::llround(xs));
        const double residual = schoenfeld_check(x);
        const long double count = static_cast<long double>(oracle::count_up_to(oracle_primes(), x));
        const long double bound = std::sqrt(static_cast<long double>(x)) * std::log(static_cast<long double>(x)) /
                                  (8.0L * std::numbers::pi_v<long double>);
        const auto independent = static_cast<double>(std::abs(count - oracle::li_quadrature(x)) - bound);
        if (residual >= 0 || independent >= 0)
            ++violations;
        if (std::abs(residual - independent) > 1e-5)
            ++disagreements;
        worst = std::fmax(worst, residual);
    }
    return {violations == 0 && disagreements == 0,
            format("200 x in [2657, 1e8]: %llu non-negative residuals, max residual %.3f, %llu oracle disagreements",
                   static_cast<unsigned long long>(violations), worst,
                   static_cast<unsigned long long>(disagreements))};
}

Outcome li_accuracy()
{
    long double worst_li = 0;
    for (const double x : log_spaced(2.0, 1e9, 50))
        worst_li = std::fmax(worst_li, std::abs(li(x).value - oracle::li_quadrature(x)));
    long double worst_inv = 0;
    for (const double nd : log_spaced(1e2, 1e7, 21)) {
        const auto n = static_cast<std::uint64_t>(std::llround(nd));
        const AlphaResult a = li_inverse(n, 0.5);
        worst_inv = std::fmax(worst_inv, std::abs(oracle::li_quadrature(a.alpha) - static_cast<long double>(n)));
    }
    return {worst_li <= 1e-9L && worst_inv <= 0.5L,
            format("max |li - quadrature| = %.3Le on 50 x in [2, 1e9]; max round-trip residual %.3Lf on 21 n in "
                   "[1e2, 1e7]",
                   worst_li, worst_inv)};
}

Outcome cramer()
{
    std::uint64_t bad_runs = 0, checked = 0;
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 6; n <= 10'000; ++n)
        ns.push_back(n);
    const auto grid = parse_grid("1e3..1e7@4");
    ns.insert(ns.end(), grid.begin(), grid.end());
    ns.push_back(5'000'000);
    for (const auto n : ns) {
        const auto r = nth_prime_cramer(n);
        ++checked;
        if (r.widenings != 0 || r.pi_evals != 1 || r.prime != p(n))
            ++bad_runs;
    }
    double worst = 0;
    std::uint64_t worst_n = 0;
    for (const auto n : grid) {
        const double ratio = cramer_ratio(n, li_inverse(n).alpha);
        if (ratio > worst) {
            worst = ratio;
            worst_n = n;
        }
    }
    const double half = kCalibratedCramerConstant / 2;
    return {bad_runs == 0 && worst < half,
            format("c0 = %.4g: %llu of %llu runs widened or used more than one pi evaluation; max ratio %.3e at n = "
                   "%llu (limit %.3e)",
                   kCalibratedCramerConstant, static_cast<unsigned long long>(bad_runs),
                   static_cast<unsigned long long>(checked), worst, static_cast<unsigned long long>(worst_n), half)};
}

Outcome crossover()
{
    const auto grid = parse_grid("1e3..1e10@4");
    std::vector<bool> below;
    for (const auto n : grid) {
        const auto w = cramer_window(n, li_inverse(n).alpha, kCalibratedCramerConstant);
        below.push_back(static_cast<double>(w.interval.size()) < threshold_B(n, 1.0));
    }
    std::size_t first = grid.size();
    for (std::size_t i = grid.size(); i-- > 0 && below[i];)
        first = i;
    const bool crossover_found = first < grid.size();

    BenchOptions options;
    options.repetitions = 5;
    const BenchReport report =
        bench_sweep(parse_grid("1e5..1e7@4"), {Algorithm::BinarySearch, Algorithm::CramerInterval}, options);
    const double binary = loglog_slope(report.entries, Algorithm::BinarySearch, 100'000, 10'000'000);
    const double cramer = loglog_slope(report.entries, Algorithm::CramerInterval, 100'000, 10'000'000);
    const bool slopes_ok = results_agree(report) && cramer <= binary + 0.1;

    std::string n0 = crossover_found ? std::to_string(grid[first]) : std::string("none");
    if (crossover_found && first == 0)
        n0 += " (whole grid)";
    return {crossover_found && slopes_ok,
            format("window < B(n, 1) for every grid n >= n0 = %s; slope cramer %.3f vs binary %.3f on [1e5, 1e7]",
                   n0.c_str(), cramer, binary)};
}

Outcome determinism()
{
    const auto dir = std::filesystem::temp_directory_path();
    std::string reports[2];
    int codes[2];
    for (int i = 0; i < 2; ++i) {
        const auto path = dir / ("nthprime_acceptance_verify_" + std::to_string(i) + ".json");
        std::ostringstream out, err;
        codes[i] = cli::run_cli({"verify", "--max-n", "100000", "--out", path.string()}, out, err);
        std::ifstream in(path);
        reports[i].assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        std::filesystem::remove(path);
    }
    const bool same = !reports[0].empty() && reports[0] == reports[1];
    return {same && codes[0] == codes[1],
            format("two verify --max-n 100000 runs: %s (%zu bytes, exit codes %d and %d)",
                   same ? "byte-identical" : "differ", reports[0].size(), codes[0], codes[1])};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"correctness vs oracle", correctness},
        {"pi checkpoints", pi_checkpoints},
        {"Dusart containment", dusart},
        {"pi evaluation budget", pi_budget},
        {"Schoenfeld inequality", schoenfeld},
        {"li accuracy", li_accuracy},
        {"Cramer window", cramer},
        {"crossover diagnostic", crossover},
        {"determinism", determinism},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %d  %-22s  %s  [%.1f s]\n", outcome.pass ? "PASS" : "FAIL", index, name,
                    outcome.detail.c_str(), seconds);
        std::fflush(stdout);
        failures += outcome.pass ? 0 : 1;
    }
    std::printf("%d of %d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
