#include "nthprime/nth_prime.hpp"

#include "nthprime/errors.hpp"
#include "nthprime/logint.hpp"
#include "nthprime/prime_count.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>
#include <vector>

namespace nthprime {
namespace {

using Clock = std::chrono::steady_clock;

std::chrono::nanoseconds since(Clock::time_point start, Clock::duration excluded = Clock::duration::zero())
{
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start - excluded);
}

void require_positive(std::uint64_t n)
{
    if (n == 0)
        throw DomainError("primes are indexed from 1 (p_1 = 2)");
}

NthPrimeResult small_result(std::uint64_t n, Algorithm algorithm)
{
    NthPrimeResult r;
    r.n = n;
    r.algorithm = algorithm;
    r.prime = kSmallPrimes[n - 1];
    return r;
}

} // namespace

std::string_view to_string(Algorithm algorithm) noexcept
{
    switch (algorithm) {
    case Algorithm::BinarySearch:
        return "binary";
    case Algorithm::SieveToBound:
        return "sieve";
    case Algorithm::CramerInterval:
        return "cramer";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept
{
    if (name == "binary" || name == "BinarySearch")
        return Algorithm::BinarySearch;
    if (name == "sieve" || name == "SieveToBound")
        return Algorithm::SieveToBound;
    if (name == "cramer" || name == "CramerInterval")
        return Algorithm::CramerInterval;
    return std::nullopt;
}

NthPrimeResult nth_prime_binary_search(std::uint64_t n, const NthPrimeOptions&)
{
    require_positive(n);
    const auto start = Clock::now();
    if (n < 6) {
        auto r = small_result(n, Algorithm::BinarySearch);
        r.wall_time = since(start);
        return r;
    }

    // pi(lo) < n <= pi(hi) holds because L < p_n < R.
    const IntegerRange bracket = dusart_interval(n).as_integers();
    std::uint64_t lo = bracket.lo;
    std::uint64_t hi = bracket.hi;
    const PrimeCounter counter(hi);

    NthPrimeResult r;
    r.n = n;
    r.algorithm = Algorithm::BinarySearch;
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        ++r.pi_evals;
        if (counter.count(mid).count >= n)
            hi = mid;
        else
            lo = mid;
    }
    r.prime = hi;
    r.wall_time = since(start);
    return r;
}

NthPrimeResult nth_prime_sieve_bound(std::uint64_t n, const NthPrimeOptions& options)
{
    require_positive(n);
    const std::uint64_t limit = n < 6 ? 15 : dusart_interval(n).as_integers().hi;
    if (limit > options.sieve_bound_budget)
        throw CapacityError("sieve-to-bound would sieve up to " + std::to_string(limit) + ", budget is " +
                            std::to_string(options.sieve_bound_budget));

    auto start = Clock::now();
    const PrimeList base = base_primes_for(limit);
    if (!options.charge_base_primes)
        start = Clock::now();

    NthPrimeResult r;
    r.n = n;
    r.algorithm = Algorithm::SieveToBound;

    const std::uint64_t segment = std::max<std::size_t>(options.sieve.segment_size, 1);
    const unsigned batch = std::max(1u, options.sieve.threads);
    auto sieve_one = [&](std::uint64_t lo) {
        SieveWindow window(lo, std::min(limit, lo + segment - 1));
        window.cross_off(base);
        return window;
    };

    std::uint64_t seen = 0;
    std::uint64_t next_lo = 2;
    while (next_lo <= limit) {
        std::vector<SieveWindow> windows;
        if (batch == 1) {
            windows.push_back(sieve_one(next_lo));
            next_lo = windows.back().hi() + 1;
        } else {
            std::vector<std::future<SieveWindow>> pending;
            for (unsigned t = 0; t < batch && next_lo <= limit; ++t) {
                pending.push_back(std::async(std::launch::async, sieve_one, next_lo));
                next_lo = std::min(limit, next_lo + segment - 1) + 1;
            }
            for (auto& f : pending)
                windows.push_back(f.get());
        }
        for (const SieveWindow& window : windows) {
            r.cells_sieved += window.size();
            const std::uint64_t here = window.count_unmarked();
            if (seen + here >= n) {
                PrimeList found;
                window.append_unmarked(found);
                r.prime = found[static_cast<std::size_t>(n - seen - 1)];
                r.wall_time = since(start);
                return r;
            }
            seen += here;
        }
    }
    throw Error("sieve-to-bound found only " + std::to_string(seen) + " primes up to " + std::to_string(limit));
}

CramerWindow cramer_window(std::uint64_t n, double alpha, double c)
{
    if (n < 6)
        throw DomainError("cramer_window needs n >= 6");
    if (!(c > 0))
        throw DomainError("cramer_window needs c > 0");

    const double nd = static_cast<double>(n);
    CramerWindow w;
    w.alpha = alpha;
    w.constant = c;
    w.width = c * std::sqrt(nd) * std::pow(std::log(nd), 3.5);

    const IntegerRange dusart = dusart_interval(n).as_integers();
    const std::uint64_t clip_lo = std::max<std::uint64_t>(2, dusart.lo - 1);
    const std::uint64_t clip_hi = dusart.hi + 1;
    auto clamp_to_clip = [&](double v) -> std::uint64_t {
        if (!(v > static_cast<double>(clip_lo)))
            return clip_lo;
        if (!(v < static_cast<double>(clip_hi)))
            return clip_hi;
        return static_cast<std::uint64_t>(v);
    };
    w.interval = {clamp_to_clip(std::floor(alpha - w.width)), clamp_to_clip(std::ceil(alpha + w.width))};
    return w;
}

NthPrimeResult nth_prime_cramer(std::uint64_t n, const NthPrimeOptions& options)
{
    require_positive(n);
    const auto start = Clock::now();
    if (n < 6) {
        auto r = small_result(n, Algorithm::CramerInterval);
        r.wall_time = since(start);
        return r;
    }

    NthPrimeResult r;
    r.n = n;
    r.algorithm = Algorithm::CramerInterval;
    auto excluded = Clock::duration::zero();

    const double alpha = li_inverse(n, options.li_tolerance).alpha;
    double c = n < kCramerCalibrationFloor ? kUncalibratedCramerConstant : options.cramer_constant;
    for (unsigned attempt = 0;; ++attempt) {
        const CramerWindow window = cramer_window(n, alpha, c);
        const auto base_start = Clock::now();
        const PrimeList base = base_primes_for(window.interval.hi);
        if (!options.charge_base_primes)
            excluded += Clock::now() - base_start;

        const PrimeList primes = segmented_sieve(window.interval.lo, window.interval.hi, base, options.sieve);
        r.cells_sieved += window.interval.size();
        if (!primes.empty()) {
            const std::uint64_t anchor = primes.front();
            ++r.pi_evals;
            const std::uint64_t m = PrimeCounter(anchor).count(anchor).count;
            if (m <= n && n - m < primes.size()) {
                r.prime = primes[static_cast<std::size_t>(n - m)];
                r.wall_time = since(start, excluded);
                return r;
            }
        }
        if (attempt == kMaxCramerWidenings)
            break;
        c *= 2;
        ++r.widenings;
    }

    const NthPrimeResult fallback = nth_prime_binary_search(n, options);
    r.prime = fallback.prime;
    r.pi_evals += fallback.pi_evals;
    r.fell_back = true;
    r.wall_time = since(start, excluded);
    return r;
}

NthPrimeResult nth_prime(std::uint64_t n, Algorithm algorithm, const NthPrimeOptions& options)
{
    switch (algorithm) {
    case Algorithm::BinarySearch:
        return nth_prime_binary_search(n, options);
    case Algorithm::SieveToBound:
        return nth_prime_sieve_bound(n, options);
    case Algorithm::CramerInterval:
        return nth_prime_cramer(n, options);
    }
    throw DomainError("unknown algorithm");
}

double schoenfeld_check(std::uint64_t x)
{
    if (x < kSchoenfeldMinX)
        throw DomainError("Schoenfeld's bound is checked for x >= 2657, got " + std::to_string(x));
    const auto count = static_cast<long double>(pi(x).count);
    const long double li_x = li(static_cast<long double>(x), 1e-6L).value;
    const double xd = static_cast<double>(x);
    const double bound = kSchoenfeldConstant * std::sqrt(xd) * std::log(xd);
    return static_cast<double>(std::fabs(count - li_x)) - bound;
}

} // namespace nthprime
