#include "nthprime/sieve.hpp"

#include "nthprime/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <limits>
#include <string>

namespace nthprime {

std::uint64_t isqrt(std::uint64_t x) noexcept
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && (r > 0xFFFFFFFFull || r * r > x))
        --r;
    while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= x)
        ++r;
    return r;
}

std::uint64_t icbrt(std::uint64_t x) noexcept
{
    auto r = static_cast<std::uint64_t>(std::cbrt(static_cast<long double>(x)));
    constexpr std::uint64_t kMaxRoot = 2642245; // floor(cbrt(2^64 - 1))
    r = std::min(r, kMaxRoot);
    while (r > 0 && r * r * r > x)
        --r;
    while (r < kMaxRoot && (r + 1) * (r + 1) * (r + 1) <= x)
        ++r;
    return r;
}

SieveWindow::SieveWindow(std::uint64_t lo, std::uint64_t hi)
    : lo_(lo), hi_(hi)
{
    if (lo > hi)
        throw PreconditionError("sieve window requires lo <= hi");
    const std::uint64_t n = hi - lo + 1;
    bits_.assign(static_cast<std::size_t>((n + 63) / 64), 0);
    // Bits past the end count as marked so popcounts need no tail mask.
    if (const unsigned tail = static_cast<unsigned>(n & 63); tail != 0)
        bits_.back() = ~std::uint64_t{0} << tail;
}

void SieveWindow::cross_off(std::span<const std::uint64_t> base)
{
    for (std::uint64_t v = lo_; v < 2 && v <= hi_; ++v)
        mark(v - lo_);

    const std::uint64_t root = isqrt(hi_);
    const std::uint64_t last = hi_ - lo_;
    for (const std::uint64_t p : base) {
        if (p > root)
            break;
        std::uint64_t start = p * p;
        if (start < lo_) {
            const std::uint64_t rem = lo_ % p;
            start = rem == 0 ? lo_ : lo_ + (p - rem);
            if (start < lo_)
                continue;
        }
        if (start > hi_)
            continue;
        for (std::uint64_t offset = start - lo_; offset <= last; offset += p) {
            mark(offset);
            if (last - offset < p)
                break;
        }
    }
}

bool SieveWindow::is_composite(std::uint64_t value) const noexcept
{
    const std::uint64_t offset = value - lo_;
    return (bits_[offset >> 6] >> (offset & 63)) & 1u;
}

std::uint64_t SieveWindow::count_unmarked() const noexcept
{
    std::uint64_t total = 0;
    for (const std::uint64_t word : bits_)
        total += static_cast<std::uint64_t>(std::popcount(~word));
    return total;
}

void SieveWindow::append_unmarked(PrimeList& out) const
{
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        std::uint64_t open = ~bits_[i];
        while (open != 0) {
            const int bit = std::countr_zero(open);
            out.push_back(lo_ + i * 64 + static_cast<std::uint64_t>(bit));
            open &= open - 1;
        }
    }
}

PrimeList simple_sieve(std::uint64_t limit, std::uint64_t budget)
{
    if (limit > budget)
        throw CapacityError("simple_sieve limit " + std::to_string(limit) + " exceeds budget " +
                            std::to_string(budget));
    PrimeList primes;
    if (limit < 2)
        return primes;

    // Odd-only marks: bit i stands for 2i + 1.
    const std::uint64_t odd_count = (limit + 1) / 2;
    std::vector<std::uint64_t> marks(static_cast<std::size_t>((odd_count + 63) / 64), 0);
    auto marked = [&](std::uint64_t i) { return (marks[i >> 6] >> (i & 63)) & 1u; };

    for (std::uint64_t i = 1;; ++i) {
        const std::uint64_t p = 2 * i + 1;
        if (p * p > limit)
            break;
        if (marked(i))
            continue;
        for (std::uint64_t j = (p * p) / 2; j < odd_count; j += p)
            marks[j >> 6] |= std::uint64_t{1} << (j & 63);
    }

    const double estimate = static_cast<double>(limit) / std::log(static_cast<double>(limit));
    primes.reserve(static_cast<std::size_t>(estimate * 1.15) + 8);
    primes.push_back(2);
    for (std::uint64_t i = 1; i < odd_count; ++i)
        if (!marked(i))
            primes.push_back(2 * i + 1);
    return primes;
}

PrimeList base_primes_for(std::uint64_t hi)
{
    return simple_sieve(isqrt(hi));
}

namespace {

bool is_prime_by_trial(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

struct SegmentPlan {
    std::uint64_t lo;
    std::uint64_t hi;
    std::uint64_t segment;
    std::uint64_t count;

    std::uint64_t begin(std::uint64_t index) const { return lo + index * segment; }
    std::uint64_t end(std::uint64_t index) const
    {
        const std::uint64_t b = begin(index);
        return hi - b < segment - 1 ? hi : b + segment - 1;
    }
};

SegmentPlan plan_segments(std::uint64_t lo, std::uint64_t hi, std::size_t segment_size)
{
    const std::uint64_t segment = std::max<std::uint64_t>(segment_size, 1);
    return {lo, hi, segment, (hi - lo) / segment + 1};
}

template <typename Result, typename PerRange>
std::vector<Result> run_partitioned(const SegmentPlan& plan, unsigned threads, PerRange per_range)
{
    const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, plan.count);
    if (workers == 1)
        return {per_range(0, plan.count)};

    std::vector<std::future<Result>> pending;
    pending.reserve(static_cast<std::size_t>(workers));
    const std::uint64_t share = plan.count / workers;
    const std::uint64_t extra = plan.count % workers;
    std::uint64_t first = 0;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t last = first + share + (w < extra ? 1 : 0);
        pending.push_back(std::async(std::launch::async, per_range, first, last));
        first = last;
    }
    std::vector<Result> results;
    results.reserve(pending.size());
    for (auto& f : pending)
        results.push_back(f.get());
    return results;
}

} // namespace

void require_base_covers(std::uint64_t hi, std::span<const std::uint64_t> base)
{
    const std::uint64_t root = isqrt(hi);
    if (root < 2)
        return;
    if (base.empty() || base.front() != 2)
        throw PreconditionError("base primes must start at 2 to sieve up to " + std::to_string(hi));
    for (std::size_t i = 1; i < base.size(); ++i)
        if (base[i] <= base[i - 1])
            throw PreconditionError("base primes must be strictly increasing");
    if (base.back() >= root)
        return;
    std::uint64_t next = base.back() + 1;
    while (!is_prime_by_trial(next))
        ++next;
    if (next <= root)
        throw PreconditionError("base primes end at " + std::to_string(base.back()) + " but prime " +
                                std::to_string(next) + " <= sqrt(" + std::to_string(hi) + ") is missing");
}

PrimeList segmented_sieve(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> base,
                          const SieveConfig& config)
{
    lo = std::max<std::uint64_t>(lo, 2);
    if (hi < lo)
        return {};
    require_base_covers(hi, base);

    const SegmentPlan plan = plan_segments(lo, hi, config.segment_size);
    auto parts = run_partitioned<PrimeList>(plan, config.threads, [&](std::uint64_t first, std::uint64_t last) {
        PrimeList found;
        for (std::uint64_t s = first; s < last; ++s) {
            SieveWindow window(plan.begin(s), plan.end(s));
            window.cross_off(base);
            window.append_unmarked(found);
        }
        return found;
    });

    if (parts.size() == 1)
        return std::move(parts.front());
    PrimeList merged;
    std::size_t total = 0;
    for (const auto& part : parts)
        total += part.size();
    merged.reserve(total);
    for (const auto& part : parts)
        merged.insert(merged.end(), part.begin(), part.end());
    return merged;
}

std::uint64_t count_primes_in(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> base,
                              const SieveConfig& config)
{
    lo = std::max<std::uint64_t>(lo, 2);
    if (hi < lo)
        return 0;
    require_base_covers(hi, base);

    const SegmentPlan plan = plan_segments(lo, hi, config.segment_size);
    auto parts = run_partitioned<std::uint64_t>(plan, config.threads, [&](std::uint64_t first, std::uint64_t last) {
        std::uint64_t found = 0;
        for (std::uint64_t s = first; s < last; ++s) {
            SieveWindow window(plan.begin(s), plan.end(s));
            window.cross_off(base);
            found += window.count_unmarked();
        }
        return found;
    });
    std::uint64_t total = 0;
    for (const auto c : parts)
        total += c;
    return total;
}

} // namespace nthprime
