#include "nthprime/prime_count.hpp"

#include "nthprime/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace nthprime {
namespace {

constexpr std::uint64_t kMinTableLimit = std::uint64_t{1} << 16;
constexpr unsigned kWheelDepth = 6;
constexpr std::array<std::uint64_t, kWheelDepth> kWheelPrimes{2, 3, 5, 7, 11, 13};

// phi(x, a) for a <= 6 as (x / Q) * totient(Q) + partial[x % Q], Q = p_1 * ... * p_a.
class WheelTables {
public:
    WheelTables()
    {
        std::uint64_t modulus = 1;
        std::uint64_t totient = 1;
        for (unsigned a = 1; a <= kWheelDepth; ++a) {
            const std::uint64_t p = kWheelPrimes[a - 1];
            modulus *= p;
            totient *= p - 1;
            Level& level = levels_[a - 1];
            level.modulus = modulus;
            level.totient = totient;
            level.partial.assign(static_cast<std::size_t>(modulus), 0);
            std::uint32_t running = 0;
            for (std::uint64_t r = 1; r < modulus; ++r) {
                bool coprime = true;
                for (unsigned k = 0; k < a && coprime; ++k)
                    coprime = r % kWheelPrimes[k] != 0;
                running += coprime ? 1 : 0;
                level.partial[static_cast<std::size_t>(r)] = running;
            }
        }
    }

    std::uint64_t phi(std::uint64_t x, unsigned a) const noexcept
    {
        const Level& level = levels_[a - 1];
        return (x / level.modulus) * level.totient + level.partial[static_cast<std::size_t>(x % level.modulus)];
    }

private:
    struct Level {
        std::uint64_t modulus = 1;
        std::uint64_t totient = 1;
        std::vector<std::uint32_t> partial;
    };
    std::array<Level, kWheelDepth> levels_;
};

const WheelTables& wheel_tables()
{
    static const WheelTables tables;
    return tables;
}

unsigned usable_wheel_depth(std::span<const std::uint64_t> primes)
{
    unsigned depth = 0;
    while (depth < kWheelDepth && depth < primes.size() && primes[depth] == kWheelPrimes[depth])
        ++depth;
    return depth;
}

struct PhiContext {
    std::span<const std::uint64_t> primes;
    unsigned wheel_depth = 0;
    const PrimeCounter* table = nullptr;
    std::uint64_t table_limit = 0;
    std::uint64_t (*lookup)(const PrimeCounter&, std::uint64_t) = nullptr;
    bool consecutive = true; // primes are exactly 2, 3, 5, ... with no gaps
};

std::uint64_t phi_core(std::uint64_t x, std::uint64_t a, const PhiContext& ctx, std::uint64_t& calls)
{
    ++calls;
    if (a == 0)
        return x;
    if (x == 0)
        return 0;
    if (a <= ctx.wheel_depth)
        return wheel_tables().phi(x, static_cast<unsigned>(a));

    if (!ctx.consecutive) {
        std::uint64_t result = x;
        for (std::uint64_t i = 1; i <= a; ++i)
            result -= phi_core(x / ctx.primes[i - 1], i - 1, ctx, calls);
        return result;
    }

    const std::uint64_t pa = ctx.primes[a - 1];
    if (x <= pa)
        return 1;
    if (ctx.table != nullptr && x <= ctx.table_limit && a < ctx.primes.size()) {
        const std::uint64_t next = ctx.primes[a];
        if (x / next < next) // x < p_{a+1}^2: survivors are 1 and the primes in (p_a, x]
            return ctx.lookup(*ctx.table, x) - a + 1;
    }

    const unsigned depth = ctx.wheel_depth;
    std::uint64_t result = depth == 0 ? x : wheel_tables().phi(x, depth);
    for (std::uint64_t i = depth + 1; i <= a; ++i) {
        const std::uint64_t p = ctx.primes[i - 1];
        const std::uint64_t y = x / p;
        if (y < p) {
            // phi(y, i - 1) = 1 for this and every larger i, since p_a < x.
            result -= a - i + 1;
            break;
        }
        result -= phi_core(y, i - 1, ctx, calls);
    }
    return result;
}

} // namespace

PrimeCounter::PrimeCounter(std::uint64_t max_x)
    : max_x_(max_x)
{
    if (max_x > kPiMaxSupported)
        throw OverflowError("pi(x) supports x <= " + std::to_string(kPiMaxSupported) + ", got " +
                            std::to_string(max_x));
    const std::uint64_t root3 = icbrt(max_x) + 1;
    table_limit_ = std::max(kMinTableLimit, root3 * root3);

    const std::uint64_t odd_count = (table_limit_ + 1) / 2;
    const std::size_t words = static_cast<std::size_t>((odd_count + 63) / 64);
    odd_composite_.assign(words, 0);
    odd_composite_[0] |= 1; // the value 1
    for (std::uint64_t i = 1;; ++i) {
        const std::uint64_t p = 2 * i + 1;
        if (p * p > table_limit_)
            break;
        if ((odd_composite_[i >> 6] >> (i & 63)) & 1u)
            continue;
        for (std::uint64_t j = (p * p) / 2; j < odd_count; j += p)
            odd_composite_[j >> 6] |= std::uint64_t{1} << (j & 63);
    }
    // Indices past the table are treated as composite.
    if (const unsigned tail = static_cast<unsigned>(odd_count & 63); tail != 0)
        odd_composite_.back() |= ~std::uint64_t{0} << tail;

    prefix_.assign(words + 1, 0);
    for (std::size_t w = 0; w < words; ++w)
        prefix_[w + 1] = prefix_[w] + static_cast<std::uint32_t>(std::popcount(~odd_composite_[w]));

    const std::uint64_t prime_limit = std::max<std::uint64_t>(isqrt(max_x), 1024);
    primes_.push_back(2);
    for (std::uint64_t i = 1; 2 * i + 1 <= prime_limit; ++i)
        if (!((odd_composite_[i >> 6] >> (i & 63)) & 1u))
            primes_.push_back(2 * i + 1);
}

std::uint64_t PrimeCounter::lookup(std::uint64_t x) const noexcept
{
    if (x < 2)
        return 0;
    const std::uint64_t index = (x - 1) / 2; // largest odd <= x is 2 * index + 1
    const std::size_t word = static_cast<std::size_t>(index >> 6);
    const unsigned bit = static_cast<unsigned>(index & 63);
    const std::uint64_t mask = bit == 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (bit + 1)) - 1;
    return 1 + prefix_[word] + static_cast<std::uint64_t>(std::popcount(~odd_composite_[word] & mask));
}

std::uint64_t PrimeCounter::phi(std::uint64_t x, std::uint64_t a) const
{
    if (a > primes_.size())
        throw PreconditionError("phi needs " + std::to_string(a) + " primes, counter holds " +
                                std::to_string(primes_.size()));
    PhiContext ctx{primes_, usable_wheel_depth(primes_), this, table_limit_,
                   [](const PrimeCounter& c, std::uint64_t v) { return c.lookup(v); }};
    std::uint64_t calls = 0;
    return phi_core(x, a, ctx, calls);
}

PiEvaluation PrimeCounter::count(std::uint64_t x) const
{
    if (x > max_x_)
        throw PreconditionError("x = " + std::to_string(x) + " above counter capacity " + std::to_string(max_x_));

    PiEvaluation eval;
    eval.x = x;
    eval.cost.table_limit = table_limit_;
    if (x <= table_limit_) {
        eval.count = lookup(x);
        return eval;
    }

    const std::uint64_t a = lookup(icbrt(x));
    const std::uint64_t b = lookup(isqrt(x));
    PhiContext ctx{primes_, usable_wheel_depth(primes_), this, table_limit_,
                   [](const PrimeCounter& c, std::uint64_t v) { return c.lookup(v); }};
    const std::uint64_t phi_value = phi_core(x, a, ctx, eval.cost.phi_calls);

    // P2: integers <= x with exactly two prime factors, both > p_a.
    std::uint64_t p2 = 0;
    for (std::uint64_t i = a + 1; i <= b; ++i)
        p2 += lookup(x / primes_[i - 1]) - (i - 1);

    eval.count = phi_value + a - 1 - p2;
    return eval;
}

PiEvaluation pi(std::uint64_t x)
{
    return PrimeCounter(x).count(x);
}

std::uint64_t phi(std::uint64_t x, std::uint64_t a, std::span<const std::uint64_t> base)
{
    if (a > base.size())
        throw PreconditionError("phi needs " + std::to_string(a) + " primes, base holds " +
                                std::to_string(base.size()));
    const auto used = base.first(static_cast<std::size_t>(a));
    PhiContext ctx{used, usable_wheel_depth(used)};
    ctx.consecutive = a == 0 || (std::is_sorted(used.begin(), used.end()) && used.front() == 2 &&
                                 used.back() <= 64 * used.size() + 64 &&
                                 simple_sieve(used.back()).size() == used.size());
    std::uint64_t calls = 0;
    return phi_core(x, a, ctx, calls);
}

} // namespace nthprime
