#include "oracles.hpp"

#include "nthprime/errors.hpp"
#include "nthprime/prime_count.hpp"
#include "nthprime/sieve.hpp"

#include <doctest.h>

#include <random>
#include <thread>
#include <vector>

using namespace nthprime;

TEST_CASE("pi small values")
{
    CHECK(pi(0).count == 0);
    CHECK(pi(1).count == 0);
    CHECK(pi(2).count == 1);
    CHECK(pi(3).count == 2);
    CHECK(pi(100).count == 25);
    CHECK(pi(100).x == 100);
}

TEST_CASE("pi at powers of ten")
{
    CHECK(pi(10'000).count == 1229);
    CHECK(pi(1'000'000).count == 78498);
    CHECK(pi(100'000'000).count == 5761455);
    CHECK(pi(1'000'000'000).count == 50847534);
    CHECK(pi(10'000'000'000ull).count == 455052511);
}

TEST_CASE("pi matches the sieve oracle up to 10^6")
{
    const auto primes = oracle::primes_up_to(1'000'000);
    const PrimeCounter counter(1'000'000);
    for (std::uint64_t x = 0; x <= 1'000'000; x += 100)
        REQUIRE(counter.count(x).count == oracle::count_up_to(primes, x));

    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t x = rng() % 1'000'001;
        REQUIRE(counter.count(x).count == oracle::count_up_to(primes, x));
    }
}

TEST_CASE("pi beyond the lookup table")
{
    // A counter for a large bound still answers small x, and a counter for
    // a small bound forces phi recursion for x near its limit.
    const auto primes = oracle::primes_up_to(3'000'000);
    const PrimeCounter counter(3'000'000);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t x = 1'000'000 + rng() % 2'000'001;
        REQUIRE(counter.count(x).count == oracle::count_up_to(primes, x));
    }
    const auto eval = pi(2'999'999);
    CHECK(eval.count == oracle::count_up_to(primes, 2'999'999));
}

TEST_CASE("pi steps by one exactly at primes")
{
    const PrimeCounter counter(200'000);
    const auto limit = counter.count(0).cost.table_limit;
    std::vector<std::uint64_t> probes;
    for (std::uint64_t x = 2; x < 5000; ++x)
        probes.push_back(x);
    for (std::uint64_t x = limit > 50 ? limit - 50 : 2; x <= limit + 50 && x <= 200'000; ++x)
        probes.push_back(x);
    for (std::uint64_t x = 199'000; x <= 200'000; ++x)
        probes.push_back(x);
    for (const auto p : probes) {
        const auto step = counter.count(p).count - counter.count(p - 1).count;
        REQUIRE(step == (oracle::is_prime(p) ? 1u : 0u));
    }
}

TEST_CASE("pi is monotone")
{
    const PrimeCounter counter(10'000'000);
    std::uint64_t prev = 0;
    for (std::uint64_t x = 0; x <= 10'000'000; x += 9973) {
        const auto c = counter.count(x).count;
        REQUIRE(c >= prev);
        prev = c;
    }
}

TEST_CASE("pi domain errors")
{
    CHECK_THROWS_AS(pi(kPiMaxSupported + 1), OverflowError);
    CHECK_THROWS_AS(PrimeCounter(kPiMaxSupported + 1), OverflowError);
    const PrimeCounter counter(1000);
    CHECK_THROWS_AS(counter.count(1001), PreconditionError);
    CHECK_THROWS_AS(counter.count(kPiMaxSupported + 1), Error);
}

TEST_CASE("phi examples")
{
    const PrimeList none;
    CHECK(phi(0, 0, none) == 0);
    CHECK(phi(12345, 0, none) == 12345);
    CHECK(phi(10, 1, PrimeList{2}) == 5);
    CHECK(phi(100, 3, PrimeList{2, 3, 5}) == 26);
    CHECK_THROWS_AS(phi(100, 4, PrimeList{2, 3, 5}), PreconditionError);
}

TEST_CASE("phi agrees with brute force for wheel and non-wheel bases")
{
    const auto primes = oracle::primes_up_to(200);
    const PrimeList base(primes.begin(), primes.end());
    const PrimeList odd_base(primes.begin() + 1, primes.end());
    const std::vector<std::uint64_t> odd_vec(odd_base.begin(), odd_base.end());
    std::mt19937_64 rng(17);
    for (int i = 0; i < 400; ++i) {
        const std::uint64_t x = rng() % 50'000;
        const std::size_t a = rng() % 20;
        REQUIRE(phi(x, a, base) == oracle::phi_brute(x, a, primes));
        REQUIRE(phi(x, a, odd_base) == oracle::phi_brute(x, a, odd_vec));
    }
}

TEST_CASE("phi satisfies the Legendre recurrence")
{
    const PrimeCounter counter(1'000'000);
    const auto primes = counter.primes();
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t x = rng() % 1'000'000;
        const std::uint64_t a = 1 + rng() % 40;
        REQUIRE(counter.phi(x, a) == counter.phi(x, a - 1) - counter.phi(x / primes[a - 1], a - 1));
    }
}

TEST_CASE("Legendre identity pi(x) = phi(x, a) + a - 1 for x <= 10^5")
{
    const auto primes = oracle::primes_up_to(100'000);
    const PrimeList base = simple_sieve(400);
    for (std::uint64_t x = 2; x <= 100'000; ++x) {
        const std::uint64_t a = oracle::count_up_to(primes, isqrt(x));
        REQUIRE(phi(x, a, base) + a - 1 == oracle::count_up_to(primes, x));
    }
}

TEST_CASE("counter is safe to share between threads")
{
    const PrimeCounter counter(50'000'000);
    const std::uint64_t expected = counter.count(50'000'000).count;
    std::vector<std::uint64_t> results(4);
    {
        std::vector<std::thread> workers;
        for (std::size_t t = 0; t < results.size(); ++t)
            workers.emplace_back([&, t] { results[t] = counter.count(50'000'000).count; });
        for (auto& w : workers)
            w.join();
    }
    for (const auto r : results)
        CHECK(r == expected);
    CHECK(expected == 3001134);
}
