#include "oracles.hpp"

#include "nthprime/bounds.hpp"
#include "nthprime/errors.hpp"
#include "nthprime/logint.hpp"

#include <doctest.h>

#include <cmath>

using namespace nthprime;

TEST_CASE("li examples")
{
    CHECK(std::abs(li(2.0L).value - 1.04516378011749278476L) <= 1e-9L);
    CHECK(std::abs(li(1e6L, 1e-6L).value - 78627.549159462181926L) <= 1e-6L);
    CHECK(li(10.0L).value == doctest::Approx(6.165599504787).epsilon(1e-12));
}

TEST_CASE("li agrees with quadrature on a log grid in [2, 1e9]")
{
    for (int i = 0; i < 50; ++i) {
        const long double x = 2.0L * std::pow(5e8L, i / 49.0L);
        const LiValue v = li(x);
        REQUIRE(std::abs(v.value - oracle::li_quadrature(x)) <= 1e-9L);
        REQUIRE(v.eps <= 1e-9L);
    }
}

TEST_CASE("li is strictly increasing")
{
    for (long double x = 2.0L; x < 1e12L; x = x * 1.37L + 1.0L)
        REQUIRE(li(x + 1.0L, 1e-6L).value > li(x, 1e-6L).value);
}

TEST_CASE("li asymptotic branch")
{
    const long double x = std::exp(kAsymptoticSwitch + 1.0L);
    const LiValue above = li(x, 10.0L);
    const long double below_x = std::exp(kAsymptoticSwitch - 1e-6L);
    const LiValue below = li(below_x, 10.0L);
    CHECK(above.value > below.value);
    // li(x) ~ x / ln x * sum k! / (ln x)^k; compare against a few terms.
    const long double l = std::log(x);
    long double term = 1.0L, sum = 0.0L;
    for (int k = 0; k < 10; ++k) {
        sum += term;
        term *= (k + 1) / l;
    }
    CHECK(std::abs(above.value / (x / l * sum) - 1.0L) < 1e-9L);
    CHECK(std::abs(li(1e19L, 1e2L).value / 1e19L - 2.36e-2L) < 1e-3L);
}

TEST_CASE("li errors")
{
    CHECK_THROWS_AS(li(1.999L), DomainError);
    CHECK_THROWS_AS(li(0.0L), DomainError);
    CHECK_THROWS_AS(li(10.0L, 0.0L), DomainError);
    CHECK_THROWS_AS(li(10.0L, -1.0L), DomainError);
    CHECK_THROWS_AS(li(1e15L, 1e-12L), PrecisionError);
}

TEST_CASE("li_inverse examples")
{
    const AlphaResult r = li_inverse(78627, 0.5);
    CHECK(r.alpha == doctest::Approx(1e6).epsilon(1e-5));
    CHECK(r.residual <= 0.5L);
    CHECK(r.n == 78627);

    const AlphaResult m = li_inverse(1'000'000, 0.5);
    CHECK(dusart_interval(1'000'000).contains(m.alpha));
    const double ln = std::log(1e6);
    CHECK(std::abs(m.alpha - 15'485'863.0) <= std::sqrt(1e6) * std::pow(ln, 3.5));
    CHECK(m.bracket_widenings == 0);
}

TEST_CASE("li_inverse round trip, monotonicity and budget")
{
    double prev = 0;
    for (std::uint64_t n = 6; n <= 10'000'000'000ull; n = n * 3 + 1) {
        const AlphaResult r = li_inverse(n, 0.5);
        REQUIRE(std::abs(li(r.alpha, 0.0625L).value - static_cast<long double>(n)) <= 0.5L + 0.0625L);
        REQUIRE(r.residual <= 0.5L);
        REQUIRE(r.alpha > prev);
        REQUIRE(r.evals <= li_inverse_budget(n, 0.5));
        prev = r.alpha;
    }
    for (std::uint64_t n = 1000; n < 1100; ++n)
        REQUIRE(li_inverse(n + 1).alpha > li_inverse(n).alpha);
}

TEST_CASE("li_inverse evaluations grow slowly")
{
    CHECK(li_inverse(1'000'000'000'000ull).evals <= 64);
    CHECK(li_inverse_budget(1'000'000'000'000ull, 0.5) < 64 + 50);
}

TEST_CASE("li_inverse errors")
{
    CHECK_THROWS_AS(li_inverse(5), DomainError);
    CHECK_THROWS_AS(li_inverse(100, 0.0), DomainError);
    CHECK_THROWS_AS(li_inverse(100, -0.5), DomainError);
}
