// Prints the data behind kCalibratedCramerConstant: for each n on a log grid
// the ratio |alpha - p_n| / (sqrt(n) (ln n)^3.5), and the suggested c0
// (twice the largest ratio, rounded up to two significant digits).

#include "nthprime/bounds.hpp"
#include "nthprime/harness.hpp"
#include "nthprime/logint.hpp"
#include "nthprime/nth_prime.hpp"
#include "nthprime/sieve.hpp"

#include <cmath>
#include <cstdio>

using namespace nthprime;

namespace {

double ratio(std::uint64_t n, const PrimeList& primes)
{
    const double alpha = li_inverse(n, 0.5).alpha;
    const double nd = static_cast<double>(n);
    return std::fabs(alpha - static_cast<double>(primes[n - 1])) / (std::sqrt(nd) * std::pow(std::log(nd), 3.5));
}

double round_up_2sig(double v)
{
    const double scale = std::pow(10.0, std::floor(std::log10(v)) - 1);
    return std::ceil(v / scale) * scale;
}

} // namespace

int main()
{
    const std::uint64_t top = 10'000'000;
    const PrimeList primes = simple_sieve(dusart_interval(top).as_integers().hi);

    double grid_max = 0;
    std::uint64_t grid_arg = 0;
    for (const std::uint64_t n : parse_grid("1e3..1e7@4")) {
        const double r = ratio(n, primes);
        std::printf("%10llu  %.6e\n", static_cast<unsigned long long>(n), r);
        if (r > grid_max) {
            grid_max = r;
            grid_arg = n;
        }
    }
    const double c0 = round_up_2sig(2 * grid_max);
    std::printf("grid max ratio %.6e at n = %llu\nsuggested c0 = %.4g (compiled in: %.4g)\n", grid_max,
                static_cast<unsigned long long>(grid_arg), c0, kCalibratedCramerConstant);

    double dense_max = 0;
    for (std::uint64_t n = 1000; n <= 10'000; ++n)
        dense_max = std::fmax(dense_max, ratio(n, primes));
    std::printf("max ratio over every n in [1e3, 1e4]: %.6e (window holds p_n while this is <= c0)\n", dense_max);
    return 0;
}
