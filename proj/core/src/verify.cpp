#include "nthprime/errors.hpp"
#include "nthprime/harness.hpp"
#include "nthprime/logint.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

namespace nthprime {
namespace {

constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;
constexpr std::size_t kGaussOrder = 20;
constexpr long double kPanelWidth = 0.5L;

struct GaussRule {
    std::array<long double, kGaussOrder> nodes{};
    std::array<long double, kGaussOrder> weights{};
};

// Legendre nodes by Newton's method on P_N.
GaussRule make_gauss_rule()
{
    GaussRule rule;
    constexpr long double pi = 3.141592653589793238462643383279502884L;
    for (std::size_t i = 0; i < kGaussOrder; ++i) {
        long double z = std::cos(pi * (static_cast<long double>(i) + 0.75L) / (kGaussOrder + 0.5L));
        long double derivative = 0;
        for (int iter = 0; iter < 100; ++iter) {
            long double p0 = 1, p1 = z;
            for (std::size_t k = 2; k <= kGaussOrder; ++k) {
                const long double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            derivative = kGaussOrder * (z * p1 - p0) / (z * z - 1);
            const long double step = p1 / derivative;
            z -= step;
            if (std::fabs(step) < 1e-21L)
                break;
        }
        rule.nodes[i] = z;
        rule.weights[i] = 2 / ((1 - z * z) * derivative * derivative);
    }
    return rule;
}

std::string format(const char* fmt, double a, double b = 0, double c = 0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt, a, b, c);
    return buf;
}

class Recorder {
public:
    explicit Recorder(VerifyReport& report) : report_(report) {}

    void check(const char* kind, std::uint64_t at, bool ok, const std::string& details)
    {
        ++report_.checked;
        ++report_.checks_by_kind[kind];
        if (!ok)
            report_.failures.push_back({kind, at, details});
    }

private:
    VerifyReport& report_;
};

std::vector<std::uint64_t> sample_indices(std::uint64_t max_n)
{
    std::vector<std::uint64_t> sample;
    const std::uint64_t exhaustive = std::min<std::uint64_t>(max_n, 2000);
    for (std::uint64_t n = 1; n <= exhaustive; ++n)
        sample.push_back(n);
    if (max_n > exhaustive) {
        const std::vector<std::uint64_t> tail = parse_grid(std::to_string(exhaustive) + ".." + std::to_string(max_n) + "@16");
        for (const std::uint64_t n : tail)
            if (n > exhaustive)
                sample.push_back(n);
    }
    return sample;
}

std::vector<long double> log_spaced(long double lo, long double hi, std::size_t count)
{
    std::vector<long double> points;
    for (std::size_t i = 0; i < count; ++i)
        points.push_back(lo * std::pow(hi / lo, static_cast<long double>(i) / static_cast<long double>(count - 1)));
    return points;
}

} // namespace

long double li_reference(long double x)
{
    static const GaussRule rule = make_gauss_rule();
    const long double t = std::log(x);
    const auto panels = static_cast<std::size_t>(std::ceil(t / kPanelWidth));
    const long double h = t / static_cast<long double>(panels);
    long double integral = 0;
    for (std::size_t p = 0; p < panels; ++p) {
        const long double mid = (static_cast<long double>(p) + 0.5L) * h;
        long double panel = 0;
        for (std::size_t i = 0; i < kGaussOrder; ++i) {
            const long double u = mid + 0.5L * h * rule.nodes[i];
            panel += rule.weights[i] * std::expm1(u) / u;
        }
        integral += 0.5L * h * panel;
    }
    return kEulerGamma + std::log(t) + integral;
}

VerifyReport run_verify(const VerifyOptions& options)
{
    if (options.max_n == 0)
        throw DomainError("verify needs max_n >= 1");
    const std::uint64_t max_n = options.max_n;
    VerifyReport report;
    report.max_n = max_n;
    Recorder rec(report);

    const std::uint64_t limit = max_n >= 6 ? dusart_interval(max_n).as_integers().hi : 15;
    const PrimeList oracle = simple_sieve(limit);

    for (std::uint64_t n = 6; n <= max_n; ++n) {
        const Interval bounds = dusart_interval(n);
        const auto p = static_cast<double>(oracle[n - 1]);
        rec.check("dusart_containment", n, bounds.lo < p && p < bounds.hi,
                  format("L=%.6f p_n=%.0f R=%.6f", bounds.lo, p, bounds.hi));
        const double ulp = std::nextafter(bounds.hi, INFINITY) - bounds.hi;
        const double width_error = std::fabs((bounds.hi - bounds.lo) - static_cast<double>(n));
        rec.check("dusart_containment", n, width_error <= ulp,
                  format("R-L differs from n by %.3g (ulp %.3g)", width_error, ulp));
    }

    for (const std::uint64_t n : sample_indices(max_n)) {
        const std::uint64_t expected = oracle[n - 1];
        const NthPrimeResult binary = nth_prime_binary_search(n, options.nth);
        const NthPrimeResult sieve = nth_prime_sieve_bound(n, options.nth);
        const NthPrimeResult cramer = nth_prime_cramer(n, options.nth);
        const bool agree = binary.prime == expected && sieve.prime == expected && cramer.prime == expected;
        rec.check("cross_algorithm", n, agree,
                  "oracle " + std::to_string(expected) + ", binary " + std::to_string(binary.prime) + ", sieve " +
                      std::to_string(sieve.prime) + ", cramer " + std::to_string(cramer.prime));
        if (n >= 6) {
            const auto budget = static_cast<std::uint64_t>(std::floor(std::log2(static_cast<double>(n)))) + 2;
            rec.check("pi_budget", n, binary.pi_evals <= budget,
                      std::to_string(binary.pi_evals) + " pi evaluations, budget " + std::to_string(budget));
        }
    }

    const auto schoenfeld_hi = static_cast<long double>(std::max<std::uint64_t>(limit, 1'000'000));
    std::uint64_t previous_x = 0;
    for (const long double xf : log_spaced(kSchoenfeldMinX, schoenfeld_hi, 200)) {
        const auto x = static_cast<std::uint64_t>(std::llround(xf));
        if (x == previous_x)
            continue;
        previous_x = x;
        const double residual = schoenfeld_check(x);
        rec.check("schoenfeld", x, residual < 0, format("residual %.6f", residual));
    }

    for (const long double x : log_spaced(2.0L, 1e9L, 50)) {
        const long double reference = li_reference(x);
        try {
            const long double value = li(x, 1e-9L).value;
            const long double error = std::fabs(value - reference);
            rec.check("li_accuracy", static_cast<std::uint64_t>(x), error <= 1e-9L,
                      format("x=%.6f |li - reference| = %.3g", static_cast<double>(x), static_cast<double>(error)));
        } catch (const PrecisionError& e) {
            rec.check("li_accuracy", static_cast<std::uint64_t>(x), false, e.what());
        }
    }
    for (std::uint64_t n = 100; n <= 10'000'000; n *= 10) {
        const AlphaResult a = li_inverse(n, 0.5);
        const long double recheck = std::fabs(li(a.alpha, 1e-6L).value - static_cast<long double>(n));
        rec.check("li_accuracy", n, recheck <= 0.5L,
                  format("alpha=%.6f |li(alpha) - n| = %.3g", a.alpha, static_cast<double>(recheck)));
    }
    return report;
}

} // namespace nthprime
