#include "nthprime/logint.hpp"

#include "nthprime/bounds.hpp"
#include "nthprime/errors.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <sstream>
#include <string>

namespace nthprime {
namespace {

constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;
constexpr long double kUnitRoundoff = LDBL_EPSILON / 2;

struct Estimate {
    long double value;
    long double error;
};

// Ei(t) = gamma + ln t + sum_{k>=1} t^k / (k k!). All terms are positive for
// t > 0, so rounding error is bounded by the running sums.
Estimate ei_series(long double t)
{
    long double term = 1; // t^k / k!
    long double sum = 0;
    long double rounding = 0;
    for (unsigned k = 1; k < 10000; ++k) {
        term *= t / k;
        const long double contribution = term / k;
        sum += contribution;
        rounding += sum + 2 * term;
        if (k > t && contribution <= sum * kUnitRoundoff / 4) {
            // Tail is dominated by a geometric series of ratio t / (k + 1).
            const long double tail = contribution * t / (k + 1 - t);
            const long double head = kEulerGamma + std::log(t);
            const long double value = head + sum;
            const long double error =
                kUnitRoundoff * (rounding + 4 * (std::fabs(head) + std::fabs(value))) + tail;
            return {value, error};
        }
    }
    throw PrecisionError("Ei series failed to converge");
}

// Ei(t) ~ (e^t / t) sum_{k>=0} k! / t^k, summed up to its smallest term.
Estimate ei_asymptotic(long double t)
{
    long double term = 1;
    long double sum = 1;
    unsigned k = 1;
    for (;; ++k) {
        const long double next = term * k / t;
        if (next >= term)
            break;
        term = next;
        sum += term;
    }
    const long double scale = std::exp(t) / t;
    const long double value = scale * sum;
    const long double error = scale * term + kUnitRoundoff * (2 * k + 8) * value;
    return {value, error};
}

} // namespace

LiValue li(long double x, long double eps)
{
    if (!(x >= 2))
        throw DomainError("li(x) is defined here for x >= 2");
    if (!(eps > 0))
        throw DomainError("li(x) needs eps > 0");

    const long double t = std::log(x);
    const Estimate est = t < kAsymptoticSwitch ? ei_series(t) : ei_asymptotic(t);
    if (est.error > eps) {
        std::ostringstream msg;
        msg << "li(" << static_cast<double>(x) << ") error bound " << static_cast<double>(est.error)
            << " exceeds requested eps " << static_cast<double>(eps);
        throw PrecisionError(msg.str());
    }
    return {x, est.value, est.error};
}

unsigned li_inverse_budget(std::uint64_t n, double tol)
{
    const Interval bracket = dusart_interval(n);
    const double tol_x = tol * std::log(bracket.hi);
    const double steps = std::ceil(std::log2(std::max(1.0, (bracket.hi - bracket.lo) / tol_x)));
    return 64 + static_cast<unsigned>(steps);
}

AlphaResult li_inverse(std::uint64_t n, double tol)
{
    if (n < 6)
        throw DomainError("li_inverse brackets with Dusart bounds and needs n >= 6");
    if (!(tol > 0))
        throw DomainError("li_inverse needs tol > 0");

    AlphaResult result;
    result.n = n;
    const long double target = static_cast<long double>(n);
    const long double li_eps = static_cast<long double>(tol) / 8;
    auto f = [&](double x) {
        ++result.evals;
        return li(static_cast<long double>(x), li_eps).value - target;
    };

    const Interval dusart = dusart_interval(n);
    double lo = dusart.lo;
    double hi = dusart.hi;
    long double f_lo = f(lo);
    long double f_hi = f(hi);
    while (f_lo > 0 && lo > 2) {
        lo = std::max(2.0, lo - (hi - lo));
        f_lo = f(lo);
        ++result.bracket_widenings;
    }
    while (f_hi < 0) {
        hi += hi - lo;
        f_hi = f(hi);
        ++result.bracket_widenings;
    }
    if (f_lo > 0)
        throw DomainError("li_inverse: li(2) already exceeds n");

    const unsigned budget = li_inverse_budget(n, tol) + 2 * result.bracket_widenings;
    double x = hi - static_cast<double>(f_hi) * std::log(hi);
    if (!(x > lo && x < hi))
        x = lo + (hi - lo) / 2;
    while (result.evals < budget) {
        const long double fx = f(x);
        if (std::fabs(fx) <= tol) {
            result.alpha = x;
            result.residual = std::fabs(fx);
            return result;
        }
        if (fx > 0)
            hi = x;
        else
            lo = x;
        double next = x - static_cast<double>(fx) * std::log(x);
        if (!(next > lo && next < hi))
            next = lo + (hi - lo) / 2;
        if (next == x)
            break;
        x = next;
    }
    throw PrecisionError("li_inverse(" + std::to_string(n) + ") could not reach tol within " +
                         std::to_string(budget) + " evaluations");
}

} // namespace nthprime
