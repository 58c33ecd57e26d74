#pragma once

#include <cstdint>

namespace nthprime {

/// li(x) as the principal value of the integral of 1/ln t over [0, x].
struct LiValue {
    long double x = 0;
    long double value = 0;
    long double eps = 0; // bound on |value - li(x)| achieved by this evaluation
};

struct AlphaResult {
    double alpha = 0;
    std::uint64_t n = 0;
    long double residual = 0; // |li(alpha) - n|
    unsigned evals = 0;
    unsigned bracket_widenings = 0; // times the Dusart bracket failed to enclose li^-1(n)
};

/// Switch point (in ln x) between the convergent Ei power series and the
/// asymptotic expansion truncated at its smallest term.
inline constexpr long double kAsymptoticSwitch = 43.0L;

/// li(x) with absolute error <= eps, computed as Ei(ln x) in long double.
/// Throws DomainError for x < 2 and PrecisionError when eps is below the
/// error bound attainable in long double at this x.
LiValue li(long double x, long double eps = 1e-9L);

/// Solves li(alpha) = n to |li(alpha) - n| <= tol by safeguarded Newton
/// steps (derivative 1 / ln x) inside the Dusart bracket. A bracket that
/// fails to enclose the root is widened by doubling and the event counted.
/// Throws DomainError for n < 6 or tol <= 0, PrecisionError if tol cannot
/// be met within the evaluation budget.
AlphaResult li_inverse(std::uint64_t n, double tol = 0.5);

/// Evaluation budget for li_inverse: 64 + ceil(log2((R - L) / tol_x)),
/// where tol_x = tol * ln R is the x-tolerance induced by tol.
unsigned li_inverse_budget(std::uint64_t n, double tol);

} // namespace nthprime
