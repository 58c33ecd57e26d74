#include "nthprime/bounds.hpp"

#include "nthprime/errors.hpp"

#include <cmath>
#include <string>

namespace nthprime {

IntegerRange Interval::as_integers() const noexcept
{
    const double low = std::floor(lo);
    return {low <= 0.0 ? 0 : static_cast<std::uint64_t>(low), static_cast<std::uint64_t>(std::ceil(hi))};
}

Interval dusart_interval(std::uint64_t n)
{
    if (n < 6)
        throw DomainError("Dusart bounds need n >= 6, got " + std::to_string(n));
    const double nd = static_cast<double>(n);
    const double log_n = std::log(nd);
    const double hi = nd * (log_n + std::log(log_n));
    return {hi - nd, hi};
}

double threshold_B(std::uint64_t n, double c)
{
    if (n < 3)
        throw DomainError("threshold_B needs n >= 3 so that ln ln n > 0, got " + std::to_string(n));
    if (!(c > 0.0))
        throw DomainError("threshold_B needs c > 0");
    const double nd = static_cast<double>(n);
    const double log_n = std::log(nd);
    return std::sqrt(nd) * std::pow(log_n, 4) / (c * std::log(log_n));
}

} // namespace nthprime
