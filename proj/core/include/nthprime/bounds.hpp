#pragma once

#include <cstdint>

namespace nthprime {

/// Closed integer range [lo, hi].
struct IntegerRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    std::uint64_t size() const noexcept { return hi - lo + 1; }
    bool contains(std::uint64_t v) const noexcept { return lo <= v && v <= hi; }
    friend bool operator==(const IntegerRange&, const IntegerRange&) = default;
};

/// Real interval with lo < hi.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    /// Outward rounding: [floor(lo), ceil(hi)], lo clamped at 0.
    IntegerRange as_integers() const noexcept;
    bool contains(double v) const noexcept { return lo < v && v < hi; }
};

/// Dusart's bracket for the nth prime, valid for n >= 6:
///   n(ln n + ln ln n - 1) < p_n < n(ln n + ln ln n).
/// The upper end is computed first and the lower end as hi - n, so the width
/// equals n to within one rounding of the lower end.
/// Throws DomainError for n < 6.
Interval dusart_interval(std::uint64_t n);

/// Largest interval size s for which sieving s integers near p_n is still
/// cheaper than binary search over a pi oracle: sqrt(n) (ln n)^4 / (c ln ln n).
/// Throws DomainError for n < 3 or c <= 0.
double threshold_B(std::uint64_t n, double c = 1.0);

} // namespace nthprime
