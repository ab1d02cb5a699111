#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace srs {

// Closed interval with outward rounding: every result is widened by one ulp on each side.
struct Interval {
    double lo = 0.0, hi = 0.0;

    Interval() = default;
    Interval(double v) : lo(v), hi(v) {}
    Interval(double a, double b) : lo(a), hi(b) {}

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
};

namespace detail {
inline double down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }
inline double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }
}  // namespace detail

inline Interval operator+(Interval a, Interval b) { return {detail::down(a.lo + b.lo), detail::up(a.hi + b.hi)}; }
inline Interval operator-(Interval a, Interval b) { return {detail::down(a.lo - b.hi), detail::up(a.hi - b.lo)}; }
inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

inline Interval operator*(Interval a, Interval b)
{
    double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {detail::down(std::min({p1, p2, p3, p4})), detail::up(std::max({p1, p2, p3, p4}))};
}

// integer power; exact range for even powers straddling zero
inline Interval pow(Interval a, int n)
{
    if (n == 0) return Interval(1.0);
    Interval r = a;
    for (int i = 1; i < n; ++i) r = r * a;
    if (n % 2 == 0 && a.lo < 0.0 && a.hi > 0.0) r.lo = 0.0;
    return r;
}

}  // namespace srs
