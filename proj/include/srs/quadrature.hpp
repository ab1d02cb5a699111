#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <queue>
#include <vector>

#include "srs/errors.hpp"

namespace srs {

using cplx = std::complex<double>;

struct QuadOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_intervals = 4000;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod on [-1,1]
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Panel {
    double a, b;
    T value;
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

template <class T, class F>
Panel<T> gk15(F& f, double a, double b)
{
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T fc = f(c);
    T kron = fc * kWgk[7];
    T gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        T s = f(c - h * kXgk[j]) + f(c + h * kXgk[j]);
        kron += s * kWgk[j];
        if (j % 2 == 1) gauss += s * kWg[j / 2];
    }
    return {a, b, kron * h, std::abs(kron * h - gauss * h)};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod on [a,b] for real or complex valued f.
template <class F>
auto integrate(F f, double a, double b, const QuadOptions& opt = {})
{
    using T = decltype(f(a));
    std::priority_queue<detail::Panel<T>> heap;
    auto first = detail::gk15<T>(f, a, b);
    T total = first.value;
    double err = first.err;
    heap.push(first);
    int n = 1;
    while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
        if (n >= opt.max_intervals) {
            if (err < 1e3 * std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) break;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.3g", err);
            throw QuadratureError(std::string("adaptive quadrature did not converge (error estimate ") + buf + ")");
        }
        auto worst = heap.top();
        heap.pop();
        double m = 0.5 * (worst.a + worst.b);
        if (!(m > worst.a && m < worst.b)) break;
        auto left = detail::gk15<T>(f, worst.a, m);
        auto right = detail::gk15<T>(f, m, worst.b);
        total += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        n += 1;
    }
    // re-sum to shed the accumulated rounding of the running total
    T sum{};
    while (!heap.empty()) {
        sum += heap.top().value;
        heap.pop();
    }
    return sum;
}

enum class EndSing { None, Start, End, Both };

// Integral of G(s, 1 - s) over s in [0,1], both arguments exact. Singular ends get
// s = u^2/2 (resp. 1 - s = u^2/2) so that inverse square root behaviour becomes smooth.
template <class G>
auto integrate_unit_pair(G g, EndSing sing, const QuadOptions& opt = {})
{
    using T = decltype(g(0.5, 0.5));
    const bool s0 = sing == EndSing::Start || sing == EndSing::Both;
    const bool s1 = sing == EndSing::End || sing == EndSing::Both;
    auto plain = [&](double s) { return g(s, 1.0 - s); };
    if (!s0 && !s1) return integrate(plain, 0.0, 1.0, opt);
    T left, right;
    if (s0)
        left = integrate([&](double u) { return T(g(0.5 * u * u, 1.0 - 0.5 * u * u) * u); }, 0.0, 1.0, opt);
    else
        left = integrate(plain, 0.0, 0.5, opt);
    if (s1)
        right = integrate([&](double u) { return T(g(1.0 - 0.5 * u * u, 0.5 * u * u) * u); }, 0.0, 1.0, opt);
    else
        right = integrate(plain, 0.5, 1.0, opt);
    return T(left + right);
}

template <class G>
auto integrate_unit(G g, EndSing sing, const QuadOptions& opt = {})
{
    return integrate_unit_pair([&](double s, double) { return g(s); }, sing, opt);
}

// Point on the segment a -> b with its offsets from both ends. Near an end z - a (z - b)
// loses all digits when formed from z, so integrands that are singular there use these.
struct SegmentPoint {
    cplx z, a, b, from_a, from_b;  // from_a = z - a, from_b = z - b
    cplx minus(cplx anchor) const
    {
        if (anchor == a) return from_a;
        if (anchor == b) return from_b;
        return z - anchor;
    }
};

// Straight segment a -> b; f takes a SegmentPoint.
template <class F>
cplx integrate_segment_at(F f, cplx a, cplx b, EndSing sing, const QuadOptions& opt = {})
{
    const cplx dir = b - a;
    return integrate_unit_pair(
        [&](double s, double sc) -> cplx {
            const cplx z = s < 0.5 ? a + s * dir : b - sc * dir;
            return f(SegmentPoint{z, a, b, s * dir, -sc * dir}) * dir;
        },
        sing, opt);
}

// Straight segment a -> b in the complex plane.
template <class F>
cplx integrate_segment(F f, cplx a, cplx b, EndSing sing, const QuadOptions& opt = {})
{
    const cplx dir = b - a;
    return integrate_unit([&](double s) -> cplx { return f(a + s * dir) * dir; }, sing, opt);
}

template <class F>
cplx integrate_path_at(F f, const std::vector<cplx>& pts, bool sing_first, bool sing_last,
                       const QuadOptions& opt = {})
{
    cplx total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        bool a = sing_first && i == 0;
        bool b = sing_last && i + 2 == pts.size();
        EndSing s = a && b ? EndSing::Both : a ? EndSing::Start : b ? EndSing::End : EndSing::None;
        total += integrate_segment_at(f, pts[i], pts[i + 1], s, opt);
    }
    return total;
}

// Polyline through the given vertices; singular flags refer to the first and last vertex.
template <class F>
cplx integrate_path(F f, const std::vector<cplx>& pts, bool sing_first, bool sing_last,
                    const QuadOptions& opt = {})
{
    cplx total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        bool a = sing_first && i == 0;
        bool b = sing_last && i + 2 == pts.size();
        EndSing s = a && b ? EndSing::Both : a ? EndSing::Start : b ? EndSing::End : EndSing::None;
        total += integrate_segment(f, pts[i], pts[i + 1], s, opt);
    }
    return total;
}

// Integral of f over [a, +inf) for a > 0 (or (-inf, a] for a < 0) via k = a/u.
template <class F>
auto integrate_tail(F f, double a, const QuadOptions& opt = {})
{
    auto g = [&](double u) {
        using T = decltype(f(a));
        if (u <= 0.0) return T{};
        return T(f(a / u) * (std::abs(a) / (u * u)));
    };
    return integrate(g, 0.0, 1.0, opt);
}

}  // namespace srs
