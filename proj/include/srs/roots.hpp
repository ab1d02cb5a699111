#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

#include "srs/errors.hpp"

namespace srs {

struct BrentResult {
    double root;
    double f_root;
    int iterations;
};

// Brent's method on a bracket with f(a) f(b) <= 0.
template <class F>
BrentResult brent(F f, double a, double b, double xtol, int max_iter = 200)
{
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return {a, fa, 0};
    if (fb == 0.0) return {b, fb, 0};
    if ((fa > 0) == (fb > 0)) throw NoSignChangeError("brent: bracket has no sign change");
    double c = a, fc = fa, d = b - a, e = d;
    for (int it = 1; it <= max_iter; ++it) {
        if ((fb > 0) == (fc > 0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol = 2.0 * 2.2e-16 * std::abs(b) + 0.5 * xtol;
        double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0) return {b, fb, it};
        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            double s = fb / fa, p, q;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                double qa = fa / fc, r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol ? d : (m > 0 ? tol : -tol);
        fb = f(b);
    }
    throw ToleranceError("brent: iteration limit reached");
}

// Scan n equally spaced points for the first sign change, then refine.
template <class F>
BrentResult scan_and_brent(F f, double lo, double hi, int n, double xtol)
{
    double prev_x = lo, prev_f = f(lo);
    for (int i = 1; i < n; ++i) {
        double x = lo + (hi - lo) * i / (n - 1);
        double fx = f(x);
        if (prev_f == 0.0) return {prev_x, 0.0, 0};
        if ((prev_f > 0) != (fx > 0)) return brent(f, prev_x, x, xtol);
        prev_x = x;
        prev_f = fx;
    }
    throw NoSignChangeError("no sign change found on the scan grid");
}

}  // namespace srs
