#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <thread>

#include "srs/interval.hpp"
#include "srs/whitham.hpp"

namespace srs {

namespace {

// monomials c * x^j * alpha^i of P
struct Term {
    int i, j;
    double coef;
};

std::vector<Term> p_terms(double beta)
{
    return {{4, 0, 1.0},
            {3, 3, 4.0 + 2.0 * beta},
            {3, 5, -6.0 * beta},
            {2, 4, 3.0 * beta},
            {2, 6, 6.0 - 14.0 * beta},
            {2, 8, 3.0 * beta},
            {1, 7, -6.0 * beta},
            {1, 9, 4.0 + 2.0 * beta},
            {0, 12, 1.0}};
}

// x in [1, ...] so powers are monotone
Interval ipow_pos(Interval x, int n)
{
    return pow(x, n);
}

Interval interval_P(Interval x, Interval a, double beta)
{
    Interval c0 = ipow_pos(x, 12);
    Interval c1 = Interval(-6.0 * beta) * ipow_pos(x, 7) + Interval(4.0 + 2.0 * beta) * ipow_pos(x, 9);
    Interval c2 = Interval(3.0 * beta) * ipow_pos(x, 4) + Interval(6.0 - 14.0 * beta) * ipow_pos(x, 6) +
                  Interval(3.0 * beta) * ipow_pos(x, 8);
    Interval c3 = Interval(4.0 + 2.0 * beta) * ipow_pos(x, 3) + Interval(-6.0 * beta) * ipow_pos(x, 5);
    return (((a + c3) * a + c2) * a + c1) * a + c0;
}

Interval interval_Px(Interval x, Interval a, double beta)
{
    Interval d0 = Interval(12.0) * ipow_pos(x, 11);
    Interval d1 = Interval(-42.0 * beta) * ipow_pos(x, 6) + Interval(9.0 * (4.0 + 2.0 * beta)) * ipow_pos(x, 8);
    Interval d2 = Interval(12.0 * beta) * ipow_pos(x, 3) + Interval(6.0 * (6.0 - 14.0 * beta)) * ipow_pos(x, 5) +
                  Interval(24.0 * beta) * ipow_pos(x, 7);
    Interval d3 = Interval(3.0 * (4.0 + 2.0 * beta)) * ipow_pos(x, 2) + Interval(-30.0 * beta) * ipow_pos(x, 4);
    return ((d3 * a + d2) * a + d1) * a + d0;
}

Interval interval_Pa(Interval x, Interval a, double beta)
{
    Interval c1 = Interval(-6.0 * beta) * ipow_pos(x, 7) + Interval(4.0 + 2.0 * beta) * ipow_pos(x, 9);
    Interval c2 = Interval(3.0 * beta) * ipow_pos(x, 4) + Interval(6.0 - 14.0 * beta) * ipow_pos(x, 6) +
                  Interval(3.0 * beta) * ipow_pos(x, 8);
    Interval c3 = Interval(4.0 + 2.0 * beta) * ipow_pos(x, 3) + Interval(-6.0 * beta) * ipow_pos(x, 5);
    return ((Interval(4.0) * a + Interval(3.0) * c3) * a + Interval(2.0) * c2) * a + c1;
}

// lower bound of P over the box: best of the natural and the mean-value enclosures
double box_lower_bound(const CertBox& b, double beta)
{
    Interval X(b.x_lo, b.x_hi), A(b.a_lo, b.a_hi);
    double natural = interval_P(X, A, beta).lo;
    const double xm = 0.5 * (b.x_lo + b.x_hi), am = 0.5 * (b.a_lo + b.a_hi);
    Interval center = interval_P(Interval(xm), Interval(am), beta);
    Interval mv = center + interval_Px(X, A, beta) * (X - Interval(xm)) + interval_Pa(X, A, beta) * (A - Interval(am));
    return std::max(natural, mv.lo);
}

struct StripResult {
    std::vector<CertBox> leaves;
    bool counterexample = false;
    bool depth_exceeded = false;
    double cx = 0.0, ca = 0.0, cv = 0.0;
};

void certify_box(const CertBox& b, int depth, int max_depth, double beta, StripResult& out)
{
    if (out.counterexample) return;
    CertBox box = b;
    box.lower_bound = box_lower_bound(box, beta);
    if (box.lower_bound > 0.0) {
        out.leaves.push_back(box);
        return;
    }
    const double xm = 0.5 * (box.x_lo + box.x_hi), am = 0.5 * (box.a_lo + box.a_hi);
    const double pm = polynomial_P(xm, am, beta);
    if (pm <= 0.0) {
        out.counterexample = true;
        out.cx = xm;
        out.ca = am;
        out.cv = pm;
        return;
    }
    if (depth >= max_depth) {
        out.depth_exceeded = true;
        out.leaves.push_back(box);
        return;
    }
    // split the direction that dominates the first-order spread
    Interval X(box.x_lo, box.x_hi), A(box.a_lo, box.a_hi);
    const Interval px = interval_Px(X, A, beta), pa = interval_Pa(X, A, beta);
    const double sx = std::max(std::abs(px.lo), std::abs(px.hi)) * (box.x_hi - box.x_lo);
    const double sa = std::max(std::abs(pa.lo), std::abs(pa.hi)) * (box.a_hi - box.a_lo);
    CertBox l = box, r = box;
    if (sx >= sa) {
        l.x_hi = xm;
        r.x_lo = xm;
    } else {
        l.a_hi = am;
        r.a_lo = am;
    }
    certify_box(l, depth + 1, max_depth, beta, out);
    certify_box(r, depth + 1, max_depth, beta, out);
}

}  // namespace

double certification_x_max(double beta, double alpha_cap)
{
    const auto terms = p_terms(beta);
    auto S = [&](double X) {
        double s = 0.0;
        for (const Term& t : terms)
            if (!(t.i == 0 && t.j == 12)) s += std::abs(t.coef) * std::pow(alpha_cap, t.i) * std::pow(X, t.j - 12);
        return s;
    };
    double lo = 1.0, hi = 2.0;
    while (S(hi) >= 1.0) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
        const double m = 0.5 * (lo + hi);
        (S(m) >= 1.0 ? lo : hi) = m;
    }
    return hi * (1.0 + 1e-6);
}

GridMinimum grid_min_alpha(double beta, double step)
{
    const auto [a0, x0] = alpha0_x0(beta);
    const double x_top = 1.5 * x0, a_top = 1.1 * a0;
    const long nx = static_cast<long>(std::floor((x_top - 1.0) / step));
    const long na = static_cast<long>(std::floor((a_top - 1.0) / step));
    long best_j = na + 1;
    long tie_first = -1, tie_last = -1;
    for (long i = 1; i <= nx; ++i) {
        const double x = 1.0 + i * step;
        const auto c = polynomial_P_alpha_coefficients(x, beta);
        for (long j = 1; j <= std::min(best_j, na); ++j) {
            const double a = 1.0 + j * step;
            const double P = (((c[4] * a + c[3]) * a + c[2]) * a + c[1]) * a + c[0];
            if (P <= 0.0) {
                if (j < best_j) {
                    best_j = j;
                    tie_first = tie_last = i;
                } else if (j == best_j) {
                    tie_last = i;
                }
                break;
            }
        }
    }
    if (tie_first < 0) return {0.0, 0.0, false};
    return {1.0 + best_j * step, 1.0 + 0.5 * (tie_first + tie_last) * step, true};
}

PositivityCertificate certify_positivity(double beta, double eps, const CertifyOptions& opt)
{
    if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
    if (!(eps > 0.0)) throw DomainError("eps must be positive");
    const auto t0 = std::chrono::steady_clock::now();
    PositivityCertificate cert;
    cert.beta = beta;
    cert.eps = eps;
    const auto [a0, x0] = alpha0_x0(beta);
    cert.alpha_max = opt.alpha_upper_override > 0.0 ? opt.alpha_upper_override : a0 * (1.0 - eps);
    cert.x_max = certification_x_max(beta, cert.alpha_max);

    // strips in x processed independently, merged in index order
    const int strips = 32;
    std::vector<std::future<StripResult>> jobs;
    unsigned hw = opt.threads > 0 ? static_cast<unsigned>(opt.threads) : std::max(1u, std::thread::hardware_concurrency());
    std::vector<StripResult> results(strips);
    auto work = [&](int s) {
        StripResult out;
        CertBox b;
        b.x_lo = 1.0 + (cert.x_max - 1.0) * s / strips;
        b.x_hi = 1.0 + (cert.x_max - 1.0) * (s + 1) / strips;
        b.a_lo = 1.0;
        b.a_hi = cert.alpha_max;
        certify_box(b, 0, opt.max_depth, beta, out);
        return out;
    };
    for (int base = 0; base < strips; base += static_cast<int>(hw)) {
        jobs.clear();
        const int end = std::min(strips, base + static_cast<int>(hw));
        for (int s = base; s < end; ++s) jobs.push_back(std::async(hw > 1 ? std::launch::async : std::launch::deferred, work, s));
        for (int s = base; s < end; ++s) results[s] = jobs[s - base].get();
    }

    cert.status = CertStatus::Proved;
    for (const StripResult& r : results) {
        if (r.counterexample && cert.status != CertStatus::Counterexample) {
            cert.status = CertStatus::Counterexample;
            cert.counter_x = r.cx;
            cert.counter_alpha = r.ca;
            cert.counter_value = r.cv;
        }
        if (r.depth_exceeded && cert.status == CertStatus::Proved) cert.status = CertStatus::DepthExceeded;
        cert.boxes.insert(cert.boxes.end(), r.leaves.begin(), r.leaves.end());
    }

    if (opt.run_grid_oracle) {
        cert.grid_step = opt.grid_step;
        const GridMinimum gm = grid_min_alpha(beta, opt.grid_step);
        cert.min_alpha_found = gm.min_alpha;
        cert.argmin_x = gm.argmin_x;
        cert.argmin_alpha = gm.min_alpha;
    }
    cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

std::string status_name(CertStatus s)
{
    switch (s) {
    case CertStatus::Proved: return "proved";
    case CertStatus::Counterexample: return "counterexample";
    case CertStatus::DepthExceeded: return "depth_exceeded";
    }
    return "?";
}

}  // namespace srs
