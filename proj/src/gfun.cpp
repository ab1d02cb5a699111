#include "srs/gfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace srs {

cplx g_genus0(cplx k, double xi, const SpectralConstants& c)
{
    if (k == 0.0) throw SingularityError("g has a pole at k = 0");
    return (c.params.omega / (2.0 * k) + 1.0 / (4.0 * xi * xi)) * big_X(k, c);
}

cplx dg_genus0(cplx k, const Genus0Roots& g, const SpectralConstants& c)
{
    if (k == 0.0) throw SingularityError("dg has a pole at k = 0");
    const double xi = g.xi;
    return (k - g.lambda_minus) * (k - g.lambda_mid) * (k - g.lambda_plus) / (4.0 * xi * xi * k * k * big_X(k, c));
}

namespace {

// parameter of k along the chord a -> b and its normal offset
void chord_coords(cplx k, cplx a, cplx b, double& s, double& off)
{
    const cplx z = (k - a) / (b - a);
    s = z.real();
    off = z.imag() * std::abs(b - a);
}

}  // namespace

bool on_band_chord(cplx k, const Genus1Params& gp, const SpectralConstants& c, double tol)
{
    double s, off;
    const double scale = std::abs(gp.d - c.E) + c.absE;
    chord_coords(k, c.E, gp.d, s, off);
    if (s > 0.0 && s < 1.0 && std::abs(off) <= tol * scale) return true;
    chord_coords(k, std::conj(c.E), std::conj(gp.d), s, off);
    return s > 0.0 && s < 1.0 && std::abs(off) <= tol * scale;
}

cplx band_radical(cplx k, const Genus1Params& gp, const SpectralConstants& c)
{
    if (on_band_chord(k, gp, c, 0.0)) throw SingularityError("band radical evaluated on a chord without a side");
    const cplx E = c.E, d = gp.d;
    return std::sqrt((k - d) / (k - E)) * std::sqrt((k - std::conj(d)) / (k - std::conj(E)));
}

cplx band_radical(const SegmentPoint& p, const Genus1Params& gp, const SpectralConstants& c)
{
    if (on_band_chord(p.z, gp, c, 0.0)) throw SingularityError("band radical evaluated on a chord without a side");
    const cplx E = c.E, d = gp.d;
    return std::sqrt(p.minus(d) / p.minus(E)) * std::sqrt(p.minus(std::conj(d)) / p.minus(std::conj(E)));
}

cplx band_radical_minus_one(cplx k, const Genus1Params& gp, const SpectralConstants& c)
{
    if (on_band_chord(k, gp, c, 0.0)) throw SingularityError("band radical evaluated on a chord without a side");
    // sqrt(1 + a) - 1 = a / (sqrt(1 + a) + 1) keeps the small difference at large |k|
    auto part = [](cplx a) { return a / (std::sqrt(1.0 + a) + 1.0); };
    const cplx a = part((c.E - gp.d) / (k - c.E));
    const cplx b = part((std::conj(c.E) - std::conj(gp.d)) / (k - std::conj(c.E)));
    return a + b + a * b;
}

cplx band_radical_on_chord(double s, bool upper, ChordSide side, const Genus1Params& gp, const SpectralConstants& c)
{
    const cplx a = upper ? c.E : std::conj(c.E);
    const cplx b = upper ? gp.d : std::conj(gp.d);
    const cplx k = a + s * (b - a);
    const double mag = std::sqrt(std::max(0.0, 1.0 - s) / s);
    const cplx own = side == ChordSide::Left ? cplx(0.0, mag) : cplx(0.0, -mag);
    const cplx other = std::sqrt((k - std::conj(b)) / (k - std::conj(a)));
    return own * other;
}

cplx dg_hat_prefactor(cplx k, const Genus1Params& gp)
{
    return (k - gp.lambda_minus) * (k - gp.lambda_plus) / (4.0 * gp.xi * gp.xi * k * k);
}

cplx dg_hat(const SegmentPoint& p, const Genus1Params& gp, const SpectralConstants& c)
{
    if (p.z == 0.0) throw SingularityError("dg_hat has a pole at k = 0");
    return dg_hat_prefactor(p.z, gp) * band_radical(p, gp, c);
}

cplx dg_hat(cplx k, const Genus1Params& gp, const SpectralConstants& c)
{
    if (k == 0.0) throw SingularityError("dg_hat has a pole at k = 0");
    return dg_hat_prefactor(k, gp) * band_radical(k, gp, c);
}

namespace {

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

// does segment p->q meet segment a->b at a point other than `allowed`?
bool segments_meet(cplx p, cplx q, cplx a, cplx b, const cplx* allowed)
{
    const cplx r = q - p, s = b - a;
    const double den = cross(r, s);
    const double scale = std::abs(r) * std::abs(s);
    if (std::abs(den) <= 1e-14 * scale) {
        // parallel: only collinear overlap matters
        if (std::abs(cross(a - p, r)) > 1e-12 * std::abs(r) * (std::abs(a - p) + 1.0)) return false;
        const double rr = std::norm(r);
        double t0 = ((a - p) * std::conj(r)).real() / rr, t1 = ((b - p) * std::conj(r)).real() / rr;
        if (t0 > t1) std::swap(t0, t1);
        return t1 >= 0.0 && t0 <= 1.0 && !(allowed && std::abs(p - *allowed) < 1e-14 && t1 <= 1e-12);
    }
    const double t = cross(a - p, s) / den, u = cross(a - p, r) / den;
    if (t < -1e-12 || t > 1.0 + 1e-12 || u < -1e-12 || u > 1.0 + 1e-12) return false;
    const cplx hit = p + t * r;
    return !allowed || std::abs(hit - *allowed) > 1e-12 * (1.0 + std::abs(*allowed));
}

double segment_distance_to_origin(cplx p, cplx q)
{
    const cplx r = q - p;
    const double rr = std::norm(r);
    double t = rr > 0.0 ? std::clamp(-(p * std::conj(r)).real() / rr, 0.0, 1.0) : 0.0;
    return std::abs(p + t * r);
}

}  // namespace

bool path_admissible(const std::vector<cplx>& pts, const Genus1Params& gp, const SpectralConstants& c,
                     bool avoid_origin)
{
    const cplx E = c.E, Eb = std::conj(c.E), d = gp.d, db = std::conj(gp.d);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const cplx p = pts[i], q = pts[i + 1];
        if (avoid_origin && segment_distance_to_origin(p, q) < 1e-6 * c.absE) return false;
        const cplx* allow_upper = (i == 0 && std::abs(p - E) < 1e-14) ? &E : nullptr;
        const cplx* allow_lower = (i + 2 == pts.size() && std::abs(q - Eb) < 1e-14) ? &Eb : nullptr;
        if (segments_meet(p, q, E, d, allow_upper)) return false;
        if (segments_meet(p, q, Eb, db, allow_lower)) return false;
    }
    return true;
}

cplx abel_half_integral(const Genus1Params& gp, const SpectralConstants& c, double s0, const QuadOptions& q)
{
    auto f = [&](const SegmentPoint& p) { return dg_hat(p, gp, c); };
    return integrate_segment_at(f, c.E, cplx(s0, 0.0), EndSing::Start, q);
}

cplx abel_condition_via(const Genus1Params& gp, const SpectralConstants& c, const std::vector<cplx>& waypoints,
                        const QuadOptions& q)
{
    std::vector<cplx> pts;
    pts.push_back(c.E);
    pts.insert(pts.end(), waypoints.begin(), waypoints.end());
    pts.push_back(std::conj(c.E));
    if (!path_admissible(pts, gp, c)) throw DomainError("Abel path crosses the band or the pole");
    auto f = [&](const SegmentPoint& p) { return dg_hat(p, gp, c); };
    return integrate_path_at(f, pts, true, true, q);
}

cplx abel_condition(const Genus1Params& gp, const SpectralConstants& c, AbelPath path, const QuadOptions& q)
{
    const double s0 = path == AbelPath::Canonical ? 0.5 * gp.lambda_plus : 2.0 * gp.lambda_plus;
    return abel_condition_via(gp, c, {cplx(s0, 0.0)}, q);
}

std::vector<cplx> plan_path(cplx k, const Genus1Params& gp, const SpectralConstants& c)
{
    const cplx E = c.E;
    const cplx s0(0.5 * gp.lambda_plus, 0.0);
    const double H = 1.5 * std::max({E.imag(), gp.d.imag(), std::abs(k.imag())}) + c.absE;
    const double xl = std::min({gp.d.real(), k.real(), gp.lambda_minus, E.real()}) - c.absE;
    const double xr = std::max({k.real(), gp.lambda_plus, E.real()}) + c.absE;
    const std::vector<std::vector<cplx>> candidates = {
        {E, s0, k},
        {E, cplx(E.real(), H), cplx(k.real(), H), k},
        {E, cplx(E.real(), H), cplx(xl, H), cplx(xl, k.imag()), k},
        {E, s0, cplx(s0.real(), -H), cplx(k.real(), -H), k},
        {E, s0, cplx(s0.real(), -H), cplx(xl, -H), cplx(xl, k.imag()), k},
        {E, cplx(E.real(), H), cplx(xr, H), cplx(xr, k.imag()), k},
    };
    for (const auto& cand : candidates)
        if (path_admissible(cand, gp, c)) return cand;
    return {};
}

cplx g_hat(cplx k, const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q)
{
    if (k == c.E) return 0.0;
    if (on_band_chord(k, gp, c)) throw SingularityError("g_hat evaluated on the band");
    const std::vector<cplx> pts = plan_path(k, gp, c);
    if (pts.empty()) throw DomainError("no admissible path to the requested point");
    const double near = 1e-3 * c.absE;
    const bool sing_end = std::abs(k - std::conj(c.E)) < near;
    auto f = [&](const SegmentPoint& p) { return dg_hat(p, gp, c); };
    return integrate_path_at(f, pts, true, sing_end, q);
}

namespace {

struct Tracer {
    const Genus1Params& gp;
    const SpectralConstants& c;

    cplx radical_near(cplx k, cplx ref) const
    {
        const cplx r = std::sqrt((k - gp.d) / (k - c.E)) * std::sqrt((k - std::conj(gp.d)) / (k - std::conj(c.E)));
        return std::abs(r - ref) <= std::abs(r + ref) ? r : -r;
    }

    // GK15 over a short segment with the radical continued node by node from ref_a
    cplx increment(cplx a, cplx b, cplx ref_a, cplx& ref_b) const
    {
        static const double xk[15] = {-0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
                                      -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
                                      0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
                                      0.864864423359769,  0.949107912342759,  0.991455371120813};
        static const double wk[15] = {0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
                                      0.169004726639268, 0.190350578064785, 0.204432940075299, 0.209482141084728,
                                      0.204432940075299, 0.190350578064785, 0.169004726639268, 0.140653259715525,
                                      0.104790010322250, 0.063092092629979, 0.022935322010529};
        const cplx mid = 0.5 * (a + b), half = 0.5 * (b - a);
        cplx ref = ref_a, sum = 0.0;
        for (int j = 0; j < 15; ++j) {
            const cplx k = mid + xk[j] * half;
            ref = radical_near(k, ref);
            sum += wk[j] * dg_hat_prefactor(k, gp) * ref;
        }
        ref_b = radical_near(b, ref);
        return sum * half;
    }

    // Newton steps transverse to the level curve Im G = target
    void correct(cplx from, cplx ref_from, cplx g_from, cplx& k, cplx& ref_k, cplx& g_k, double target) const
    {
        for (int it = 0; it < 6; ++it) {
            g_k = g_from + increment(from, k, ref_from, ref_k);
            const double res = g_k.imag() - target;
            const cplx gp1 = dg_hat_prefactor(k, gp) * ref_k;
            if (std::abs(res) < 1e-14 || std::abs(gp1) == 0.0) break;
            k -= res * cplx(0.0, 1.0) * std::conj(gp1) / std::norm(gp1);
        }
    }

    // integral of dG from `center` to k; the radical is continued inward from its value ref_k at k
    cplx from_center(cplx center, cplx k, cplx ref_k) const
    {
        static const double xk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
                                     0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
        static const double wk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
                                     0.169004726639268, 0.190350578064785, 0.204432940075299, 0.209482141084728};
        // z = center + u^2 (k - center) smooths the square-root zero at a branch point
        cplx ref = ref_k, sum = 0.0;
        for (int j = 0; j < 15; ++j) {
            const double x = j < 8 ? xk[j] : -xk[14 - j];
            const double w = j < 8 ? wk[j] : wk[14 - j];
            const double u = 0.5 * (1.0 + x);
            const cplx z = center + u * u * (k - center);
            ref = radical_near(z, ref);
            sum += w * dg_hat_prefactor(z, gp) * ref * (2.0 * u);
        }
        return 0.5 * sum * (k - center);
    }

    struct Trace {
        std::vector<cplx> nodes, gvals;
        cplx last_ref;
    };

    // follow Im G = target from k0 with initial direction dir until within `finish` of `end`
    Trace follow(cplx k0, cplx ref0, cplx g0, cplx dir, double target, cplx end, double step, double finish) const
    {
        Trace tr;
        tr.nodes.push_back(k0);
        tr.gvals.push_back(g0);
        cplx k = k0, ref = ref0, g = g0, prev = dir / std::abs(dir);
        const double budget = 100.0 * (std::abs(k0 - end) + c.absE);
        double length = 0.0;
        while (true) {
            const double dist = std::abs(k - end);
            if (dist < finish) break;
            if (length > budget) throw TracingError("band trace wandered away from its endpoint");
            const double h = std::min(step, 0.5 * dist);
            if (h < 1e-15) throw TracingError("band tracing stalled");
            const cplx slope = dg_hat_prefactor(k, gp) * ref;
            cplx t = std::abs(slope) > 0.0 ? std::conj(slope) / std::abs(slope) : prev;
            if ((t * std::conj(prev)).real() < 0.0) t = -t;
            cplx kn = k + h * t, refn, gn;
            correct(k, ref, g, kn, refn, gn, target);
            prev = (kn - k) / std::abs(kn - k);
            length += std::abs(kn - k);
            k = kn;
            ref = refn;
            g = gn;
            tr.nodes.push_back(k);
            tr.gvals.push_back(g);
        }
        tr.last_ref = ref;
        return tr;
    }

    // Close the trace onto `center` (where Im G vanishes) on circles of halving radius.
    struct CirclePoint {
        cplx k, ref, in;
    };

    // point at distance rho from center on the level curve Im G = Im G(center), near angle theta
    CirclePoint on_circle(cplx center, double rho, double& theta, cplx ref) const
    {
        CirclePoint p{};
        double f = 0.0;
        for (int it = 0; it < 40; ++it) {
            p.k = center + std::polar(rho, theta);
            p.ref = radical_near(p.k, ref);
            p.in = from_center(center, p.k, p.ref);
            f = p.in.imag();
            const double df = (dg_hat_prefactor(p.k, gp) * p.ref * cplx(0.0, 1.0) * (p.k - center)).imag();
            if (std::abs(f) <= 1e-14 * std::abs(p.in) || df == 0.0) break;
            const double dt = std::clamp(-f / df, -0.3, 0.3);
            theta += dt;
            if (std::abs(dt) < 1e-12) break;
        }
        // rounding in k - center limits the attainable residual at small radii
        if (!(std::abs(f) <= 1e-6 * std::abs(p.in))) throw TracingError("band trace lost the level curve near its endpoint");
        return p;
    }

    // Close the trace onto `center` on circles of halving radius; measuring Im G from center
    // removes the drift accumulated along the trace.
    void finish(Trace& tr, cplx center) const
    {
        cplx k = tr.nodes.back(), ref = tr.last_ref;
        const cplx g_center = tr.gvals.back() - from_center(center, k, ref);
        double rho = std::abs(k - center);
        double theta = std::arg(k - center);
        const double floor = 5e-9 * c.absE;
        while (rho > floor) {
            rho *= 0.5;
            const CirclePoint p = on_circle(center, rho, theta, ref);
            ref = p.ref;
            tr.nodes.push_back(p.k);
            tr.gvals.push_back(g_center + p.in);
        }
        tr.last_ref = ref;
    }

    // first direction at a square-root endpoint a of the band (dg ~ (k-a)^(-1/2))
    cplx start_direction(cplx a, cplx b) const
    {
        const cplx pre = dg_hat_prefactor(a, gp);
        const cplx c0sq = pre * pre * (a - b) * (a - std::conj(b)) / (a - std::conj(a));
        return std::conj(c0sq) / std::abs(c0sq);
    }

    // three rays of Im G = const at the simple zero b of the radical
    std::vector<cplx> rays_at_zero(cplx b, cplx a) const
    {
        const cplx pre = dg_hat_prefactor(b, gp);
        const cplx t0sq = pre * pre * (b - std::conj(b)) / ((b - a) * (b - std::conj(a)));
        std::vector<cplx> out;
        for (int m = 0; m < 3; ++m) out.push_back(std::polar(1.0, (-std::arg(t0sq) + 2.0 * kPi * m) / 3.0));
        return out;
    }

    void trace_half(bool upper, double step, const QuadOptions& q, std::vector<cplx>& gd, std::vector<cplx>& gl,
                    std::vector<cplx>& gvd, std::vector<cplx>& gvl, double& miss_d, double& miss_l) const
    {
        const cplx a = upper ? c.E : std::conj(c.E);
        const cplx b = upper ? gp.d : std::conj(gp.d);
        const cplx u0 = start_direction(a, b);
        const double h0 = std::min(step, 0.25 * std::abs(b - a));
        double th1 = std::arg(u0);
        const cplx r0 = radical_near(a + h0 * u0, std::sqrt((a + h0 * u0 - gp.d) / (a + h0 * u0 - c.E)) *
                                                       std::sqrt((a + h0 * u0 - std::conj(gp.d)) / (a + h0 * u0 - std::conj(c.E))));
        const CirclePoint p1 = on_circle(a, h0, th1, r0);
        const cplx k1 = p1.k, r1 = p1.ref, g1 = p1.in;
        Trace td = follow(k1, r1, g1, u0, 0.0, b, step, 4.0 * h0);
        finish(td, b);
        gd.assign(1, a);
        gd.insert(gd.end(), td.nodes.begin(), td.nodes.end());
        gvd.assign(1, cplx(0.0));
        gvd.insert(gvd.end(), td.gvals.begin(), td.gvals.end());
        miss_d = std::abs(gd.back() - b);

        // leave b along the ray that is neither the arrival direction nor pointing away from lambda_-
        const cplx back = (gd[gd.size() - 2] - b) / std::abs(gd[gd.size() - 2] - b);
        auto rays = rays_at_zero(b, a);
        std::sort(rays.begin(), rays.end(), [&](cplx x, cplx y) { return std::abs(x - back) > std::abs(y - back); });
        rays.pop_back();
        const cplx toward = (gp.lambda_minus - b) / std::abs(gp.lambda_minus - b);
        const cplx dir = std::abs(rays[0] - toward) < std::abs(rays[1] - toward) ? rays[0] : rays[1];
        double th2 = std::arg(dir);
        const cplx k2g = b + h0 * dir;
        const cplx r2g = std::sqrt((k2g - gp.d) / (k2g - c.E)) * std::sqrt((k2g - std::conj(gp.d)) / (k2g - std::conj(c.E)));
        const CirclePoint p2 = on_circle(b, h0, th2, r2g);
        // value at b on the principal sheet used by g_hat
        const cplx gb = gvd.back();
        const cplx g2p = g_hat(p2.k, gp, c, q);
        const cplx g_b = std::abs(gb + p2.in - g2p) <= std::abs(-gb + p2.in - g2p) ? gb : -gb;
        const cplx k2 = p2.k, r2s = p2.ref, g2s = g_b + p2.in;
        Trace tl = follow(k2, r2s, g2s, dir, 0.0, cplx(gp.lambda_minus, 0.0), step, 4.0 * h0);
        finish(tl, cplx(gp.lambda_minus, 0.0));
        gl.assign(1, b);
        gl.insert(gl.end(), tl.nodes.begin(), tl.nodes.end());
        gvl.assign(1, gvd.back());
        gvl.insert(gvl.end(), tl.gvals.begin(), tl.gvals.end());
        miss_l = std::abs(gl.back() - gp.lambda_minus);
    }
};

}  // namespace

BandContours trace_band(const Genus1Params& gp, const SpectralConstants& c, double step, const QuadOptions& q)
{
    Tracer tr{gp, c};
    BandContours bc;
    bc.step = step;
    std::vector<cplx> gvd_low, gvl_low;
    double md_low = 0.0, ml_low = 0.0;
    tr.trace_half(true, step, q, bc.gamma_d, bc.gamma_lambda, bc.g_on_gamma_d, bc.g_on_gamma_lambda, bc.end_miss_d,
                  bc.end_miss_lambda);
    tr.trace_half(false, step, q, bc.gamma_d_bar, bc.gamma_lambda_bar, gvd_low, gvl_low, md_low, ml_low);
    bc.end_miss_d = std::max(bc.end_miss_d, md_low);
    bc.end_miss_lambda = std::max(bc.end_miss_lambda, ml_low);
    if (bc.end_miss_d > 1e-6 || bc.end_miss_lambda > 1e-6)
        throw TracingError("band trace missed its endpoint by " + std::to_string(std::max(bc.end_miss_d, bc.end_miss_lambda)));

    // independent spot check of Im g_hat on the traced nodes
    double worst = 0.0;
    auto check = [&](const std::vector<cplx>& pts) {
        const std::size_t stride = std::max<std::size_t>(1, pts.size() / 40);
        for (std::size_t i = 1; i + 1 < pts.size(); i += stride) {
            if (on_band_chord(pts[i], gp, c, 1e-10)) continue;
            worst = std::max(worst, std::abs(g_hat(pts[i], gp, c, q).imag()));
        }
    };
    check(bc.gamma_d);
    check(bc.gamma_lambda);
    check(bc.gamma_d_bar);
    check(bc.gamma_lambda_bar);
    bc.max_im_g = worst;

    double mism = 0.0;
    const std::size_t nd = std::min(bc.gamma_d.size(), bc.gamma_d_bar.size());
    for (std::size_t i = 0; i < nd; ++i) mism = std::max(mism, std::abs(bc.gamma_d_bar[i] - std::conj(bc.gamma_d[i])));
    const std::size_t nl = std::min(bc.gamma_lambda.size(), bc.gamma_lambda_bar.size());
    for (std::size_t i = 0; i < nl; ++i)
        mism = std::max(mism, std::abs(bc.gamma_lambda_bar[i] - std::conj(bc.gamma_lambda[i])));
    if (bc.gamma_d.size() != bc.gamma_d_bar.size() || bc.gamma_lambda.size() != bc.gamma_lambda_bar.size())
        mism = std::numeric_limits<double>::infinity();
    bc.conj_mismatch = mism;
    return bc;
}

int phase_sign(cplx k, const PhaseContext& ctx, const SpectralConstants& c, const QuadOptions& q)
{
    double v = 0.0;
    try {
        switch (ctx.phase) {
        case PhaseSelector::Theta: v = theta_phase(k, ctx.xi).imag(); break;
        case PhaseSelector::G0: v = g_genus0(k, ctx.xi, c).imag(); break;
        case PhaseSelector::GHat: v = g_hat(k, ctx.gp, c, q).imag(); break;
        }
    } catch (const Error&) {
        return 0;
    }
    if (std::abs(v) <= 1e-12) return 0;
    return v > 0.0 ? 1 : -1;
}

SignMap sign_map(const PhaseContext& ctx, const SpectralConstants& c, const SignWindow& window, int n,
                 const QuadOptions& q)
{
    if (n < 2) throw DomainError("sign_map needs n >= 2");
    SignMap m;
    m.phase = ctx.phase;
    m.window = window;
    m.n = n;
    m.points.resize(static_cast<std::size_t>(n) * n);
    m.signs.resize(m.points.size());
    const bool symmetric = window.im_min == -window.im_max;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double re = window.re_min + (window.re_max - window.re_min) * i / (n - 1);
            double im = window.im_min + (window.im_max - window.im_min) * j / (n - 1);
            if (symmetric && 2 * j >= n - 1) im = -(window.im_min + (window.im_max - window.im_min) * (n - 1 - j) / (n - 1));
            if (symmetric && 2 * j == n - 1) im = 0.0;
            m.points[static_cast<std::size_t>(j) * n + i] = cplx(re, im);
        }
    }
    for (std::size_t p = 0; p < m.points.size(); ++p) m.signs[p] = phase_sign(m.points[p], ctx, c, q);
    return m;
}

}  // namespace srs
