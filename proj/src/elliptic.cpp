#include "srs/elliptic.hpp"

#include <algorithm>
#include <cmath>

namespace srs {

namespace {

constexpr cplx I(0.0, 1.0);

cplx chord_point(double s, bool upper, const Genus1Params& gp, const SpectralConstants& c)
{
    const cplx a = upper ? c.E : std::conj(c.E);
    const cplx b = upper ? gp.d : std::conj(gp.d);
    return a + s * (b - a);
}

// w on the chord a -> b, sign = +1 on the left bank of a -> b; sc = 1 - s
cplx w_on_chord(double s, double sc, bool upper, double sign, const Genus1Params& gp, const SpectralConstants& c)
{
    const cplx a = upper ? c.E : std::conj(c.E);
    const cplx b = upper ? gp.d : std::conj(gp.d);
    const cplx k = a + s * (b - a);
    // (k - a) * i sqrt((1-s)/s) written without the 0 * inf at s -> 0
    const cplx own = sign * I * (b - a) * std::sqrt(std::max(0.0, s * sc));
    return own * (k - std::conj(a)) * std::sqrt((k - std::conj(b)) / (k - std::conj(a)));
}

void require_real(cplx v, const char* what)
{
    if (!(std::abs(v.imag()) <= kRealityTol))
        throw RealityError(std::string(what) + " has imaginary part " + std::to_string(v.imag()));
}

double far_radius(const Genus1Params& gp, const SpectralConstants& c)
{
    return std::max({4.0 * c.absE, 2.0 * gp.lambda_plus, 2.0 * std::abs(gp.lambda_minus), 2.0 * std::abs(gp.d)});
}

}  // namespace

cplx w_radical(cplx k, const Genus1Params& gp, const SpectralConstants& c)
{
    return (k - c.E) * (k - std::conj(c.E)) * band_radical(k, gp, c);
}

cplx w_radical(const SegmentPoint& p, const Genus1Params& gp, const SpectralConstants& c)
{
    return p.minus(c.E) * p.minus(std::conj(c.E)) * band_radical(p, gp, c);
}

cplx w_plus_on_chord(double s, bool upper, const Genus1Params& gp, const SpectralConstants& c)
{
    // + is the left of E -> d, and the left of conj d -> conj E, i.e. the right of conj E -> conj d
    return w_on_chord(s, 1.0 - s, upper, upper ? 1.0 : -1.0, gp, c);
}

cplx w_minus_on_chord(double s, bool upper, const Genus1Params& gp, const SpectralConstants& c)
{
    return -w_plus_on_chord(s, upper, gp, c);
}

namespace {

// integral over the + bank of the upper chord E -> d (upper) or of the lower chord conj d -> conj E
template <class F>
cplx chord_integral(F f, bool upper, const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q)
{
    const cplx a = upper ? c.E : std::conj(c.E);
    const cplx b = upper ? gp.d : std::conj(gp.d);
    const cplx v = integrate_unit_pair(
        [&](double s, double sc) -> cplx {
            const cplx k = a + s * (b - a);
            return f(k, w_on_chord(s, sc, upper, upper ? 1.0 : -1.0, gp, c), s);
        },
        EndSing::Both, q);
    // the lower cut is oriented from conj d to conj E
    return upper ? v * (b - a) : -v * (b - a);
}

cplx vertical_period(cplx num_coef2, cplx num_coef1, cplx num_coef0, const Genus1Params& gp, const SpectralConstants& c,
                     const QuadOptions& q)
{
    auto f = [&](const SegmentPoint& p) {
        return (num_coef2 * p.z * p.z + num_coef1 * p.z + num_coef0) / w_radical(p, gp, c);
    };
    return integrate_segment_at(f, std::conj(gp.d), gp.d, EndSing::Both, q);
}

}  // namespace

Periods periods_and_tau(const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q)
{
    Periods p;
    p.period_a = vertical_period(0.0, 0.0, 1.0, gp, c, q);
    p.period_EtoD = chord_integral([](cplx, cplx w, double) { return 1.0 / w; }, true, gp, c, q);
    if (std::abs(p.period_a) == 0.0) throw DegenerateError("vanishing period");
    p.tau = p.period_EtoD / p.period_a;
    if (!(p.tau.imag() > 0.0)) throw DegenerateError("Im tau is not positive");
    return p;
}

cplx abel_integral(cplx k, const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q)
{
    if (k == c.E) return 0.0;
    const cplx s0(0.5 * gp.lambda_plus, 0.0);
    std::vector<std::vector<cplx>> candidates = {{c.E, k}, {c.E, s0, k}};
    candidates.push_back(plan_path(k, gp, c));
    const double near = 1e-12 * c.absE;
    const bool sing_end = std::abs(k - std::conj(c.E)) < near || std::abs(k - gp.d) < near ||
                          std::abs(k - std::conj(gp.d)) < near;
    auto f = [&](const SegmentPoint& p) { return 1.0 / w_radical(p, gp, c); };
    for (const auto& pts : candidates) {
        if (pts.size() < 2 || !path_admissible(pts, gp, c, false)) continue;
        return integrate_path_at(f, pts, true, sing_end, q);
    }
    throw DomainError("no admissible path for the Abel map");
}

cplx abel_integral_to_infinity(const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q)
{
    const double R = far_radius(gp, c);
    const cplx s0(0.5 * gp.lambda_plus, 0.0);
    auto f = [&](const SegmentPoint& p) { return 1.0 / w_radical(p, gp, c); };
    const cplx body = integrate_path_at(f, {c.E, s0, cplx(R, 0.0)}, true, false, q);
    const cplx tail = integrate_tail([&](double x) { return 1.0 / w_radical(cplx(x, 0.0), gp, c); }, R, q);
    return body + tail;
}

cplx theta3(cplx z, cplx tau)
{
    if (!(tau.imag() > 0.0)) throw DomainError("theta3 needs Im tau > 0");
    const double n = std::round(z.imag() / tau.imag());
    cplx zr = z - n * tau;
    zr -= std::round(zr.real());
    const int M = static_cast<int>(std::ceil(std::sqrt(40.0 / (kPi * tau.imag())))) + 2;
    cplx sum = 1.0;
    for (int m = 1; m <= M; ++m) {
        const cplx base = std::exp(I * kPi * tau * double(m) * double(m));
        sum += base * (std::exp(2.0 * I * kPi * double(m) * zr) + std::exp(-2.0 * I * kPi * double(m) * zr));
    }
    // theta3(z + n tau) = exp(-i pi tau n^2 - 2 i pi n z) theta3(z)
    return std::exp(-I * kPi * tau * n * n - 2.0 * I * kPi * n * zr) * sum;
}

cplx log_delta(cplx k, const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q)
{
    std::vector<double> pts = {gp.lambda_minus};
    const double jump = c.absE * c.absE / c.E1();  // where the arc meets the real axis
    if (jump > gp.lambda_minus && jump < gp.lambda_plus) pts.push_back(jump);
    pts.push_back(gp.lambda_plus);
    cplx total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        total += integrate(
            [&](double s) -> cplx { return log_one_minus_rho2(s, c) / (s - k); }, pts[i], pts[i + 1], q);
    return total / (2.0 * kPi * I);
}

cplx delta_cauchy(cplx k, const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q)
{
    if (k.imag() == 0.0 && k.real() >= gp.lambda_minus && k.real() <= gp.lambda_plus)
        throw SingularityError("delta evaluated on its jump segment");
    return std::exp(log_delta(k, gp, c, q));
}

cplx zeta_inf_along(const Genus1Params& gp, const SpectralConstants& c, double e1, double e0, bool negative_ray,
                    const QuadOptions& q)
{
    auto f = [&](const SegmentPoint& p) { return (p.z * p.z - e1 * p.z + e0) / w_radical(p, gp, c); };
    // f - 1 regrouped so that the O(k) pieces cancel exactly
    auto f1 = [&](double x) {
        const cplx k(x, 0.0);
        const cplx qe = (k - c.E) * (k - std::conj(c.E));
        const cplx top = (e0 - c.absE * c.absE) + (2.0 * c.E1() - e1) * k - qe * band_radical_minus_one(k, gp, c);
        return top / w_radical(k, gp, c);
    };
    const double R = far_radius(gp, c);
    if (!negative_ray) {
        const cplx s0(0.5 * gp.lambda_plus, 0.0);
        const cplx body = integrate_path_at(f, {c.E, s0, cplx(R, 0.0)}, true, false, q);
        return body - R + integrate_tail(f1, R, q);
    }
    const double H = 1.5 * std::max(c.E2(), gp.d.imag()) + c.absE;
    const cplx body = integrate_path_at(f, {c.E, cplx(c.E1(), H), cplx(-R, H), cplx(-R, 0.0)}, true, false, q);
    return body + R - integrate_tail(f1, -R, q);
}

SecondKind e0_and_zeta_inf(const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q)
{
    SecondKind sk;
    sk.e1 = (c.E + gp.d).real();
    const cplx Ka = vertical_period(0.0, 0.0, 1.0, gp, c, q);
    const cplx K2 = vertical_period(1.0, -sk.e1, 0.0, gp, c, q);
    if (std::abs(Ka) < 1e-300) throw DegenerateError("vanishing period fixes no e0");
    // K2 + e0 Ka = 0; both are imaginary up to rounding
    sk.e0 = -(K2 * std::conj(Ka)).real() / std::norm(Ka);
    sk.zeta_inf = zeta_inf_along(gp, c, sk.e1, sk.e0, false, q);
    return sk;
}

GHatLimits g_hat_inf_and_g_hat_0(const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q)
{
    GHatLimits out;
    const double xi = gp.xi, inv = 1.0 / (4.0 * xi * xi);
    const double R = far_radius(gp, c);
    const cplx s0(0.5 * gp.lambda_plus, 0.0);
    auto dg = [&](const SegmentPoint& p) { return dg_hat(p, gp, c); };
    const cplx up = integrate_path_at(dg, {c.E, s0, cplx(R, 0.0)}, true, false, q) - (R - c.E) * inv;
    const cplx low = integrate_path_at(dg, {std::conj(c.E), s0, cplx(R, 0.0)}, true, false, q) - (R - std::conj(c.E)) * inv;
    const double sum = gp.lambda_minus + gp.lambda_plus, prod = gp.lambda_minus * gp.lambda_plus;
    auto excess = [&](double x) {
        const cplx k(x, 0.0);
        return (prod - sum * k + (k - gp.lambda_minus) * (k - gp.lambda_plus) * band_radical_minus_one(k, gp, c)) *
               inv / (k * k);
    };
    const cplx tail = integrate_tail(excess, R, q);
    out.at_infinity = 0.5 * (up + low) + tail - c.params.l / (8.0 * c.params.omega * xi * xi);

    // g_hat - theta is analytic near 0: use the mean over a small circle
    double r1 = 0.25 * std::min({std::abs(gp.lambda_minus), gp.lambda_plus, c.absE, std::abs(gp.d.real())});
    const int n = 64;
    cplx mean = 0.0;
    for (int j = 0; j < n; ++j) {
        const cplx k = std::polar(r1, 2.0 * kPi * (j + 0.5) / n);
        mean += g_hat(k, gp, c, q) - theta_phase(k, xi);
    }
    out.at_zero = mean / double(n);
    return out;
}

cplx g_hat_zero_radial(const Genus1Params& gp, const SpectralConstants& c, double angle, const QuadOptions& q)
{
    const double xi = gp.xi;
    const double r1 = 0.25 * std::min({std::abs(gp.lambda_minus), gp.lambda_plus, c.absE, std::abs(gp.d.real())});
    const cplx k1 = std::polar(r1, angle);
    auto regular = [&](cplx z) { return dg_hat(z, gp, c) - (1.0 / (4.0 * xi * xi) - 1.0 / (4.0 * z * z)); };
    const cplx inner = integrate_segment(regular, cplx(0.0), k1, EndSing::None, q);
    return g_hat(k1, gp, c, q) - theta_phase(k1, xi) - inner;
}

namespace {

// log X continued analytically along the upper chord from the outer bank of the arc at E
struct LogXOnChord {
    cplx shift;  // i pi n fixing the branch
    const Genus1Params& gp;
    const SpectralConstants& c;

    LogXOnChord(const Genus1Params& g, const SpectralConstants& cc) : gp(g), c(cc)
    {
        const double s = 1e-6;
        const cplx tc = (gp.d - c.E) / std::abs(gp.d - c.E);
        const double centre = c.absE * c.absE / (2.0 * c.E1());
        const cplx ta = I * (c.E - centre) / std::abs(c.E - centre);  // arc tangent at E, towards the arc
        const double eps = s * std::abs(gp.d - c.E);
        // exterior value next to the arc, rotated the short way onto the chord direction
        const cplx xa = big_X(c.E + eps * ta, c);
        const cplx xc = xa * std::exp(0.5 * I * std::arg(tc / ta));
        const cplx base = raw(s);
        const double n = std::round((std::log(xc) - base).imag() / kPi);
        shift = I * kPi * n;
    }
    cplx raw(double s) const
    {
        const cplx k = c.E + s * (gp.d - c.E);
        return 0.5 * (std::log(s) + std::log(gp.d - c.E) + std::log(k - std::conj(c.E)));
    }
    cplx operator()(double s) const { return raw(s) + shift; }
};

}  // namespace

cplx h_on_cut(cplx k, bool upper, const SpectralConstants& c)
{
    const cplx f = jump_f(k, c);
    return upper ? -I * f : I / f;
}

namespace {

// log[h delta^-2] on the + bank at parameter s; log(-1) is taken as +i pi on both cuts
cplx log_h_delta(double s, bool upper, const LogXOnChord& lx, const Genus1Params& gp, const SpectralConstants& c,
                 const QuadOptions& q)
{
    const cplx k = chord_point(s, upper, gp, c);
    const cplx ld = log_delta(k, gp, c, q);
    const cplx lxv = upper ? lx(s) : std::conj(lx(s));
    const cplx l2 = std::log(2.0 / c.E2());
    // h = -2X/E2 on the upper cut, -E2/(2X) on the lower one
    return upper ? I * kPi + l2 + lxv - 2.0 * ld : I * kPi - l2 - lxv - 2.0 * ld;
}

}  // namespace

BandIntegrals band_integrals(const Genus1Params& gp, const SpectralConstants& c, const SecondKind& sk,
                             const QuadOptions& q)
{
    BandIntegrals b;
    // k - a = s (b - a) exactly on the chord a -> b
    auto dg = [&](bool upper) {
        const cplx a = upper ? c.E : std::conj(c.E);
        const cplx b = upper ? gp.d : std::conj(gp.d);
        return [&gp, a, b](cplx k, cplx w, double s) {
            return dg_hat_prefactor(k, gp) * w / (s * (b - a) * (k - std::conj(a)));
        };
    };
    // B_g runs E -> d and conj E -> conj d; the lower cut integral comes back reversed
    const cplx up = chord_integral(dg(true), true, gp, c, q);
    const cplx low = -chord_integral(dg(false), false, gp, c, q);
    b.B_g = 0.5 * (up + low);
    auto second = [&](cplx k, cplx w, double) { return (k * k - sk.e1 * k + sk.e0) / w; };
    b.B_zeta = 2.0 * chord_integral(second, true, gp, c, q);
    const LogXOnChord lx(gp, c);
    const cplx d_up = chord_integral([&](cplx, cplx w, double s) { return log_h_delta(s, true, lx, gp, c, q) / w; },
                                     true, gp, c, q);
    const cplx d_low = chord_integral(
        [&](cplx, cplx w, double s) { return log_h_delta(s, false, lx, gp, c, q) / w; }, false, gp, c, q);
    b.Delta = (d_up + d_low) / (2.0 * kPi);
    return b;
}

cplx phi_hat_integral(const Genus1Params& gp, const SpectralConstants& c, const SecondKind& sk, const QuadOptions& q)
{
    const LogXOnChord lx(gp, c);
    const cplx shift = sk.e1 + sk.zeta_inf;
    auto f = [&](bool upper) {
        return chord_integral(
            [&](cplx k, cplx w, double s) { return (k - shift) * log_h_delta(s, upper, lx, gp, c, q) / w; }, upper,
            gp, c, q);
    };
    return (f(true) + f(false)) / (2.0 * kPi);
}

EllipticFrame build_elliptic_frame(double xi, const SpectralConstants& c, const QuadOptions& q)
{
    const double b1 = c.xi_disp(), b2 = c.xi0;
    if (std::abs(xi - b1) <= kFrameBorderGuard * b1 || std::abs(xi - b2) <= kFrameBorderGuard * b2)
        throw BorderError("elliptic frame refused this close to a region border");
    return build_elliptic_frame(solve_genus1(xi, c, q), c, q);
}

EllipticFrame build_elliptic_frame(const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q)
{
    EllipticFrame f;
    f.gp = gp;
    const Periods p = periods_and_tau(gp, c, q);
    f.tau = p.tau;
    f.period_a = p.period_a;
    f.period_EtoD = p.period_EtoD;
    const SecondKind sk = e0_and_zeta_inf(gp, c, q);
    f.e1 = sk.e1;
    f.e0 = sk.e0;
    f.zeta_inf = sk.zeta_inf;
    const double E1 = c.E1(), E2 = c.E2(), d1 = gp.d.real(), d2 = gp.d.imag();
    f.E0 = (E1 * d2 + E2 * d1) / (E2 + d2);

    const BandIntegrals bi = band_integrals(gp, c, sk, q);
    f.im_B_g = std::abs(bi.B_g.imag());
    f.im_B_zeta = std::abs(bi.B_zeta.imag());
    f.im_Delta = std::abs(bi.Delta.imag());
    require_real(bi.B_g, "B_g");
    require_real(bi.B_zeta, "B_zeta");
    require_real(bi.Delta, "Delta");
    f.B_g = bi.B_g.real();
    f.B_zeta = bi.B_zeta.real();
    f.Delta = bi.Delta.real();

    const GHatLimits gl = g_hat_inf_and_g_hat_0(gp, c, q);
    f.im_g_hat_inf = std::abs(gl.at_infinity.imag());
    f.im_g_hat_0 = std::abs(gl.at_zero.imag());
    require_real(gl.at_infinity, "g_hat at infinity");
    f.g_hat_inf = gl.at_infinity.real();
    f.g_hat_0 = gl.at_zero.real();

    const cplx ph = phi_hat_integral(gp, c, sk, q);
    f.im_phi_hat = std::abs(ph.imag());
    require_real(ph, "phi_hat");
    f.phi_hat = ph.real();

    const cplx norm = 2.0 * f.period_a;
    f.U_E0 = abel_integral(cplx(f.E0, 0.0), gp, c, q) / norm;
    f.U_zero = abel_integral(cplx(0.0), gp, c, q) / norm;
    f.U_inf = abel_integral_to_infinity(gp, c, q) / norm;
    return f;
}

cplx U_map(cplx k, const EllipticFrame& f, const SpectralConstants& c, const QuadOptions& q)
{
    if (std::abs(k - f.gp.d) < 1e-14 * c.absE) return 0.5 * f.tau;
    return abel_integral(k, f.gp, c, q) / (2.0 * f.period_a);
}

}  // namespace srs
