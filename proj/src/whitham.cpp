#include "srs/whitham.hpp"

#include <algorithm>
#include <cmath>

#include "srs/gfun.hpp"
#include "srs/roots.hpp"

namespace srs {

namespace {

double newton_polish(double k, double a, double b, double cc)
{
    for (int i = 0; i < 3; ++i) {
        const double f = ((k + a) * k + b) * k + cc;
        const double df = (3.0 * k + 2.0 * a) * k + b;
        if (df == 0.0) break;
        const double step = f / df;
        k -= step;
        if (std::abs(step) <= 1e-16 * std::abs(k)) break;
    }
    return k;
}

}  // namespace

Genus0Roots solve_genus0(double xi, const SpectralConstants& c)
{
    const RegionLabel lab = classify_region(xi, c);
    if (lab.region == Region::Border && lab.which == BorderKind::EllipticPlane)
        throw BorderError("solve_genus0: xi inside the guard band around xi0");
    if (xi < c.xi0) throw DegenerateError("solve_genus0: needs xi > xi0 (roots are not all real)");
    const double l = c.params.l, w = c.params.omega;
    // k^3 + a k^2 + b k + cc
    const double a = -l / (2.0 * w), b = l * xi * xi, cc = -xi * xi / (2.0 * w);
    const double Q = (a * a - 3.0 * b) / 9.0;
    const double R = (2.0 * a * a * a - 9.0 * a * b + 27.0 * cc) / 54.0;
    const double sq = std::sqrt(Q);
    const double ratio = std::clamp(R / (sq * sq * sq), -1.0, 1.0);
    const double th = std::acos(ratio);
    double roots[3];
    for (int j = 0; j < 3; ++j)
        roots[j] = newton_polish(-2.0 * sq * std::cos((th + 2.0 * kPi * j) / 3.0) - a / 3.0, a, b, cc);
    std::sort(roots, roots + 3);
    return {roots[0], roots[1], roots[2], xi};
}

Genus0Roots genus0_border_roots(const SpectralConstants& c)
{
    const double l = c.params.l, w = c.params.omega, l2 = l * l;
    const double root = std::sqrt((1.0 - l2) * (9.0 - l2));
    const double lm = (3.0 + l2 + root) / (8.0 * l * w);
    const double lp = (3.0 - l2 + root) / (-4.0 * l * w);
    return {lm, lm, lp, c.xi0};
}

std::array<double, 3> genus0_vieta_residuals(const Genus0Roots& g, const SpectralConstants& c)
{
    const double l = c.params.l, w = c.params.omega, xi = g.xi;
    const double a = g.lambda_minus, m = g.lambda_mid, b = g.lambda_plus;
    return {m + a + b - l / (2.0 * w), m * (a + b) + a * b - l * xi * xi, m * a * b - xi * xi / (2.0 * w)};
}

NormalizedVars normalize(double r, double xi, const SpectralConstants& c)
{
    return {r / c.absE, (xi / c.absE) * (xi / c.absE), c.params.beta()};
}

double cos_phi(double x, double alpha, double beta)
{
    const double v = -std::sqrt(beta) * (x * x + x * alpha) / (x * x * x + alpha);
    if (std::abs(v) > 1.0 + 1e-12) throw DomainError("cos_phi out of range: alpha beyond the admissible limit");
    return std::clamp(v, -1.0, 1.0);
}

std::pair<double, double> lambda_pm_from(double r, double cphi, double xi, const SpectralConstants& c)
{
    if (!(r > 0.0)) throw DomainError("lambda_pm_from needs r > 0");
    const double S = c.E1() - r * cphi;
    const double P = -xi * xi / (2.0 * r * c.params.omega);
    const double disc = S * S - 4.0 * P;
    // P < 0 makes the discriminant positive
    const double q = -0.5 * (S + std::copysign(std::sqrt(disc), S));
    const double r1 = -q, r2 = P / r1;
    return {std::min(r1, r2), std::max(r1, r2)};
}

Genus1Params trial_params(double r, double xi, const SpectralConstants& c)
{
    const NormalizedVars nv = normalize(r, xi, c);
    Genus1Params gp;
    gp.r = r;
    gp.xi = xi;
    gp.cos_phi = cos_phi(nv.x, nv.alpha, nv.beta);
    const double s = std::sqrt(std::max(0.0, 1.0 - gp.cos_phi * gp.cos_phi));
    gp.d = cplx(r * gp.cos_phi, r * s);
    auto [lm, lp] = lambda_pm_from(r, gp.cos_phi, xi, c);
    gp.lambda_minus = lm;
    gp.lambda_plus = lp;
    return gp;
}

double moduli_residual_F(double r, double xi, const SpectralConstants& c, const QuadOptions& q)
{
    const Genus1Params gp = trial_params(r, xi, c);
    return abel_half_integral(gp, c, 0.5 * gp.lambda_plus, q).imag();
}

Genus1Params solve_genus1(double xi, const SpectralConstants& c, const QuadOptions& q)
{
    const RegionLabel lab = classify_region(xi, c);
    if (lab.region == Region::Border) throw BorderError("solve_genus1: xi inside a border guard band");
    if (lab.region != Region::EllipticWave) throw DomainError("solve_genus1: xi outside the elliptic region");
    const double x0 = alpha0_x0(c.params.beta()).second;
    const double lo = c.absE * (1.0 + 1e-9), hi = x0 * c.absE * (1.0 + 1e-3);
    auto F = [&](double r) { return moduli_residual_F(r, xi, c, q); };
    const BrentResult br = scan_and_brent(F, lo, hi, 64, 1e-12);
    Genus1Params gp = trial_params(br.root, xi, c);
    const cplx abel = abel_condition(gp, c, AbelPath::Canonical, q);
    if (!(std::abs(abel) < 1e-8))
        throw ToleranceError("solve_genus1: Abel condition residual " + std::to_string(std::abs(abel)));
    return gp;
}

std::array<double, 3> whitham_algebraic_residuals(const Genus1Params& gp, const SpectralConstants& c)
{
    const double lm = gp.lambda_minus, lp = gp.lambda_plus, xi = gp.xi;
    const double d1 = gp.d.real(), ad = std::abs(gp.d), aE = std::abs(c.E), E1 = c.E1();
    return {lm + lp - (E1 - d1), lm * lp + xi * xi * aE / ad,
            2.0 * lm * lp * d1 + (lm + lp) * ad * ad + xi * xi * (E1 / aE * ad + d1 / ad * aE)};
}

std::array<double, 5> polynomial_P_alpha_coefficients(double x, double beta)
{
    const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x, x6 = x3 * x3;
    const double x7 = x6 * x, x8 = x4 * x4, x9 = x8 * x, x12 = x6 * x6;
    return {x12,
            -6.0 * beta * x7 + 4.0 * x9 + 2.0 * beta * x9,
            3.0 * beta * x4 + 6.0 * x6 - 14.0 * beta * x6 + 3.0 * beta * x8,
            4.0 * x3 + 2.0 * beta * x3 - 6.0 * beta * x5,
            1.0};
}

double polynomial_P(double x, double alpha, double beta)
{
    const auto c = polynomial_P_alpha_coefficients(x, beta);
    return (((c[4] * alpha + c[3]) * alpha + c[2]) * alpha + c[1]) * alpha + c[0];
}

double polynomial_P_scaled_quartic(double x, double z, double beta)
{
    const double ix2 = 1.0 / (x * x);
    const double c3 = 4.0 + 2.0 * beta - 6.0 * beta * x * x;
    const double c2 = 3.0 * beta * ix2 + 6.0 - 14.0 * beta + 3.0 * beta * x * x;
    const double c1 = -6.0 * beta * ix2 + 4.0 + 2.0 * beta;
    return (((z + c3) * z + c2) * z + c1) * z + 1.0;
}

std::pair<double, double> alpha0_x0(double beta)
{
    if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
    const double root = std::sqrt((1.0 - beta) * (9.0 - beta));
    const double sb = std::sqrt(beta);
    const double a0 = (27.0 - 18.0 * beta - beta * beta + (9.0 - beta) * root) / (8.0 * beta * sb);
    const double x0 = (3.0 + beta + root) / (4.0 * sb);
    return {a0, x0};
}

double p_stationary(double w, double beta)
{
    return (w + 2.0) * (w + 2.0) + 2.0 * beta * (w + 2.0) - 18.0 * beta;
}

StationarityData stationarity_data(double beta)
{
    if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
    StationarityData s;
    s.w1 = (5.0 - beta) / 2.0;
    s.w2 = 2.0 * (13.0 - 2.0 * beta) / 5.0;
    const double r1 = std::sqrt((1.0 - beta) * (9.0 - beta));
    const double r2 = std::sqrt((9.0 - beta) * (4.0 - beta));
    s.z1_plus = (5.0 - beta + r1) / 4.0;
    s.z1_minus = (5.0 - beta - r1) / 4.0;
    s.z2_plus = (13.0 - 2.0 * beta + 2.0 * r2) / 5.0;
    s.z2_minus = (13.0 - 2.0 * beta - 2.0 * r2) / 5.0;
    s.p_at_w1 = p_stationary(s.w1, beta);
    if (!(s.z2_minus < 0.5) || !(s.z1_plus > 1.0))
        throw DomainError("stationarity data violates z2- < 1/2 < 1 < z1+");
    return s;
}

BiquadraticRoots biquadratic_roots_x2(double z, double beta)
{
    if (!(z > 0.0)) throw DomainError("biquadratic_roots_x2 needs z > 0");
    if (z == 0.5) throw SingularityError("biquadratic_roots_x2: z = 1/2");
    const double w = z + 1.0 / z;
    const double p = p_stationary(w, beta);
    const double disc = p * p + 36.0 * beta * beta * (2.0 * w - 5.0);
    const double sq = std::sqrt(disc);
    const double den = 6.0 * beta * (2.0 * z - 1.0);
    return {(p + sq) / den, (p - sq) / den};
}

}  // namespace srs
