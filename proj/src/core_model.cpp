#include "srs/core_model.hpp"

#include <cmath>

namespace srs {

PhysicalParams PhysicalParams::make(double l, double omega)
{
    if (!(l > -1.0 && l < 0.0)) throw DomainError("l must lie in (-1, 0)");
    if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("omega must be positive");
    PhysicalParams pp;
    pp.l = l;
    pp.omega = omega;
    pp.p = std::sqrt((1.0 - l) * (1.0 + l));
    return pp;
}

double xi0_squared_closed_form(const PhysicalParams& pp)
{
    const double l = pp.l, l2 = l * l;
    const double root = std::sqrt((1.0 - l2) * (9.0 - l2));
    return (27.0 - 18.0 * l2 - l2 * l2 + (9.0 - l2) * root) / (-32.0 * l2 * l * pp.omega * pp.omega);
}

SpectralConstants derive_spectral_constants(const PhysicalParams& pp)
{
    if (!(pp.l > -1.0 && pp.l < 0.0)) throw DomainError("l must lie in (-1, 0)");
    if (!(pp.omega > 0.0)) throw DomainError("omega must be positive");
    SpectralConstants c;
    c.params = pp;
    c.E = cplx(pp.l, pp.p) / (2.0 * pp.omega);
    c.absE = 1.0 / (2.0 * pp.omega);
    const double l = pp.l, l2 = l * l;
    const double root = std::sqrt((1.0 - l2) * (9.0 - l2));
    const double w0sq = -8.0 * l2 * l * pp.omega * pp.omega / (27.0 - 18.0 * l2 - l2 * l2 + (9.0 - l2) * root);
    c.omega0 = std::sqrt(w0sq);
    c.xi0 = 1.0 / (2.0 * c.omega0);
    c.psi = std::arg(c.E);
    return c;
}

RegionLabel classify_region(double xi, const SpectralConstants& c, double guard)
{
    const double b1 = c.xi_disp(), b2 = c.xi0;
    if (std::abs(xi - b1) <= guard * b1) return {Region::Border, BorderKind::DispersiveElliptic};
    if (std::abs(xi - b2) <= guard * b2) return {Region::Border, BorderKind::EllipticPlane};
    if (xi < b1) return {Region::Dispersive, BorderKind::None};
    if (xi < b2) return {Region::EllipticWave, BorderKind::None};
    return {Region::PlaneWave, BorderKind::None};
}

std::string region_name(Region r)
{
    switch (r) {
    case Region::Dispersive: return "dispersive";
    case Region::EllipticWave: return "elliptic";
    case Region::PlaneWave: return "plane";
    case Region::Border: return "border";
    }
    return "?";
}

namespace {

// The Moebius map zeta = (k - conj E)/(k - E) sends the arc of Sigma onto the ray
// arg zeta = cut_angle. Reducing arg zeta into (cut_angle - 2pi, cut_angle] puts the
// branch cut of zeta^(1/4) exactly on the arc, with zeta^(1/4) -> 1 at infinity.
double cut_angle(const SpectralConstants& c)
{
    const double crossing = c.absE * c.absE / c.E1();  // 2 * circle center
    const cplx z = (crossing - std::conj(c.E)) / (crossing - c.E);
    double a = std::arg(z);
    if (a <= 0.0) a += 2.0 * kPi;
    return a;
}

struct Polar {
    double mod, arg;
};

Polar zeta_polar(cplx k, const SpectralConstants& c, ArcSide side)
{
    if (k == c.E || k == std::conj(c.E)) throw SingularityError("branch point E or conj(E)");
    const cplx z = (k - std::conj(c.E)) / (k - c.E);
    const double phic = cut_angle(c);
    double a = std::arg(z);
    const double rel = std::remainder(a - phic, 2.0 * kPi);
    if (std::abs(rel) < 1e-12) {
        if (side == ArcSide::None) throw SingularityError("point on the arc of Sigma needs a side flag");
        a = side == ArcSide::Inner ? phic : phic - 2.0 * kPi;
        return {std::abs(z), a};
    }
    while (a > phic) a -= 2.0 * kPi;
    while (a <= phic - 2.0 * kPi) a += 2.0 * kPi;
    return {std::abs(z), a};
}

}  // namespace

bool on_arc(cplx k, const SpectralConstants& c, double tol)
{
    if (k == c.E || k == std::conj(c.E)) return true;
    const cplx z = (k - std::conj(c.E)) / (k - c.E);
    return std::abs(std::remainder(std::arg(z) - cut_angle(c), 2.0 * kPi)) < tol;
}

ScatteringValues scattering_functions(cplx k, const SpectralConstants& c, ArcSide side)
{
    const Polar zp = zeta_polar(k, c, side);
    ScatteringValues v;
    v.kappa = std::polar(std::pow(zp.mod, 0.25), 0.25 * zp.arg);
    v.A = 0.5 * (v.kappa + 1.0 / v.kappa);
    v.B = 0.5 * (v.kappa - 1.0 / v.kappa);
    if (std::abs(v.A) < 1e-300) throw SingularityError("A vanishes");
    v.rho = v.B / v.A;
    return v;
}

cplx jump_f_on_arc(cplx k, const SpectralConstants& c)
{
    const cplx a_in = scattering_functions(k, c, ArcSide::Inner).A;
    const cplx a_out = scattering_functions(k, c, ArcSide::Outer).A;
    return cplx(0.0, 1.0) / (a_in * a_out);
}

cplx jump_f(cplx k, const SpectralConstants& c)
{
    return cplx(0.0, -2.0) * big_X(k, c, ArcSide::Outer) / c.E2();
}

cplx big_X(cplx k, const SpectralConstants& c, ArcSide side)
{
    const Polar zp = zeta_polar(k, c, side);
    return (k - c.E) * std::polar(std::sqrt(zp.mod), 0.5 * zp.arg);
}

cplx big_Omega(cplx k, const SpectralConstants& c)
{
    if (k == 0.0) throw SingularityError("Omega has a pole at k = 0");
    return c.params.omega / (2.0 * k) * big_X(k, c);
}

double log_one_minus_rho2(double s, const SpectralConstants& c)
{
    const cplx A = scattering_functions(cplx(s, 0.0), c).A;
    return -2.0 * std::log(std::abs(A));
}

cplx theta_phase(cplx k, double xi)
{
    if (k == 0.0) throw SingularityError("theta has a pole at k = 0");
    return 1.0 / (4.0 * k) + k / (4.0 * xi * xi);
}

double slow_variable(double x, double t)
{
    if (!(x > 0.0) || !(t > 0.0)) throw DomainError("slow variable needs x > 0 and t > 0");
    return std::sqrt(t / (4.0 * x));
}

cplx theta_hat(double x, double t, cplx k)
{
    return t * theta_phase(k, slow_variable(x, t));
}

ContourSigma sigma_contour(const SpectralConstants& c, int n)
{
    if (n < 2) throw DomainError("sigma_contour needs n >= 2");
    ContourSigma s;
    s.center = c.absE * c.absE / (2.0 * c.E1());
    s.radius = c.absE * c.absE / (2.0 * std::abs(c.E1()));
    s.arc_cutoff = c.absE;
    const double a0 = std::arg(c.E - s.center);
    const double a1 = 2.0 * kPi - a0;
    s.arc.resize(n);
    for (int i = 0; i < n; ++i) {
        const double a = a0 + (a1 - a0) * i / (n - 1);
        s.arc[i] = s.center + std::polar(s.radius, a);
    }
    s.arc.front() = c.E;
    s.arc.back() = std::conj(c.E);
    return s;
}

}  // namespace srs
