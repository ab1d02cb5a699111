#pragma once

#include <complex>
#include <string>
#include <vector>

#include "srs/errors.hpp"

namespace srs {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kBorderGuard = 1e-9;

struct PhysicalParams {
    double l = -0.5;
    double p = 0.8660254037844386;
    double omega = 0.5;

    // p is always derived from l
    static PhysicalParams make(double l, double omega);
    double beta() const { return l * l; }
};

struct SpectralConstants {
    PhysicalParams params;
    cplx E;
    double absE = 0.0;
    double omega0 = 0.0;
    double xi0 = 0.0;
    double psi = 0.0;

    double E1() const { return E.real(); }
    double E2() const { return E.imag(); }
    // left end of the dispersive/elliptic border, 1/(2 omega)
    double xi_disp() const { return 1.0 / (2.0 * params.omega); }
};

SpectralConstants derive_spectral_constants(const PhysicalParams& params);

// closed form (27 - 18 l^2 - l^4 + (9 - l^2) sqrt((1-l^2)(9-l^2))) / (-32 l^3 omega^2)
double xi0_squared_closed_form(const PhysicalParams& params);

enum class Region { Dispersive, EllipticWave, PlaneWave, Border };
enum class BorderKind { None, DispersiveElliptic, EllipticPlane };

struct RegionLabel {
    Region region = Region::Border;
    BorderKind which = BorderKind::None;
};

RegionLabel classify_region(double xi, const SpectralConstants& c, double guard = kBorderGuard);
std::string region_name(Region r);

// Values on the two banks of the arc gamma: Inner lies inside the circle, Outer outside.
enum class ArcSide { None, Inner, Outer };

struct ScatteringValues {
    cplx kappa, A, B, rho;
};

// kappa^4 = (k - conj E)/(k - E), kappa -> 1 at infinity, cut on the arc of Sigma.
ScatteringValues scattering_functions(cplx k, const SpectralConstants& c, ArcSide side = ArcSide::None);

// f = i/(A_- A_+) on the arc; its analytic continuation off the arc is -2i X(k)/E2.
cplx jump_f_on_arc(cplx k, const SpectralConstants& c);
cplx jump_f(cplx k, const SpectralConstants& c);

// X = sqrt((k-E)(k-conj E)), X ~ k at infinity, same cut as kappa.
cplx big_X(cplx k, const SpectralConstants& c, ArcSide side = ArcSide::None);
cplx big_Omega(cplx k, const SpectralConstants& c);

// log(1 - rho^2(s)) = -2 log|A(s)| for real s; jumps across s = 2 * circle center.
double log_one_minus_rho2(double s, const SpectralConstants& c);

bool on_arc(cplx k, const SpectralConstants& c, double tol = 1e-12);

cplx theta_phase(cplx k, double xi);
cplx theta_hat(double x, double t, cplx k);
double slow_variable(double x, double t);

struct ContourSigma {
    double center = 0.0;
    double radius = 0.0;
    double arc_cutoff = 0.0;  // |k| >= |E| on the arc
    std::vector<cplx> arc;    // E -> conj(E) through the real crossing
};

ContourSigma sigma_contour(const SpectralConstants& c, int n);

}  // namespace srs
