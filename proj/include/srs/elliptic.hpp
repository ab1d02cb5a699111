#pragma once

#include <vector>

#include "srs/core_model.hpp"
#include "srs/gfun.hpp"
#include "srs/quadrature.hpp"
#include "srs/whitham.hpp"

namespace srs {

// w = sqrt((k-E)(k-conj E)(k-d)(k-conj d)), w ~ k^2 at infinity, cuts on the chords.
cplx w_radical(cplx k, const Genus1Params& gp, const SpectralConstants& c);
cplx w_radical(const SegmentPoint& p, const Genus1Params& gp, const SpectralConstants& c);
// Value on the + bank: left of E -> d on the upper cut, left of conj d -> conj E on the lower one.
// s parametrizes k = E + s (d - E), resp. k = conj E + s (conj d - conj E).
cplx w_plus_on_chord(double s, bool upper, const Genus1Params& gp, const SpectralConstants& c);
cplx w_minus_on_chord(double s, bool upper, const Genus1Params& gp, const SpectralConstants& c);

struct Periods {
    cplx period_a;     // integral of dz/w from conj d to d
    cplx period_EtoD;  // integral of dz/w_+ from E to d
    cplx tau;
};

Periods periods_and_tau(const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q = {});

// integral of dz/w from E to k along a path off the cuts
cplx abel_integral(cplx k, const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q = {});
cplx abel_integral_to_infinity(const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q = {});

// sum over m of exp(i pi tau m^2 + 2 i pi m z), argument reduced to the fundamental cell first
cplx theta3(cplx z, cplx tau);

// log delta(k) = (1/2 pi i) int_{lambda_-}^{lambda_+} log(1 - rho^2(s))/(s - k) ds
cplx log_delta(cplx k, const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q = {});
cplx delta_cauchy(cplx k, const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q = {});

struct SecondKind {
    double e1 = 0.0, e0 = 0.0;
    cplx zeta_inf;
};

// e0 from the vanishing period over conj d -> d, then the constant at infinity
SecondKind e0_and_zeta_inf(const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q = {});
// constant at infinity along the positive real axis or along a path to -infinity above the band
cplx zeta_inf_along(const Genus1Params& gp, const SpectralConstants& c, double e1, double e0, bool negative_ray,
                    const QuadOptions& q = {});

struct GHatLimits {
    cplx at_infinity;  // symmetrized display
    cplx at_zero;      // regularized value of g_hat - theta at 0 (circle mean)
};
GHatLimits g_hat_inf_and_g_hat_0(const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q = {});
// radial limit of g_hat - theta at 0 along direction angle
cplx g_hat_zero_radial(const Genus1Params& gp, const SpectralConstants& c, double angle, const QuadOptions& q = {});

struct BandIntegrals {
    cplx B_g, B_zeta, Delta;
};
BandIntegrals band_integrals(const Genus1Params& gp, const SpectralConstants& c, const SecondKind& sk,
                             const QuadOptions& q = {});

// h on the two cuts: -i f on the upper one, i/f on the lower one
cplx h_on_cut(cplx k, bool upper, const SpectralConstants& c);

cplx phi_hat_integral(const Genus1Params& gp, const SpectralConstants& c, const SecondKind& sk,
                      const QuadOptions& q = {});

struct EllipticFrame {
    Genus1Params gp;
    cplx tau, period_a, period_EtoD;
    double B_g = 0.0, B_zeta = 0.0, Delta = 0.0;
    cplx zeta_inf;
    double e1 = 0.0, e0 = 0.0, E0 = 0.0;
    double g_hat_inf = 0.0, g_hat_0 = 0.0, phi_hat = 0.0;
    cplx U_E0, U_zero, U_inf;
    // imaginary parts before projection
    double im_B_g = 0.0, im_B_zeta = 0.0, im_Delta = 0.0, im_phi_hat = 0.0, im_g_hat_inf = 0.0, im_g_hat_0 = 0.0;
};

inline constexpr double kRealityTol = 1e-6;
inline constexpr double kFrameBorderGuard = 1e-4;

EllipticFrame build_elliptic_frame(double xi, const SpectralConstants& c, const QuadOptions& q = {});
EllipticFrame build_elliptic_frame(const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q = {});

// U(k) = (2 period_a)^-1 int_E^k dz/w
cplx U_map(cplx k, const EllipticFrame& f, const SpectralConstants& c, const QuadOptions& q = {});

}  // namespace srs
