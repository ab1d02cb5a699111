#pragma once

#include <vector>

#include "srs/core_model.hpp"
#include "srs/quadrature.hpp"
#include "srs/whitham.hpp"

namespace srs {

// genus 0: g = (w/(2k) + 1/(4 xi^2)) X(k)
cplx g_genus0(cplx k, double xi, const SpectralConstants& c);
cplx dg_genus0(cplx k, const Genus0Roots& roots, const SpectralConstants& c);

// sqrt((k-d)(k-conj d)/((k-E)(k-conj E))) as a product of principal roots: -> 1 at infinity,
// cuts on the straight chords [E, d] and [conj E, conj d].
cplx band_radical(cplx k, const Genus1Params& gp, const SpectralConstants& c);
cplx band_radical(const SegmentPoint& p, const Genus1Params& gp, const SpectralConstants& c);
// band_radical - 1 without cancellation for large |k|
cplx band_radical_minus_one(cplx k, const Genus1Params& gp, const SpectralConstants& c);
bool on_band_chord(cplx k, const Genus1Params& gp, const SpectralConstants& c, double tol = 1e-13);

// Banks of a chord. Left is the left-hand side of the direction E -> d (resp. conj E -> conj d).
enum class ChordSide { Left, Right };
// Radical at k = A + s (B - A) on the chord from A in {E, conj E} to B in {d, conj d}.
cplx band_radical_on_chord(double s, bool upper, ChordSide side, const Genus1Params& gp, const SpectralConstants& c);

// (k - lambda_-)(k - lambda_+)/(4 xi^2 k^2)
cplx dg_hat_prefactor(cplx k, const Genus1Params& gp);
cplx dg_hat(cplx k, const Genus1Params& gp, const SpectralConstants& c);
cplx dg_hat(const SegmentPoint& p, const Genus1Params& gp, const SpectralConstants& c);

// True if the polyline avoids both chords (touching only at E or conj E) and, unless told
// otherwise, the pole at 0.
bool path_admissible(const std::vector<cplx>& pts, const Genus1Params& gp, const SpectralConstants& c,
                     bool avoid_origin = true);

// Integral of dg_hat from E to the real point s0 along a straight segment.
cplx abel_half_integral(const Genus1Params& gp, const SpectralConstants& c, double s0, const QuadOptions& q = {});

enum class AbelPath { Canonical, Alternate };
// Integral of dg_hat from E to conj E through lambda_+/2 (Canonical) or 2 lambda_+ (Alternate).
cplx abel_condition(const Genus1Params& gp, const SpectralConstants& c, AbelPath path, const QuadOptions& q = {});
// Same integral along E -> waypoints -> conj E.
cplx abel_condition_via(const Genus1Params& gp, const SpectralConstants& c, const std::vector<cplx>& waypoints,
                        const QuadOptions& q = {});

// Path from E to k avoiding the band; empty if none of the candidates is admissible.
std::vector<cplx> plan_path(cplx k, const Genus1Params& gp, const SpectralConstants& c);
cplx g_hat(cplx k, const Genus1Params& gp, const SpectralConstants& c, const QuadOptions& q = {});

struct BandContours {
    std::vector<cplx> gamma_d, gamma_lambda;       // upper half plane
    std::vector<cplx> gamma_d_bar, gamma_lambda_bar;  // traced independently from conj E
    std::vector<cplx> g_on_gamma_d, g_on_gamma_lambda;
    double end_miss_d = 0.0, end_miss_lambda = 0.0;
    double max_im_g = 0.0;
    double conj_mismatch = 0.0;
    double step = 0.0;
};

BandContours trace_band(const Genus1Params& gp, const SpectralConstants& c, double step = 1e-3,
                        const QuadOptions& q = {});

enum class PhaseSelector { Theta, G0, GHat };

struct SignWindow {
    double re_min = -4.0, re_max = 4.0, im_min = -2.0, im_max = 2.0;
};

struct SignMap {
    PhaseSelector phase = PhaseSelector::Theta;
    SignWindow window;
    int n = 0;
    std::vector<cplx> points;
    std::vector<int> signs;
};

// Phase context: xi for theta and g, solved params for g_hat.
struct PhaseContext {
    PhaseSelector phase = PhaseSelector::Theta;
    double xi = 0.0;
    Genus1Params gp;
};

int phase_sign(cplx k, const PhaseContext& ctx, const SpectralConstants& c, const QuadOptions& q = {});
SignMap sign_map(const PhaseContext& ctx, const SpectralConstants& c, const SignWindow& window, int n,
                 const QuadOptions& q = {});

}  // namespace srs
