#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "srs/elliptic.hpp"

namespace srs {

struct FieldTriple {
    cplx q, mu;
    double nu = 0.0;
};

// Below this t the leading-order formulas are not trusted and evaluation is refused.
inline constexpr double kMinAsymptoticTime = 1.0;
inline constexpr double kThetaZeroGuard = 1e-10;

// plane wave region
double phi_plane(double xi, const SpectralConstants& c, const QuadOptions& q = {});
FieldTriple plane_wave_fields(double x, double t, const SpectralConstants& c, const QuadOptions& q = {});

// dispersive region
double eta_of(double k, const SpectralConstants& c);
struct EtaPhase {
    double eta = 0.0, varphi = 0.0;
};
EtaPhase eta_and_varphi(double k, double xi, const SpectralConstants& c, const QuadOptions& q = {});
// q from the two-wave superposition; mu = 0, nu = -1 at leading order
FieldTriple dispersive_fields(double x, double t, const SpectralConstants& c, const QuadOptions& q = {});
double dispersive_envelope(double xi, double t, const SpectralConstants& c);

// elliptic region
enum class ThetaPoint { Zero, Infinity };
struct ThetaEntries {
    cplx t11, t12, t21, t22;
};
// kappa-tilde of the genus-1 curve at k = 0; equals 1 at infinity
cplx kappa_tilde_at_zero(const Genus1Params& gp, const SpectralConstants& c);
ThetaEntries Theta_entries(double t, const EllipticFrame& frame, ThetaPoint at, const SpectralConstants& c);
FieldTriple elliptic_fields(double x, double t, const SpectralConstants& c, const EllipticFrame& frame);

// Region dispatch with a per-xi cache of elliptic frames.
class FieldEvaluator {
public:
    explicit FieldEvaluator(const SpectralConstants& c, const QuadOptions& q = {}) : c_(c), q_(q) {}
    FieldTriple operator()(double x, double t);
    RegionLabel region(double x, double t) const;
    const EllipticFrame& frame(double xi);

private:
    SpectralConstants c_;
    QuadOptions q_;
    std::mutex m_;
    std::map<double, std::shared_ptr<EllipticFrame>> frames_;
};

}  // namespace srs
