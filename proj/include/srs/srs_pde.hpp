#pragma once

#include <string>
#include <vector>

#include "srs/asymptotics.hpp"

namespace srs {

struct FieldGrid {
    std::vector<double> x;
    double t = 0.0;
    std::vector<cplx> q, mu;
    std::vector<double> nu;
    PhysicalParams params;
    std::string scheme;
};

inline constexpr const char* kSchemeName = "magnus4-x/rk4-t";

struct PdeOptions {
    double x_max = 60.0, t_max = 50.0, dx = 0.02, dt = 0.02;
    std::vector<double> snapshot_times;
    // boundary phase: mu(0,t) = p exp(i(omega t + phase_offset))
    double phase_offset = 0.0;
    double conservation_abort = 1e-5;
    // refuse runs above this many node updates
    double max_node_updates = 4e10;
    // record q along the rays x = t/(4 xi^2)
    std::vector<double> probe_xi;
};

struct ProbeSample {
    double t, x;
    cplx q;
};

struct PdeResult {
    std::vector<FieldGrid> snapshots;
    std::vector<std::vector<ProbeSample>> probes;
    double max_conservation = 0.0;
    long steps = 0;
    double node_updates = 0.0;
};

double estimated_node_updates(const PdeOptions& o);

// mu, nu from q on a uniform grid starting at x = 0 (one Magnus-4 rotation per cell)
void sweep_x(const std::vector<cplx>& q, double dx, double t, const PhysicalParams& p, double phase_offset,
             std::vector<cplx>& mu, std::vector<double>& nu);

PdeResult integrate_srs(const PhysicalParams& p, const PdeOptions& o);

double conservation_residual(const FieldGrid& g);

// cubic Lagrange interpolation of q at x
cplx interpolate_q(const FieldGrid& g, double x);

struct ComparisonRow {
    double x, t, xi;
    Region region;
    cplx q_num, q_asym;
    double nu_num, nu_asym;
    double abs_q_error;
};
std::vector<ComparisonRow> compare_asymptotic(const FieldGrid& g, FieldEvaluator& ev, std::size_t stride);

// max ||q| - p/(2 omega)| over samples with t in [t0, t0 + 2 pi/omega]
double plane_wave_envelope_error(const std::vector<ProbeSample>& probe, double t0, const SpectralConstants& c);

struct EnvelopeCheck {
    double xi, x, numeric, predicted;
};
// max |q| over one beat length around x = t/(4 xi^2) against 2 sqrt(xi^3/t)(sqrt(eta(xi)) + sqrt(eta(-xi)))
EnvelopeCheck dispersive_envelope_check(const FieldGrid& g, double xi, const SpectralConstants& c);

}  // namespace srs
