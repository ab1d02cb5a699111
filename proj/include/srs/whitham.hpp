#pragma once

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "srs/core_model.hpp"
#include "srs/quadrature.hpp"

namespace srs {

struct Genus0Roots {
    double lambda_minus = 0.0, lambda_mid = 0.0, lambda_plus = 0.0;
    double xi = 0.0;
};

// Real roots of k^3 - (l/2w) k^2 + l xi^2 k - xi^2/(2w) for xi > xi0.
Genus0Roots solve_genus0(double xi, const SpectralConstants& c);
// The double root and the simple root at xi = xi0.
Genus0Roots genus0_border_roots(const SpectralConstants& c);
std::array<double, 3> genus0_vieta_residuals(const Genus0Roots& g, const SpectralConstants& c);

struct Genus1Params {
    double lambda_minus = 0.0, lambda_plus = 0.0;
    cplx d;
    double r = 0.0;
    double cos_phi = 0.0;
    double xi = 0.0;
};

struct NormalizedVars {
    double x, alpha, beta;
};

NormalizedVars normalize(double r, double xi, const SpectralConstants& c);

double cos_phi(double x, double alpha, double beta);
std::pair<double, double> lambda_pm_from(double r, double cos_phi, double xi, const SpectralConstants& c);
// Algebraic part of the system for trial modulus r (Abel condition not imposed).
Genus1Params trial_params(double r, double xi, const SpectralConstants& c);

// Im of the Abel integral from E to the real crossing lambda_+/2; the full integral is 2i F.
double moduli_residual_F(double r, double xi, const SpectralConstants& c, const QuadOptions& q = {});

Genus1Params solve_genus1(double xi, const SpectralConstants& c, const QuadOptions& q = {});

// The three algebraic equations of the Whitham system, each written as lhs - rhs.
std::array<double, 3> whitham_algebraic_residuals(const Genus1Params& gp, const SpectralConstants& c);

// Positivity polynomial P(x, alpha; beta).
double polynomial_P(double x, double alpha, double beta);
// Coefficients of P in powers of alpha: P = sum_i coef[i](x) alpha^i.
std::array<double, 5> polynomial_P_alpha_coefficients(double x, double beta);
// P(x, z x^3)/x^12 written as a quartic in z (proof rearrangement)
double polynomial_P_scaled_quartic(double x, double z, double beta);

std::pair<double, double> alpha0_x0(double beta);

struct StationarityData {
    double w1, w2;
    double z1_plus, z1_minus, z2_plus, z2_minus;
    double p_at_w1;
};

double p_stationary(double w, double beta);
StationarityData stationarity_data(double beta);

struct BiquadraticRoots {
    double x_plus_sq, x_minus_sq;
};
BiquadraticRoots biquadratic_roots_x2(double z, double beta);

struct CertBox {
    double x_lo, x_hi, a_lo, a_hi;
    double lower_bound;
};

enum class CertStatus { Proved, Counterexample, DepthExceeded };

struct PositivityCertificate {
    double beta = 0.0;
    double eps = 0.0;
    double x_max = 0.0;
    double alpha_max = 0.0;
    std::vector<CertBox> boxes;
    CertStatus status = CertStatus::Proved;
    double counter_x = 0.0, counter_alpha = 0.0, counter_value = 0.0;
    double min_alpha_found = 0.0;
    double argmin_x = 0.0, argmin_alpha = 0.0;
    double grid_step = 0.0;
    double seconds = 0.0;
};

struct CertifyOptions {
    int max_depth = 40;
    double grid_step = 1e-3;
    bool run_grid_oracle = true;
    int threads = 0;  // 0 = hardware concurrency
    // override of the upper alpha limit (default alpha0 (1 - eps)); used to probe failures
    double alpha_upper_override = 0.0;
};

// Tail bound: smallest x beyond which x^12 dominates all other terms for alpha <= alpha_cap.
double certification_x_max(double beta, double alpha_cap);

struct GridMinimum {
    double min_alpha, argmin_x;
    bool found;
};
GridMinimum grid_min_alpha(double beta, double step);

PositivityCertificate certify_positivity(double beta, double eps, const CertifyOptions& opt = {});
std::string status_name(CertStatus s);

}  // namespace srs
