#include <map>
#include <random>

#include "doctest.h"
#include "srs/elliptic.hpp"
#include "support.hpp"

using namespace srs;
using srs::test::worked;

namespace {

const EllipticFrame& frame_at(double xi)
{
    static std::map<double, EllipticFrame> cache;
    auto it = cache.find(xi);
    if (it == cache.end()) it = cache.emplace(xi, build_elliptic_frame(xi, worked())).first;
    return it->second;
}

}  // namespace

TEST_CASE("frozen frame values")
{
    // regression values from the adaptive-quadrature build, 8 digits
    const double table[3][10] = {
        {1.5, 0.42348343, 0.71632996, -0.06469778, 1.58779641, -0.07970838, 0.433893572, 2.77575841, 0.24222495,
         0.18941874},
        {3.0, 0.65060493, 0.86005182, -0.15064156, 2.87566551, -0.16553007, 0.128963568, 2.71559364, 0.25255651,
         0.14708895},
        {6.0, 1.05874613, 1.32789239, 0.32089092, 4.73799542, -0.20236327, -0.162481186, 2.86448691, 0.25334035,
         0.13189683}};
    for (const auto& row : table) {
        CAPTURE(row[0]);
        const EllipticFrame& f = frame_at(row[0]);
        CHECK(std::abs(f.tau.imag() - row[1]) < 1e-7);
        CHECK(std::abs(f.e0 - row[2]) < 1e-7);
        CHECK(std::abs(f.zeta_inf.real() - row[3]) < 1e-7);
        CHECK(std::abs(f.B_zeta - row[4]) < 1e-7);
        CHECK(std::abs(f.B_g - row[5]) < 1e-7);
        CHECK(std::abs(f.Delta - row[6]) < 1e-8);
        CHECK(std::abs(f.phi_hat - row[7]) < 1e-7);
        CHECK(std::abs(f.g_hat_inf - row[8]) < 1e-7);
        CHECK(std::abs(f.g_hat_0 - row[9]) < 1e-7);
    }
    const EllipticFrame& f3 = frame_at(3.0);
    CHECK(f3.e1 == doctest::Approx(-1.645975).epsilon(1e-6));
    CHECK(f3.E0 == doctest::Approx(-0.75570).epsilon(1e-4));
}

TEST_CASE("reality and positivity across the elliptic interval")
{
    const SpectralConstants& c = worked();
    double worst = 0.0;
    for (int i = 0; i < 12; ++i) {
        const double xi = 1.0 + (c.xi0 - 1.0) * (i + 0.5) / 12.0;
        const EllipticFrame f = build_elliptic_frame(xi, c);
        CHECK(f.tau.imag() > 0.0);
        worst = std::max({worst, f.im_B_g, f.im_B_zeta, f.im_Delta, f.im_phi_hat});
    }
    CHECK(worst < kRealityTol);
}

TEST_CASE("frame close to the dispersive border")
{
    const EllipticFrame f = build_elliptic_frame(1.02, worked());
    CHECK(f.tau.imag() == doctest::Approx(0.2158).epsilon(1e-3));
    CHECK(std::isfinite(f.B_g));
    CHECK_THROWS_AS(build_elliptic_frame(1.0 + 1e-5, worked()), BorderError);
}

TEST_CASE("theta3: periodicity and quasi-periodicity")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.5, 1.5), ti(0.2, 2.0);
    double worst_p = 0.0, worst_q = 0.0;
    for (int i = 0; i < 100; ++i) {
        const cplx tau(u(rng), ti(rng)), z(u(rng), 0.5 * u(rng));
        const cplx th = theta3(z, tau);
        worst_p = std::max(worst_p, std::abs(theta3(z + 1.0, tau) - th) / std::abs(th));
        const cplx shifted = std::exp(cplx(0.0, -kPi) * (tau + 2.0 * z)) * th;
        worst_q = std::max(worst_q, std::abs(theta3(z + tau, tau) - shifted) / std::abs(shifted));
        CHECK(std::abs(theta3(-z, tau) - th) <= 1e-12 * std::abs(th));
    }
    CHECK(worst_p < 1e-12);
    CHECK(worst_q < 1e-12);
    // Jacobi: theta3(0, i) = pi^(1/4)/Gamma(3/4)
    CHECK(std::abs(theta3(0.0, cplx(0.0, 1.0)) - std::pow(kPi, 0.25) / std::tgamma(0.75)) < 1e-14);
}

TEST_CASE("constant at infinity is the same along both rays")
{
    const SpectralConstants& c = worked();
    const EllipticFrame& f = frame_at(3.0);
    const cplx pos = zeta_inf_along(f.gp, c, f.e1, f.e0, false);
    const cplx neg = zeta_inf_along(f.gp, c, f.e1, f.e0, true);
    CHECK(std::abs(pos - neg) < 1e-9);
    CHECK(std::abs(pos - f.zeta_inf) < 1e-9);
}

TEST_CASE("regularised g-hat at zero: radial limits agree with the circle mean")
{
    const SpectralConstants& c = worked();
    const EllipticFrame& f = frame_at(3.0);
    for (double a : {0.3, 1.2, 2.0, -0.7}) CHECK(std::abs(g_hat_zero_radial(f.gp, c, a).real() - f.g_hat_0) < 1e-8);
}

TEST_CASE("Abel map normalisation")
{
    const SpectralConstants& c = worked();
    const EllipticFrame& f = frame_at(3.0);
    CHECK(std::abs(U_map(c.E, f, c)) < 1e-14);
    CHECK(std::abs(U_map(f.gp.d, f, c) - 0.5 * f.tau) < 1e-12);
    CHECK(std::abs(f.period_EtoD / f.period_a - f.tau) < 1e-10);
    // w on the two banks differ by a sign
    for (double s : {0.2, 0.5, 0.8})
        CHECK(std::abs(w_plus_on_chord(s, true, f.gp, c) + w_minus_on_chord(s, true, f.gp, c)) < 1e-12);
    const cplx far(2e4, 1e4);
    CHECK(std::abs(w_radical(far, f.gp, c) / (far * far) - 1.0) < 1e-3);
}

TEST_CASE("delta: tends to one at infinity, reflection symmetry")
{
    const SpectralConstants& c = worked();
    const EllipticFrame& f = frame_at(3.0);
    CHECK(std::abs(delta_cauchy(cplx(1e7, 1e7), f.gp, c) - 1.0) < 1e-6);
    const cplx k(0.4, 0.9);
    const cplx up = delta_cauchy(k, f.gp, c), lo = delta_cauchy(std::conj(k), f.gp, c);
    CHECK(std::abs(up * std::conj(lo) - 1.0) < 1e-10);
    CHECK_THROWS_AS(delta_cauchy(cplx(0.5, 0.0), f.gp, c), SingularityError);
}
