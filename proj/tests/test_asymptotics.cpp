#include "doctest.h"
#include "srs/asymptotics.hpp"
#include "support.hpp"

using namespace srs;
using srs::test::worked;

namespace {

double x_of(double xi, double t) { return t / (4.0 * xi * xi); }

}  // namespace

TEST_CASE("evaluator dispatches by region")
{
    FieldEvaluator ev(worked());
    const double t = 100.0;
    CHECK(ev.region(x_of(0.5, t), t).region == Region::Dispersive);
    CHECK(ev.region(x_of(3.0, t), t).region == Region::EllipticWave);
    CHECK(ev.region(x_of(10.0, t), t).region == Region::PlaneWave);
    CHECK(ev.region(x_of(1.0, t), t).region == Region::Border);
    CHECK_THROWS_AS(ev(x_of(1.0, t), t), BorderError);
}

TEST_CASE("plane wave: |q| = p/(2 omega), |mu| = p, nu = l, independent of t")
{
    const SpectralConstants& c = worked();
    const PhysicalParams& p = c.params;
    for (double t : {10.0, 100.0, 1000.0}) {
        const FieldTriple f = plane_wave_fields(x_of(10.0, t), t, c);
        CHECK(std::abs(f.q) == doctest::Approx(p.p / (2.0 * p.omega)).epsilon(1e-14));
        CHECK(std::abs(f.mu) == doctest::Approx(p.p).epsilon(1e-14));
        CHECK(f.nu == p.l);
        CHECK(f.nu * f.nu + std::norm(f.mu) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(std::isfinite(phi_plane(10.0, c)));
    CHECK_THROWS_AS(plane_wave_fields(x_of(3.0, 100.0), 100.0, c), DomainError);
}

TEST_CASE("dispersive: envelope decays like t^(-1/2)")
{
    const SpectralConstants& c = worked();
    CHECK(dispersive_envelope(0.6, 400.0, c) / dispersive_envelope(0.6, 100.0, c) == doctest::Approx(0.5));
    const EtaPhase e = eta_and_varphi(0.3, 0.6, c);
    CHECK(e.eta == doctest::Approx(eta_of(0.3, c)));
    // |q| never exceeds the sum of the two wave amplitudes
    for (double t : {100.0, 400.0}) {
        double m = 0.0;
        for (int i = 0; i < 200; ++i) {
            const FieldTriple f = dispersive_fields(x_of(0.6, t) * (1.0 + 0.002 * i), t, c);
            m = std::max(m, std::abs(f.q));
            CHECK(f.mu == cplx(0.0));
            CHECK(f.nu == -1.0);
        }
        CHECK(m <= dispersive_envelope(0.6, t, c) * 1.05);
        CHECK(m >= dispersive_envelope(0.6, t, c) * 0.5);
    }
}

TEST_CASE("small t is refused")
{
    const SpectralConstants& c = worked();
    CHECK_THROWS_AS(plane_wave_fields(0.01, 0.5, c), DomainError);
    CHECK_THROWS_AS(dispersive_fields(1.0, 0.5, c), DomainError);
    FieldEvaluator ev(c);
    CHECK_THROWS_AS(ev(0.1, 0.5), DomainError);
}

TEST_CASE("elliptic wave: nu^2 + |mu|^2 close to one and finite q")
{
    const SpectralConstants& c = worked();
    FieldEvaluator ev(c);
    for (int i = 0; i < 40; ++i) {
        const double t = 200.0 + 0.37 * i;
        const FieldTriple f = ev(x_of(3.0, t), t);
        CHECK(f.nu * f.nu + std::norm(f.mu) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(std::abs(f.q) < 4.0);
    }
    CHECK(std::abs(kappa_tilde_at_zero(solve_genus1(3.0, c), c)) > 0.0);
}

TEST_CASE("border continuity: period-averaged |q| near the plane-wave border")
{
    const SpectralConstants& c = worked();
    const PhysicalParams& p = c.params;
    const double xi = c.xi0 * (1.0 - 1e-3), t = 2000.0;
    const EllipticFrame f = build_elliptic_frame(xi, c);
    // |q| is periodic along the ray with period pi/|B_g| in t
    const double period = kPi / std::abs(f.B_g);
    double sum = 0.0, dev = 0.0;
    const int n = 400;
    for (int i = 0; i < n; ++i) {
        const double tt = t + period * i / n;
        const double aq = std::abs(elliptic_fields(x_of(xi, tt), tt, c, f).q);
        sum += aq;
        dev = std::max(dev, std::abs(aq - p.p / (2.0 * p.omega)));
    }
    MESSAGE("max deviation " << dev);
    CHECK(std::abs(sum / n - p.p / (2.0 * p.omega)) < 5e-2);
}
