#include <random>

#include "doctest.h"
#include "srs/whitham.hpp"
#include "support.hpp"

using namespace srs;
using srs::test::rel;

TEST_CASE("grid minimum of alpha over the working set and the interval certificate")
{
    for (double beta : {0.1, 0.25, 0.5, 0.9}) {
        CAPTURE(beta);
        const auto [a0, x0] = alpha0_x0(beta);
        const PositivityCertificate cert = certify_positivity(beta, 1e-3);
        CHECK(cert.status == CertStatus::Proved);
        CHECK(status_name(cert.status) == "proved");
        CHECK(cert.alpha_max == doctest::Approx(a0 * (1.0 - 1e-3)).epsilon(1e-14));
        CHECK(!cert.boxes.empty());
        for (const CertBox& b : cert.boxes) CHECK(b.lower_bound > 0.0);
        CHECK(rel(cert.min_alpha_found, a0) < 1e-3);
        CHECK(std::abs(cert.argmin_x - x0) < 1e-2);
        CHECK(std::abs(cert.argmin_alpha - a0) < 1e-2 * std::max(1.0, a0));
        CHECK(cert.seconds < 60.0);
    }
}

TEST_CASE("certificate boxes cover the working rectangle")
{
    const PositivityCertificate cert = certify_positivity(0.5, 1e-3);
    double area = 0.0;
    for (const CertBox& b : cert.boxes) area += (b.x_hi - b.x_lo) * (b.a_hi - b.a_lo);
    double lo_x = 1e300, hi_x = 0.0;
    for (const CertBox& b : cert.boxes) {
        lo_x = std::min(lo_x, b.x_lo);
        hi_x = std::max(hi_x, b.x_hi);
    }
    CHECK(hi_x == doctest::Approx(cert.x_max));
    CHECK(lo_x == 1.0);
    CHECK(area == doctest::Approx((cert.x_max - 1.0) * (cert.alpha_max - 1.0)).epsilon(1e-9));
}

TEST_CASE("box lower bounds are below sampled values")
{
    const PositivityCertificate cert = certify_positivity(0.25, 1e-3);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const CertBox& b : cert.boxes)
        for (int i = 0; i < 5; ++i) {
            const double x = b.x_lo + (b.x_hi - b.x_lo) * u(rng), a = b.a_lo + (b.a_hi - b.a_lo) * u(rng);
            CHECK(polynomial_P(x, a, 0.25) >= b.lower_bound);
        }
}

TEST_CASE("pushing the alpha limit past the minimum yields a counterexample")
{
    const auto [a0, x0] = alpha0_x0(0.25);
    CertifyOptions o;
    o.alpha_upper_override = a0 * 1.01;
    o.run_grid_oracle = false;
    const PositivityCertificate cert = certify_positivity(0.25, 1e-3, o);
    CHECK(cert.status == CertStatus::Counterexample);
    CHECK(cert.counter_value <= 0.0);
    CHECK(polynomial_P(cert.counter_x, cert.counter_alpha, 0.25) <= 0.0);
}

TEST_CASE("tail bound: P stays positive beyond x_max")
{
    const double beta = 0.25;
    const double cap = alpha0_x0(beta).first;
    const double xm = certification_x_max(beta, cap);
    for (double x : {xm, 1.5 * xm, 4.0 * xm})
        for (int i = 0; i <= 20; ++i) CHECK(polynomial_P(x, cap * i / 20.0, beta) > 0.0);
}

TEST_CASE("grid minimum without certification")
{
    const GridMinimum g = grid_min_alpha(0.5, 1e-3);
    CHECK(g.found);
    CHECK(rel(g.min_alpha, 12.4709590713037410) < 1e-3);
    CHECK(std::abs(g.argmin_x - 1.96630585393212073) < 1e-2);
    CHECK_THROWS_AS(certify_positivity(1.2, 1e-3), DomainError);
}
