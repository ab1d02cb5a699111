#include "doctest.h"
#include "srs/gfun.hpp"
#include "support.hpp"

using namespace srs;
using srs::test::worked;

namespace {

struct Probe {
    cplx k;
    int upper_sign;
};

void check_mirrored(const PhaseContext& ctx, const std::vector<Probe>& probes)
{
    for (const Probe& p : probes) {
        CAPTURE(p.k);
        CHECK(phase_sign(p.k, ctx, worked()) == p.upper_sign);
        CHECK(phase_sign(std::conj(p.k), ctx, worked()) == -p.upper_sign);
    }
}

}  // namespace

TEST_CASE("genus-0 g: behaviour at infinity and sign lobes at xi = 10")
{
    const SpectralConstants& c = worked();
    const cplx k(4e4, 3e4);
    // same leading terms as theta at infinity
    CHECK(std::abs(g_genus0(k, 10.0, c) - theta_phase(k, 10.0)) / std::abs(k) < 1e-3);
    PhaseContext ctx;
    ctx.phase = PhaseSelector::G0;
    ctx.xi = 10.0;
    check_mirrored(ctx, {{{-8.0, 1.0}, 1},
                         {{-4.0, 1.0}, -1},
                         {{-1.0, 0.3}, -1},
                         {{3.5, 1.0}, -1},
                         {{10.0, 1.0}, 1},
                         {{0.0, 20.0}, 1},
                         {{-4.0, 3.0}, -1},
                         {{3.0, 3.0}, -1}});
}

TEST_CASE("genus-0 g: derivative vanishes at the three stationary points")
{
    const SpectralConstants& c = worked();
    const Genus0Roots r = solve_genus0(10.0, c);
    CHECK(std::abs(dg_genus0(cplx(r.lambda_minus, 0.0), r, c)) < 1e-12);
    CHECK(std::abs(dg_genus0(cplx(r.lambda_plus, 0.0), r, c)) < 1e-12);
    const cplx k(1.3, 0.7), h(1e-5, 0.0);
    const cplx fd = (g_genus0(k + h, 10.0, c) - g_genus0(k - h, 10.0, c)) / (2.0 * h);
    CHECK(std::abs(fd - dg_genus0(k, r, c)) < 1e-7);
}

TEST_CASE("theta sign lobes")
{
    PhaseContext ctx;
    ctx.phase = PhaseSelector::Theta;
    ctx.xi = 3.0;
    check_mirrored(ctx, {{{0.5, 0.5}, -1}, {{-2.0, 1.0}, -1}, {{4.0, 1.0}, 1}, {{0.0, 5.0}, 1}, {{-3.0, 3.0}, 1}});
}

TEST_CASE("band radical tends to one and has the right cuts")
{
    const SpectralConstants& c = worked();
    const Genus1Params gp = solve_genus1(3.0, c);
    const cplx far(3e5, -2e5);
    CHECK(std::abs(band_radical(far, gp, c) - 1.0) < 1e-5);
    CHECK(std::abs(band_radical_minus_one(far, gp, c) - (band_radical(far, gp, c) - 1.0)) < 1e-9);
    const cplx mid = 0.5 * (c.E + gp.d);
    CHECK(on_band_chord(mid, gp, c));
    CHECK(!on_band_chord(cplx(0.0, 0.3), gp, c));
    const cplx l = band_radical_on_chord(0.4, true, ChordSide::Left, gp, c);
    const cplx r = band_radical_on_chord(0.4, true, ChordSide::Right, gp, c);
    CHECK(std::abs(l + r) < 1e-12);
    const cplx k(0.7, 1.9);
    CHECK(std::abs(band_radical(std::conj(k), gp, c) - std::conj(band_radical(k, gp, c))) < 1e-13);
}

TEST_CASE("g-hat: derivative has double stationary points at lambda-pm and paths are checked")
{
    const SpectralConstants& c = worked();
    const Genus1Params gp = solve_genus1(3.0, c);
    CHECK(std::abs(dg_hat(cplx(gp.lambda_minus, 0.0), gp, c)) < 1e-12);
    CHECK(std::abs(dg_hat(cplx(gp.lambda_plus, 0.0), gp, c)) < 1e-12);
    CHECK(!path_admissible({c.E, gp.d}, gp, c));
    CHECK(path_admissible({c.E, cplx(2.0, 0.0), std::conj(c.E)}, gp, c));
    CHECK(!path_admissible({c.E, cplx(0.0, 0.0), std::conj(c.E)}, gp, c));
    const std::vector<cplx> p = plan_path(cplx(4.0, 2.0), gp, c);
    CHECK(!p.empty());
    CHECK(path_admissible(p, gp, c));
}

TEST_CASE("g-hat: Abel condition along a third path and reality on the real axis")
{
    const SpectralConstants& c = worked();
    const Genus1Params gp = solve_genus1(3.0, c);
    const cplx via = abel_condition_via(gp, c, {cplx(1.0, 2.5), cplx(6.0, 0.0), cplx(1.0, -2.5)});
    CHECK(std::abs(via) < 1e-8);
    // g-hat minus theta is real on the axis outside the band
    for (double s : {3.0, 5.0, 9.0}) CHECK(std::abs((g_hat(cplx(s, 0.0), gp, c) - theta_phase(s, 3.0)).imag()) < 1e-8);
}

TEST_CASE("g-hat sign lobes at xi = 3")
{
    PhaseContext ctx;
    ctx.phase = PhaseSelector::GHat;
    ctx.xi = 3.0;
    ctx.gp = solve_genus1(3.0, worked());
    check_mirrored(ctx, {{{-4.0, 1.0}, 1},
                         {{4.0, 1.0}, 1},
                         {{0.8, 0.5}, -1},
                         {{1.2, 1.0}, -1},
                         {{0.3, 0.3}, -1},
                         {{-1.5, 0.3}, -1},
                         {{-3.0, 3.0}, 1},
                         {{0.0, 5.0}, 1}});
}

TEST_CASE("band tracing closes on d and lambda-minus with constant Im g-hat")
{
    const SpectralConstants& c = worked();
    const Genus1Params gp = solve_genus1(3.0, c);
    const BandContours b = trace_band(gp, c, 1e-3);
    CHECK(b.end_miss_d < 1e-6);
    CHECK(b.end_miss_lambda < 1e-6);
    CHECK(b.max_im_g < 1e-6);
    CHECK(b.conj_mismatch < 1e-9);
    CHECK(std::abs(b.gamma_d.front() - c.E) < 1e-12);
    CHECK(std::abs(b.gamma_d.back() - gp.d) < 1e-6);
    CHECK(std::abs(b.gamma_lambda.back() - cplx(gp.lambda_minus, 0.0)) < 1e-6);
}

TEST_CASE("sign map layout")
{
    PhaseContext ctx;
    ctx.xi = 2.0;
    SignWindow w;
    const SignMap m = sign_map(ctx, worked(), w, 11);
    CHECK(m.points.size() == 121);
    CHECK(m.signs.size() == 121);
    CHECK(m.points.front() == cplx(w.re_min, w.im_min));
    CHECK(m.points.back() == cplx(w.re_max, w.im_max));
}
