#include "srs/asymptotics.hpp"

#include <cmath>

#include "srs/special.hpp"

namespace srs {

namespace {

constexpr cplx I(0.0, 1.0);

void require_time(double t)
{
    if (!(t >= kMinAsymptoticTime)) throw DomainError("asymptotic formulas are not evaluated at small t");
}

void require_region(double xi, Region want, const SpectralConstants& c)
{
    const RegionLabel lab = classify_region(xi, c);
    if (lab.region == Region::Border) throw BorderError("point sits on a region border");
    if (lab.region != want) throw DomainError("point lies in the " + region_name(lab.region) + " region");
}

}  // namespace

double phi_plane(double xi, const SpectralConstants& c, const QuadOptions& q)
{
    const Genus0Roots r = solve_genus0(xi, c);
    auto f = [&](double k) { return -log_one_minus_rho2(k, c) / big_X(cplx(k, 0.0), c).real(); };
    const double left = integrate_tail(f, r.lambda_minus, q);
    const double right = integrate_tail(f, r.lambda_plus, q);
    return (left + right) / (2.0 * kPi);
}

FieldTriple plane_wave_fields(double x, double t, const SpectralConstants& c, const QuadOptions& q)
{
    require_time(t);
    const double xi = slow_variable(x, t);
    require_region(xi, Region::PlaneWave, c);
    const double l = c.params.l, w = c.params.omega, p = c.params.p;
    const cplx ph = std::exp(I * (w * t - (l / w) * x - 2.0 * phi_plane(xi, c, q)));
    // nu sits at the boundary value l, which keeps nu^2 + |mu|^2 = 1
    return {-p / (2.0 * w) * ph, p * ph, l};
}

double eta_of(double k, const SpectralConstants& c)
{
    return log_one_minus_rho2(k, c) / (2.0 * kPi);
}

EtaPhase eta_and_varphi(double k, double xi, const SpectralConstants& c, const QuadOptions& q)
{
    if (!(std::abs(k) < c.absE)) throw DomainError("eta_and_varphi needs |k| < |E|");
    if (!(xi > 0.0 && xi < c.xi_disp())) throw DomainError("eta_and_varphi needs 0 < xi < 1/(2 omega)");
    EtaPhase out;
    const double Lk = log_one_minus_rho2(k, c);
    out.eta = Lk / (2.0 * kPi);
    // int log|s-k| dL(s) by parts, with L(k) subtracted so the endpoint terms stay finite
    auto edge = [&](double s) {
        const double gap = std::abs(s - k);
        const double dl = log_one_minus_rho2(s, c) - Lk;
        return gap == 0.0 ? 0.0 : std::log(gap) * dl;
    };
    const double inner =
        integrate([&](double s) { return (log_one_minus_rho2(s, c) - Lk) / (s - k); }, -xi, xi, q);
    const double stieltjes = edge(xi) - edge(-xi) - inner;
    const double arg_gamma = out.eta > 0.0 ? log_gamma(cplx(0.0, -out.eta)).imag() : 0.5 * kPi;
    out.varphi = 0.25 * kPi - 3.0 * out.eta * std::log(2.0) - arg_gamma + stieltjes / kPi;
    return out;
}

double dispersive_envelope(double xi, double t, const SpectralConstants& c)
{
    const double s = 2.0 * std::sqrt(xi * xi * xi / t);
    return s * (std::sqrt(eta_of(xi, c)) + std::sqrt(eta_of(-xi, c)));
}

FieldTriple dispersive_fields(double x, double t, const SpectralConstants& c, const QuadOptions& q)
{
    require_time(t);
    const double xi = slow_variable(x, t);
    require_region(xi, Region::Dispersive, c);
    // the e^{+2i sqrt(xt)} wave is fed by the stationary point at -xi, the other one by +xi
    const EtaPhase a = eta_and_varphi(-xi, xi, c, q);
    const EtaPhase b = eta_and_varphi(xi, xi, c, q);
    const double amp = 2.0 * std::sqrt(xi * xi * xi / t);
    const double ph = 2.0 * std::sqrt(x * t), lg = std::log(std::sqrt(x * t));
    const cplx wave = amp * std::sqrt(a.eta) * std::exp(I * (ph - a.eta * lg + a.varphi)) +
                      amp * std::sqrt(b.eta) * std::exp(I * (-ph + b.eta * lg + b.varphi));
    return {wave, 0.0, -1.0};
}

cplx kappa_tilde_at_zero(const Genus1Params& gp, const SpectralConstants& c)
{
    // continued from +infinity along the real axis, where both arguments start at 0
    return std::exp(-0.5 * I * (std::arg(-c.E) + std::arg(-gp.d)));
}

ThetaEntries Theta_entries(double t, const EllipticFrame& f, ThetaPoint at, const SpectralConstants& c)
{
    const cplx tau = f.tau;
    const cplx u = at == ThetaPoint::Zero ? f.U_zero : f.U_inf;
    // t B_g enters twice: g_hat jumps by 2 B_g across the lower band
    const double shift = (2.0 * t * f.B_g + f.B_zeta * f.Delta) / (2.0 * kPi);
    cplx diag, off;
    if (at == ThetaPoint::Zero) {
        const cplx kt = kappa_tilde_at_zero(f.gp, c);
        diag = 0.5 * (kt + 1.0 / kt);
        off = 0.5 * (kt - 1.0 / kt);
    } else {
        diag = 1.0;
        // the off-diagonal prefactor vanishes at infinity; keep its leading coefficient in 1/k
        off = 0.5 * I * (c.E2() + f.gp.d.imag());
    }
    const cplx dm = theta3(u - f.U_E0 - 0.5 - 0.5 * tau, tau);
    const cplx dp = theta3(u + f.U_E0 + 0.5 + 0.5 * tau, tau);
    if (std::abs(dm) < kThetaZeroGuard || std::abs(dp) < kThetaZeroGuard)
        throw ThetaZeroError("theta denominator too close to zero");
    ThetaEntries e;
    e.t11 = diag * theta3(u - f.U_E0 - 0.5 * tau - shift, tau) / dm;
    e.t12 = off * theta3(u + f.U_E0 + 0.5 * tau + shift, tau) / dp;
    e.t21 = off * theta3(u + f.U_E0 + 0.5 * tau - shift, tau) / dp;
    e.t22 = diag * theta3(u - f.U_E0 - 0.5 * tau + shift, tau) / dm;
    return e;
}

FieldTriple elliptic_fields(double x, double t, const SpectralConstants& c, const EllipticFrame& f)
{
    require_time(t);
    const double xi = slow_variable(x, t);
    if (std::abs(xi - f.gp.xi) > 1e-12 * xi) throw DomainError("elliptic frame built for another xi");
    const ThetaEntries z = Theta_entries(t, f, ThetaPoint::Zero, c);
    const ThetaEntries n = Theta_entries(t, f, ThetaPoint::Infinity, c);
    if (std::abs(n.t11) < kThetaZeroGuard || std::abs(n.t22) < kThetaZeroGuard)
        throw ThetaZeroError("Theta_11 or Theta_22 vanishes at infinity");
    FieldTriple out;
    out.q = 2.0 * I * n.t12 / n.t11 * std::exp(2.0 * I * (t * f.g_hat_inf - f.phi_hat));
    // sign fixed by the boundary value problem itself: nu -> -1 where q vanishes
    out.nu = (1.0 - 2.0 * z.t11 * z.t22 / (n.t11 * n.t22)).real();
    // same carrier as q; the overall sign is the one the integrator produces
    out.mu = -2.0 * I * z.t11 * z.t12 / (n.t11 * n.t11) * std::exp(2.0 * I * (t * f.g_hat_inf - f.phi_hat));
    return out;
}

RegionLabel FieldEvaluator::region(double x, double t) const
{
    return classify_region(slow_variable(x, t), c_);
}

const EllipticFrame& FieldEvaluator::frame(double xi)
{
    {
        std::lock_guard<std::mutex> lock(m_);
        auto it = frames_.find(xi);
        if (it != frames_.end()) return *it->second;
    }
    auto f = std::make_shared<EllipticFrame>(build_elliptic_frame(xi, c_, q_));
    std::lock_guard<std::mutex> lock(m_);
    return *frames_.emplace(xi, std::move(f)).first->second;
}

FieldTriple FieldEvaluator::operator()(double x, double t)
{
    require_time(t);
    const double xi = slow_variable(x, t);
    const RegionLabel lab = classify_region(xi, c_);
    switch (lab.region) {
    case Region::PlaneWave: return plane_wave_fields(x, t, c_, q_);
    case Region::Dispersive: return dispersive_fields(x, t, c_, q_);
    case Region::EllipticWave: return elliptic_fields(x, t, c_, frame(xi));
    default: throw BorderError("point sits on a region border");
    }
}

}  // namespace srs
