#include "srs/srs_pde.hpp"

#include <algorithm>
#include <cmath>

namespace srs {

namespace {

struct Vec3 {
    double a, b, n;
};

// rotation of v about the axis w by the angle |w|
Vec3 rotate(const Vec3& v, double wx, double wy, double wz)
{
    const double th = std::sqrt(wx * wx + wy * wy + wz * wz);
    if (th == 0.0) return v;
    const double kx = wx / th, ky = wy / th, kz = wz / th;
    const double c = std::cos(th), s = std::sin(th);
    const double kv = kx * v.a + ky * v.b + kz * v.n;
    const double cx = ky * v.n - kz * v.b, cy = kz * v.a - kx * v.n, cz = kx * v.b - ky * v.a;
    return {v.a * c + cx * s + kx * kv * (1 - c), v.b * c + cy * s + ky * kv * (1 - c),
            v.n * c + cz * s + kz * kv * (1 - c)};
}

cplx lagrange4(const std::vector<cplx>& q, long i0, double xs)
{
    cplx r = 0.0;
    for (int a = 0; a < 4; ++a) {
        double w = 1.0;
        for (int b = 0; b < 4; ++b)
            if (b != a) w *= (xs - double(i0 + b)) / double(a - b);
        r += w * q[i0 + a];
    }
    return r;
}

long stencil_start(long j, long n)
{
    long i0 = std::max(0L, j - 1);
    return std::min(i0, n - 4);
}

}  // namespace

double estimated_node_updates(const PdeOptions& o)
{
    const double nx = std::floor(o.x_max / o.dx) + 1.0;
    const double nt = std::ceil(o.t_max / o.dt);
    return 4.0 * nx * nt;
}

void sweep_x(const std::vector<cplx>& q, double dx, double t, const PhysicalParams& p, double phase_offset,
             std::vector<cplx>& mu, std::vector<double>& nu)
{
    const long n = static_cast<long>(q.size());
    mu.resize(n);
    nu.resize(n);
    const cplx m0 = p.p * std::exp(cplx(0.0, p.omega * t + phase_offset));
    Vec3 v{m0.real(), m0.imag(), p.l};
    mu[0] = m0;
    nu[0] = p.l;
    const double g1 = 0.5 - std::sqrt(3.0) / 6.0, g2 = 0.5 + std::sqrt(3.0) / 6.0;
    for (long j = 0; j + 1 < n; ++j) {
        const long i0 = stencil_start(j, n);
        const cplx q1 = lagrange4(q, i0, double(j) + g1), q2 = lagrange4(q, i0, double(j) + g2);
        // (Re mu, Im mu, nu)' = W x (Re mu, Im mu, nu) with W = (-2 Re q, -2 Im q, 0)
        const double w1x = -2.0 * q1.real(), w1y = -2.0 * q1.imag();
        const double w2x = -2.0 * q2.real(), w2y = -2.0 * q2.imag();
        const double wx = 0.5 * dx * (w1x + w2x), wy = 0.5 * dx * (w1y + w2y);
        const double wz = -std::sqrt(3.0) / 12.0 * dx * dx * (w1x * w2y - w1y * w2x);
        v = rotate(v, wx, wy, wz);
        mu[j + 1] = cplx(v.a, v.b);
        nu[j + 1] = v.n;
    }
}

PdeResult integrate_srs(const PhysicalParams& p, const PdeOptions& o)
{
    if (!(o.dx > 0.0 && o.dt > 0.0 && o.x_max > 0.0 && o.t_max >= 0.0))
        throw DomainError("integrate_srs needs positive dx, dt, x_max and t_max >= 0");
    const double cost = estimated_node_updates(o);
    if (cost > o.max_node_updates)
        throw BudgetError("run needs about " + std::to_string(cost) + " node updates, budget is " +
                          std::to_string(o.max_node_updates));
    const long n = std::lround(o.x_max / o.dx) + 1;
    if (n < 4) throw DomainError("integrate_srs needs at least four x nodes");
    const long steps = std::lround(std::ceil(o.t_max / o.dt - 1e-9));

    PdeResult res;
    res.probes.resize(o.probe_xi.size());
    std::vector<cplx> q(n, 0.0), k1(n), k2(n), k3(n), k4(n), tmp(n), mu;
    std::vector<double> nu;
    std::vector<double> xs(n);
    for (long j = 0; j < n; ++j) xs[j] = j * o.dx;

    auto rhs = [&](const std::vector<cplx>& qq, double tt, std::vector<cplx>& out) {
        sweep_x(qq, o.dx, tt, p, o.phase_offset, mu, nu);
        double worst = 0.0;
        for (long j = 0; j < n; ++j) {
            out[j] = cplx(0.0, -0.5) * mu[j];
            worst = std::max(worst, std::abs(nu[j] * nu[j] + std::norm(mu[j]) - 1.0));
        }
        res.max_conservation = std::max(res.max_conservation, worst);
        if (worst > o.conservation_abort)
            throw ConservationError("nu^2 + |mu|^2 drifted by " + std::to_string(worst) + " at t = " +
                                    std::to_string(tt));
    };

    std::vector<double> pending = o.snapshot_times;
    std::sort(pending.begin(), pending.end());
    std::size_t next = 0;
    auto snapshot = [&](double t) {
        FieldGrid g;
        g.x = xs;
        g.t = t;
        g.q = q;
        sweep_x(q, o.dx, t, p, o.phase_offset, g.mu, g.nu);
        g.params = p;
        g.scheme = kSchemeName;
        res.snapshots.push_back(std::move(g));
    };
    auto take_due = [&](double t) {
        while (next < pending.size() && pending[next] <= t + 0.5 * o.dt) {
            snapshot(t);
            ++next;
        }
    };
    auto record_probes = [&](double t) {
        for (std::size_t i = 0; i < o.probe_xi.size(); ++i) {
            const double x = t / (4.0 * o.probe_xi[i] * o.probe_xi[i]);
            const double s = x / o.dx;
            const long j = static_cast<long>(std::floor(s));
            if (t <= 0.0 || j + 1 >= n) continue;
            res.probes[i].push_back({t, x, lagrange4(q, stencil_start(j, n), s)});
        }
    };

    take_due(0.0);
    double t = 0.0;
    for (long s = 0; s < steps; ++s) {
        const double h = o.dt;
        rhs(q, t, k1);
        for (long j = 0; j < n; ++j) tmp[j] = q[j] + 0.5 * h * k1[j];
        rhs(tmp, t + 0.5 * h, k2);
        for (long j = 0; j < n; ++j) tmp[j] = q[j] + 0.5 * h * k2[j];
        rhs(tmp, t + 0.5 * h, k3);
        for (long j = 0; j < n; ++j) tmp[j] = q[j] + h * k3[j];
        rhs(tmp, t + h, k4);
        for (long j = 0; j < n; ++j) q[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        t = double(s + 1) * h;
        record_probes(t);
        take_due(t);
    }
    res.steps = steps;
    res.node_updates = 4.0 * double(n) * double(steps);
    return res;
}

double conservation_residual(const FieldGrid& g)
{
    double worst = 0.0;
    for (std::size_t j = 0; j < g.nu.size(); ++j)
        worst = std::max(worst, std::abs(g.nu[j] * g.nu[j] + std::norm(g.mu[j]) - 1.0));
    return worst;
}

cplx interpolate_q(const FieldGrid& g, double x)
{
    const long n = static_cast<long>(g.x.size());
    if (n < 4) throw DomainError("grid too small to interpolate");
    const double dx = g.x[1] - g.x[0];
    const double s = (x - g.x[0]) / dx;
    if (s < 0.0 || s > double(n - 1)) throw DomainError("interpolation point outside the grid");
    const long j = std::min(static_cast<long>(std::floor(s)), n - 2);
    return lagrange4(g.q, stencil_start(j, n), s);
}

std::vector<ComparisonRow> compare_asymptotic(const FieldGrid& g, FieldEvaluator& ev, std::size_t stride)
{
    std::vector<ComparisonRow> rows;
    if (stride == 0) stride = 1;
    for (std::size_t j = 1; j < g.x.size(); j += stride) {
        const double x = g.x[j];
        const RegionLabel lab = ev.region(x, g.t);
        if (lab.region == Region::Border) continue;
        try {
            const FieldTriple f = ev(x, g.t);
            rows.push_back({x, g.t, slow_variable(x, g.t), lab.region, g.q[j], f.q, g.nu[j], f.nu,
                            std::abs(std::abs(g.q[j]) - std::abs(f.q))});
        } catch (const BorderError&) {
        }
    }
    return rows;
}

double plane_wave_envelope_error(const std::vector<ProbeSample>& probe, double t0, const SpectralConstants& c)
{
    const double amp = c.params.p / (2.0 * c.params.omega);
    const double t1 = t0 + 2.0 * kPi / c.params.omega;
    double worst = -1.0;
    for (const auto& s : probe)
        if (s.t >= t0 && s.t <= t1) worst = std::max(worst, std::abs(std::abs(s.q) - amp));
    if (worst < 0.0) throw DomainError("probe does not cover the requested period");
    return worst;
}

EnvelopeCheck dispersive_envelope_check(const FieldGrid& g, double xi, const SpectralConstants& c)
{
    const double x = g.t / (4.0 * xi * xi);
    // the two waves beat with wavenumber 4 xi in x; scan two beat lengths
    const double half = kPi / (2.0 * xi);
    double m = 0.0;
    bool any = false;
    for (std::size_t j = 0; j < g.x.size(); ++j)
        if (std::abs(g.x[j] - x) <= half) {
            m = std::max(m, std::abs(g.q[j]));
            any = true;
        }
    if (!any) throw DomainError("grid does not reach the dispersive probe");
    return {xi, x, m, dispersive_envelope(xi, g.t, c)};
}

}  // namespace srs
