#include "srs/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <thread>

#include "CLI11.hpp"
#include "srs/asymptotics.hpp"
#include "srs/gfun.hpp"

#ifndef SRS_VERSION
#define SRS_VERSION "0.0.0"
#endif

namespace srs::cli {

namespace fs = std::filesystem;

json RunConfig::to_json() const
{
    json j;
    j["l"] = l;
    j["omega"] = omega;
    j["xi_min"] = xi_min ? json(*xi_min) : json(nullptr);
    j["xi_max"] = xi_max ? json(*xi_max) : json(nullptr);
    j["xi_steps"] = xi_steps;
    j["out_dir"] = out_dir;
    j["tol_quad"] = tol_quad;
    j["seed"] = seed ? json(*seed) : json(nullptr);
    j["threads"] = threads;
    j["betas"] = betas;
    j["eps"] = eps;
    j["grid_step"] = grid_step;
    j["write_boxes"] = write_boxes;
    j["x_min"] = x_min;
    j["x_max"] = x_max;
    j["x_steps"] = x_steps;
    j["times"] = times;
    j["pde_x_max"] = pde_x_max;
    j["t_max"] = t_max;
    j["dx"] = dx;
    j["dt"] = dt;
    j["snapshot_times"] = snapshot_times;
    j["phase_offset"] = phase_offset;
    j["max_node_updates"] = max_node_updates;
    j["phase"] = phase;
    j["map_xi"] = map_xi;
    j["re_min"] = re_min;
    j["re_max"] = re_max;
    j["im_min"] = im_min;
    j["im_max"] = im_max;
    j["map_n"] = map_n;
    j["band_step"] = band_step;
    j["plane_t"] = plane_t;
    j["dispersive_t"] = dispersive_t;
    j["dispersive_xi"] = dispersive_xi;
    return j;
}

namespace {

template <class T>
void opt_from(const json& j, const char* key, std::optional<T>& v)
{
    if (j.at(key).is_null())
        v.reset();
    else
        v = j.at(key).get<T>();
}

void from_json(const json& j, RunConfig& c)
{
    c.l = j.at("l").get<double>();
    c.omega = j.at("omega").get<double>();
    opt_from(j, "xi_min", c.xi_min);
    opt_from(j, "xi_max", c.xi_max);
    c.xi_steps = j.at("xi_steps").get<int>();
    c.out_dir = j.at("out_dir").get<std::string>();
    c.tol_quad = j.at("tol_quad").get<double>();
    opt_from(j, "seed", c.seed);
    c.threads = j.at("threads").get<int>();
    c.betas = j.at("betas").get<std::vector<double>>();
    c.eps = j.at("eps").get<double>();
    c.grid_step = j.at("grid_step").get<double>();
    c.write_boxes = j.at("write_boxes").get<bool>();
    c.x_min = j.at("x_min").get<double>();
    c.x_max = j.at("x_max").get<double>();
    c.x_steps = j.at("x_steps").get<int>();
    c.times = j.at("times").get<std::vector<double>>();
    c.pde_x_max = j.at("pde_x_max").get<double>();
    c.t_max = j.at("t_max").get<double>();
    c.dx = j.at("dx").get<double>();
    c.dt = j.at("dt").get<double>();
    c.snapshot_times = j.at("snapshot_times").get<std::vector<double>>();
    c.phase_offset = j.at("phase_offset").get<double>();
    c.max_node_updates = j.at("max_node_updates").get<double>();
    c.phase = j.at("phase").get<std::string>();
    c.map_xi = j.at("map_xi").get<double>();
    c.re_min = j.at("re_min").get<double>();
    c.re_max = j.at("re_max").get<double>();
    c.im_min = j.at("im_min").get<double>();
    c.im_max = j.at("im_max").get<double>();
    c.map_n = j.at("map_n").get<int>();
    c.band_step = j.at("band_step").get<double>();
    c.plane_t = j.at("plane_t").get<double>();
    c.dispersive_t = j.at("dispersive_t").get<double>();
    c.dispersive_xi = j.at("dispersive_xi").get<std::vector<double>>();
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

void need(bool ok, const std::string& msg)
{
    if (!ok) throw UsageError(msg);
}

}  // namespace

void apply_json(RunConfig& cfg, const json& j)
{
    if (!j.is_object()) throw UsageError("config must be a JSON object");
    json merged = cfg.to_json();
    for (const auto& [k, v] : j.items()) {
        if (!merged.contains(k)) throw UsageError("unknown config key '" + k + "'");
        merged[k] = v;
    }
    try {
        from_json(merged, cfg);
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad config value: ") + e.what());
    }
}

void validate_config(const RunConfig& c, const std::string& command)
{
    need(std::isfinite(c.l) && c.l > -1.0 && c.l < 0.0, "l must lie in (-1, 0)");
    need(finite_positive(c.omega), "omega must be positive");
    need(finite_positive(c.tol_quad) && c.tol_quad < 1.0, "tol-quad must lie in (0, 1)");
    need(c.threads >= 0, "threads must be >= 0");
    if (command == "params-sweep") {
        need(c.xi_steps >= 1, "xi grid is empty");
        need(c.xi_min.has_value() == c.xi_max.has_value(), "give both xi-min and xi-max or neither");
        if (c.xi_min) {
            need(finite_positive(*c.xi_min) && std::isfinite(*c.xi_max), "xi bounds must be positive");
            need(*c.xi_max > *c.xi_min || (c.xi_steps == 1 && *c.xi_max == *c.xi_min), "xi-max must exceed xi-min");
        }
    }
    if (command == "certify") {
        need(!c.betas.empty(), "no beta values");
        for (double b : c.betas) need(std::isfinite(b) && b > 0.0 && b < 1.0, "beta must lie in (0, 1)");
        need(c.eps > 0.0 && c.eps < 1.0, "eps must lie in (0, 1)");
        need(finite_positive(c.grid_step), "grid step must be positive");
    }
    if (command == "field-eval") {
        need(c.x_steps >= 1, "x grid is empty");
        need(finite_positive(c.x_min) && c.x_max >= c.x_min, "x window must be positive and ordered");
        need(!c.times.empty(), "no evaluation times");
        for (double t : c.times) need(finite_positive(t), "times must be positive");
    }
    if (command == "pde-run") {
        need(finite_positive(c.pde_x_max) && finite_positive(c.t_max), "x-max and t-max must be positive");
        need(finite_positive(c.dx) && finite_positive(c.dt), "dx and dt must be positive");
        need(c.dx < c.pde_x_max && c.dt <= c.t_max, "steps larger than the window");
        for (double t : c.snapshot_times) need(t >= 0.0 && t <= c.t_max, "snapshot times must lie in [0, t-max]");
        need(finite_positive(c.max_node_updates), "budget must be positive");
    }
    if (command == "sign-map") {
        need(c.phase == "theta" || c.phase == "g0" || c.phase == "ghat", "phase must be theta, g0 or ghat");
        need(finite_positive(c.map_xi), "xi must be positive");
        need(c.map_n >= 2, "map resolution must be >= 2");
        need(c.re_max > c.re_min && c.im_max > c.im_min, "empty window");
        need(finite_positive(c.band_step), "band step must be positive");
    }
    if (command == "validate") {
        need(finite_positive(c.plane_t) && finite_positive(c.dispersive_t), "validation times must be positive");
        need(!c.dispersive_xi.empty(), "no dispersive probe points");
        need(finite_positive(c.max_node_updates), "budget must be positive");
    }
}

fs::path resolve_out_dir(const RunConfig& cfg)
{
    const char* env = std::getenv("SRS_OUT_DIR");
    return (env && *env) ? fs::path(env) : fs::path(cfg.out_dir);
}

namespace {

SpectralConstants constants_of(const RunConfig& cfg)
{
    return derive_spectral_constants(PhysicalParams::make(cfg.l, cfg.omega));
}

QuadOptions quad_of(const RunConfig& cfg)
{
    QuadOptions q;
    q.abs_tol = cfg.tol_quad;
    q.rel_tol = cfg.tol_quad;
    return q;
}

// shift interior nodes by up to a quarter step; endpoints stay put
void jitter(std::vector<double>& v, std::optional<std::uint64_t> seed)
{
    if (!seed || v.size() < 3) return;
    std::mt19937_64 rng(*seed);
    std::uniform_real_distribution<double> u(-0.25, 0.25);
    const double h = (v.back() - v.front()) / static_cast<double>(v.size() - 1);
    for (std::size_t i = 1; i + 1 < v.size(); ++i) v[i] += u(rng) * h;
}

std::vector<double> linspace(double a, double b, int n)
{
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n == 1 ? a : a + (b - a) * i / (n - 1);
    return v;
}

template <class F>
void parallel_for(std::size_t n, int threads, F f)
{
    unsigned hw = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
    hw = static_cast<unsigned>(std::min<std::size_t>(hw, n));
    if (hw <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < hw; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) f(i);
        });
    for (auto& th : pool) th.join();
}

std::string short_num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

OutputMeta meta_of(const RunConfig& cfg, const std::string& command)
{
    json h = cfg.to_json();
    h.erase("out_dir");
    h.erase("threads");
    h["command"] = command;
    OutputMeta m;
    m.version = SRS_VERSION;
    m.config_hash = hex64(fnv1a64(h.dump()));
    m.tol_quad = cfg.tol_quad;
    m.extra = {{"command", command}, {"l", fmt17(cfg.l)}, {"omega", fmt17(cfg.omega)}};
    if (cfg.seed) m.extra.emplace_back("seed", std::to_string(*cfg.seed));
    return m;
}

json run_json(const RunConfig& cfg, const std::string& command)
{
    json cj = cfg.to_json();
    cj.erase("out_dir");
    cj.erase("threads");
    return {{"meta", meta_of(cfg, command).to_json()}, {"config", cj}};
}

fs::path prepare_out(const RunConfig& cfg)
{
    fs::path out = resolve_out_dir(cfg);
    fs::create_directories(out);
    return out;
}

const double kNaN = std::nan("");

}  // namespace

std::vector<double> xi_grid(const RunConfig& cfg)
{
    std::vector<double> v;
    if (cfg.xi_min && cfg.xi_max) {
        v = linspace(*cfg.xi_min, *cfg.xi_max, cfg.xi_steps);
    } else {
        const SpectralConstants c = constants_of(cfg);
        const double a = c.xi_disp(), b = c.xi0;
        for (int i = 0; i < cfg.xi_steps; ++i) v.push_back(a + (b - a) * (i + 1) / (cfg.xi_steps + 1));
    }
    jitter(v, cfg.seed);
    return v;
}

int cmd_params_sweep(const RunConfig& cfg)
{
    const SpectralConstants c = constants_of(cfg);
    const QuadOptions q = quad_of(cfg);
    const std::vector<double> xs = xi_grid(cfg);
    const fs::path out = prepare_out(cfg);
    fs::create_directories(out / "frames");

    struct Row {
        double lm = kNaN, lp = kNaN;
        cplx d{kNaN, kNaN}, tau{kNaN, kNaN};
        double bg = kNaN, bz = kNaN, delta = kNaN, ginf = kNaN, phi = kNaN;
        std::string status, message;
        std::optional<EllipticFrame> frame;
    };
    std::vector<Row> rows(xs.size());
    parallel_for(xs.size(), cfg.threads, [&](std::size_t i) {
        Row& r = rows[i];
        const RegionLabel lab = classify_region(xs[i], c);
        try {
            switch (lab.region) {
            case Region::EllipticWave: {
                EllipticFrame f = build_elliptic_frame(xs[i], c, q);
                r.lm = f.gp.lambda_minus;
                r.lp = f.gp.lambda_plus;
                r.d = f.gp.d;
                r.tau = f.tau;
                r.bg = f.B_g;
                r.bz = f.B_zeta;
                r.delta = f.Delta;
                r.ginf = f.g_hat_inf;
                r.phi = f.phi_hat;
                r.status = "ok";
                r.frame = std::move(f);
                break;
            }
            case Region::PlaneWave: {
                const Genus0Roots g = solve_genus0(xs[i], c);
                r.lm = g.lambda_minus;
                r.lp = g.lambda_plus;
                r.status = "plane";
                break;
            }
            case Region::Dispersive: r.status = "dispersive"; break;
            case Region::Border: r.status = "border"; break;
            }
        } catch (const BorderError& e) {
            r.status = "border";
            r.message = e.what();
        } catch (const Error& e) {
            r.status = "error";
            r.message = e.what();
        }
    });

    const OutputMeta meta = meta_of(cfg, "params-sweep");
    CsvWriter w(out / "params_sweep.csv", meta,
                {"xi", "lambda_minus", "lambda_plus", "re_d", "im_d", "re_tau", "im_tau", "B_g", "B_zeta", "Delta",
                 "g_hat_inf", "phi_hat", "status"});
    json failures = json::array();
    json frames = json::array();
    int n_ok = 0, n_err = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const Row& r = rows[i];
        w.num(xs[i]).num(r.lm).num(r.lp).num(r.d.real()).num(r.d.imag()).num(r.tau.real()).num(r.tau.imag());
        w.num(r.bg).num(r.bz).num(r.delta).num(r.ginf).num(r.phi).str(r.status);
        w.end_row();
        if (r.status == "ok") ++n_ok;
        if (r.status == "error") ++n_err;
        if (!r.message.empty()) failures.push_back({{"index", i}, {"xi", xs[i]}, {"status", r.status}, {"message", r.message}});
        if (r.frame) {
            char name[32];
            std::snprintf(name, sizeof name, "frame_%04zu.json", i);
            json fj = frame_to_json(*r.frame);
            fj["meta"] = meta.to_json();
            write_json(out / "frames" / name, fj);
            frames.push_back(std::string("frames/") + name);
        }
    }
    json rj = run_json(cfg, "params-sweep");
    rj["rows"] = xs.size();
    rj["ok"] = n_ok;
    rj["errors"] = n_err;
    rj["failures"] = failures;
    rj["frames"] = frames;
    write_json(out / "run.json", rj);
    std::printf("params-sweep: %zu rows, %d elliptic frames, %d errors -> %s\n", xs.size(), n_ok, n_err,
                (out / "params_sweep.csv").string().c_str());
    return n_err ? kExitNumerical : kExitOk;
}

int cmd_certify(const RunConfig& cfg)
{
    const fs::path out = prepare_out(cfg);
    const OutputMeta meta = meta_of(cfg, "certify");
    CertifyOptions opt;
    opt.grid_step = cfg.grid_step;
    opt.threads = cfg.threads;
    json files = json::array();
    bool all = true;
    for (std::size_t i = 0; i < cfg.betas.size(); ++i) {
        const double beta = cfg.betas[i];
        const PositivityCertificate cert = certify_positivity(beta, cfg.eps, opt);
        const auto [a0, x0] = alpha0_x0(beta);
        json j = certificate_to_json(cert, cfg.write_boxes);
        j["alpha0"] = a0;
        j["x0"] = x0;
        j["meta"] = meta.to_json();
        const std::string name = "certificate_beta_" + short_num(beta) + ".json";
        write_json(out / name, j);
        files.push_back(name);
        std::printf("beta %-8s %-15s boxes %-8zu min alpha %.10g at x = %.10g (alpha0 %.10g, x0 %.10g)\n",
                    short_num(beta).c_str(), status_name(cert.status).c_str(), cert.boxes.size(),
                    cert.min_alpha_found, cert.argmin_x, a0, x0);
        all = all && cert.status == CertStatus::Proved;
    }
    json rj = run_json(cfg, "certify");
    rj["certificates"] = files;
    rj["all_proved"] = all;
    write_json(out / "run.json", rj);
    return all ? kExitOk : kExitNumerical;
}

int cmd_field_eval(const RunConfig& cfg)
{
    const SpectralConstants c = constants_of(cfg);
    FieldEvaluator ev(c, quad_of(cfg));
    std::vector<double> xs = linspace(cfg.x_min, cfg.x_max, cfg.x_steps);
    jitter(xs, cfg.seed);

    struct Cell {
        double x, t, xi;
        std::string region;
        FieldTriple f;
        std::string message;
    };
    const FieldTriple blank{{kNaN, kNaN}, {kNaN, kNaN}, kNaN};
    std::vector<Cell> cells;
    for (double t : cfg.times)
        for (double x : xs) cells.push_back({x, t, slow_variable(x, t), "", blank, ""});
    parallel_for(cells.size(), cfg.threads, [&](std::size_t i) {
        Cell& cell = cells[i];
        cell.region = region_name(ev.region(cell.x, cell.t).region);
        try {
            cell.f = ev(cell.x, cell.t);
        } catch (const BorderError& e) {
            cell.region = "border";
            cell.message = e.what();
        } catch (const DomainError& e) {
            cell.region = "refused";
            cell.message = e.what();
        } catch (const Error& e) {
            cell.region = "error";
            cell.message = e.what();
        }
    });

    const fs::path out = prepare_out(cfg);
    OutputMeta meta = meta_of(cfg, "field-eval");
    meta.extra.emplace_back("elliptic_mu_carrier", "g_hat_inf");
    meta.extra.emplace_back("dispersive_mu_nu", "leading order 0, -1");
    CsvWriter w(out / "field.csv", meta, {"x", "t", "xi", "region", "re_q", "im_q", "abs_q", "re_mu", "im_mu", "nu"});
    int n_err = 0;
    json failures = json::array();
    for (const Cell& cell : cells) {
        w.num(cell.x).num(cell.t).num(cell.xi).str(cell.region);
        w.num(cell.f.q.real()).num(cell.f.q.imag()).num(std::abs(cell.f.q));
        w.num(cell.f.mu.real()).num(cell.f.mu.imag()).num(cell.f.nu);
        w.end_row();
        if (cell.region == "error") ++n_err;
        if (!cell.message.empty())
            failures.push_back({{"x", cell.x}, {"t", cell.t}, {"region", cell.region}, {"message", cell.message}});
    }
    json rj = run_json(cfg, "field-eval");
    rj["points"] = cells.size();
    rj["errors"] = n_err;
    rj["flagged"] = failures;
    write_json(out / "run.json", rj);
    std::printf("field-eval: %zu points, %d errors -> %s\n", cells.size(), n_err,
                (out / "field.csv").string().c_str());
    return n_err ? kExitNumerical : kExitOk;
}

namespace {

void refuse_over_budget(double cost, double budget)
{
    if (cost > budget) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "refused: estimated %.3g node updates exceeds the budget of %.3g", cost, budget);
        throw BudgetError(buf);
    }
}

}  // namespace

int cmd_pde_run(const RunConfig& cfg)
{
    const PhysicalParams p = PhysicalParams::make(cfg.l, cfg.omega);
    PdeOptions o;
    o.x_max = cfg.pde_x_max;
    o.t_max = cfg.t_max;
    o.dx = cfg.dx;
    o.dt = cfg.dt;
    o.phase_offset = cfg.phase_offset;
    o.max_node_updates = cfg.max_node_updates;
    o.snapshot_times = cfg.snapshot_times.empty() ? std::vector<double>{cfg.t_max} : cfg.snapshot_times;
    refuse_over_budget(estimated_node_updates(o), o.max_node_updates);

    const PdeResult r = integrate_srs(p, o);
    const fs::path out = prepare_out(cfg);
    const OutputMeta meta = meta_of(cfg, "pde-run");
    json snaps = json::array();
    for (const FieldGrid& g : r.snapshots) {
        const std::string name = "snapshot_t_" + short_num(g.t) + ".csv";
        write_field_snapshot(out / name, g, meta);
        snaps.push_back({{"t", g.t}, {"file", name}, {"conservation_residual", conservation_residual(g)}});
    }
    json rj = run_json(cfg, "pde-run");
    rj["scheme"] = kSchemeName;
    rj["steps"] = r.steps;
    rj["node_updates"] = r.node_updates;
    rj["max_conservation_residual"] = r.max_conservation;
    rj["snapshots"] = snaps;
    write_json(out / "run.json", rj);
    std::printf("pde-run: %ld steps, max |nu^2 + |mu|^2 - 1| = %.3e, %zu snapshots\n", r.steps, r.max_conservation,
                r.snapshots.size());
    return kExitOk;
}

int cmd_sign_map(const RunConfig& cfg)
{
    const SpectralConstants c = constants_of(cfg);
    const QuadOptions q = quad_of(cfg);
    PhaseContext ctx;
    ctx.xi = cfg.map_xi;
    ctx.phase = cfg.phase == "g0" ? PhaseSelector::G0 : cfg.phase == "ghat" ? PhaseSelector::GHat : PhaseSelector::Theta;
    if (ctx.phase == PhaseSelector::GHat) {
        if (classify_region(cfg.map_xi, c).region != Region::EllipticWave)
            throw UsageError("the ghat sign map needs xi inside the elliptic interval");
        ctx.gp = solve_genus1(cfg.map_xi, c, q);
    }
    SignWindow win{cfg.re_min, cfg.re_max, cfg.im_min, cfg.im_max};
    const SignMap m = sign_map(ctx, c, win, cfg.map_n, q);

    const fs::path out = prepare_out(cfg);
    OutputMeta meta = meta_of(cfg, "sign-map");
    meta.extra.emplace_back("phase", cfg.phase);
    meta.extra.emplace_back("xi", fmt17(cfg.map_xi));
    meta.extra.emplace_back("value", "sign of the imaginary part, 0 on cuts and unresolved points");
    CsvWriter w(out / "sign_map.csv", meta, {"k_re", "k_im", "value"});
    for (std::size_t i = 0; i < m.points.size(); ++i) {
        w.num(m.points[i].real()).num(m.points[i].imag()).num(m.signs[i]);
        w.end_row();
    }
    json rj = run_json(cfg, "sign-map");
    rj["points"] = m.points.size();
    if (ctx.phase == PhaseSelector::GHat) {
        const BandContours b = trace_band(ctx.gp, c, cfg.band_step, q);
        OutputMeta bm = meta;
        bm.extra.back() = {"value", "curve id: 0 upper E->d, 1 upper d->lambda_minus, 2 lower E->d, 3 lower d->lambda_minus"};
        CsvWriter bw(out / "band.csv", bm, {"k_re", "k_im", "value"});
        const std::vector<cplx>* curves[] = {&b.gamma_d, &b.gamma_lambda, &b.gamma_d_bar, &b.gamma_lambda_bar};
        for (int id = 0; id < 4; ++id)
            for (cplx k : *curves[id]) {
                bw.num(k.real()).num(k.imag()).num(id);
                bw.end_row();
            }
        rj["band"] = {{"end_miss_d", b.end_miss_d},
                      {"end_miss_lambda", b.end_miss_lambda},
                      {"max_im_g", b.max_im_g},
                      {"conj_mismatch", b.conj_mismatch},
                      {"d", {ctx.gp.d.real(), ctx.gp.d.imag()}},
                      {"lambda_minus", ctx.gp.lambda_minus},
                      {"lambda_plus", ctx.gp.lambda_plus}};
    }
    write_json(out / "run.json", rj);
    std::printf("sign-map: %zu points (%s at xi = %g)\n", m.points.size(), cfg.phase.c_str(), cfg.map_xi);
    return kExitOk;
}

namespace {

struct Check {
    std::string name;
    bool pass;
    json detail;
};

double identity_residual(const SpectralConstants& c, std::uint64_t seed, int n)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(-4.0, 4.0), im(-3.0, 3.0);
    double worst = 0.0;
    for (int done = 0; done < n;) {
        const cplx k(re(rng), im(rng));
        if (std::abs(k) < 1e-3 || on_arc(k, c, 1e-6)) continue;
        try {
            const ScatteringValues s = scattering_functions(k, c);
            worst = std::max(worst, std::abs(s.A * s.A - s.B * s.B - 1.0));
            ++done;
        } catch (const SingularityError&) {
        }
    }
    return worst;
}

}  // namespace

int cmd_validate(const RunConfig& cfg)
{
    const SpectralConstants c = constants_of(cfg);
    const PhysicalParams& p = c.params;
    const fs::path out = prepare_out(cfg);
    const OutputMeta meta = meta_of(cfg, "validate");

    PdeOptions cons;
    cons.x_max = 20.0;
    cons.t_max = 50.0;
    cons.dx = 0.02;
    cons.dt = 0.02;
    cons.snapshot_times = {50.0};
    PdeOptions plane;
    plane.dx = 0.005;
    plane.dt = 0.01;
    plane.probe_xi = {1.5 * c.xi0};
    plane.t_max = 4.0 * cfg.plane_t + 2.0 * kPi / p.omega + 1.0;
    plane.x_max = 1.1 * plane.t_max / (4.0 * plane.probe_xi[0] * plane.probe_xi[0]) + 4.0 * plane.dx;
    PdeOptions disp;
    disp.dx = 0.02;
    disp.dt = 0.02;
    disp.t_max = cfg.dispersive_t;
    const double xi_lo = *std::min_element(cfg.dispersive_xi.begin(), cfg.dispersive_xi.end());
    disp.x_max = 1.1 * disp.t_max / (4.0 * xi_lo * xi_lo) + 1.0;
    disp.snapshot_times = {disp.t_max};
    for (PdeOptions* o : {&cons, &plane, &disp}) o->max_node_updates = cfg.max_node_updates;
    refuse_over_budget(estimated_node_updates(cons) + estimated_node_updates(plane) + estimated_node_updates(disp),
                       cfg.max_node_updates);

    std::vector<Check> checks;

    const PdeResult rc = integrate_srs(p, cons);
    checks.push_back({"conservation", rc.max_conservation < 1e-6,
                      {{"max_residual", rc.max_conservation}, {"t_max", cons.t_max}, {"limit", 1e-6}}});

    FieldEvaluator ev(c, quad_of(cfg));
    const FieldGrid& g50 = rc.snapshots.front();
    const std::vector<ComparisonRow> cmp = compare_asymptotic(g50, ev, 25);
    {
        OutputMeta m = meta;
        m.extra.emplace_back("t", fmt17(g50.t));
        CsvWriter w(out / "validate_compare.csv", m,
                    {"x", "t", "xi", "region", "abs_q_num", "abs_q_asym", "nu_num", "nu_asym", "abs_q_error"});
        for (const ComparisonRow& r : cmp) {
            w.num(r.x).num(r.t).num(r.xi).str(region_name(r.region)).num(std::abs(r.q_num)).num(std::abs(r.q_asym));
            w.num(r.nu_num).num(r.nu_asym).num(r.abs_q_error);
            w.end_row();
        }
    }

    const PdeResult rp = integrate_srs(p, plane);
    const double t0 = cfg.plane_t;
    const double e_q = plane_wave_envelope_error(rp.probes[0], t0 / 4.0, c);
    const double e_1 = plane_wave_envelope_error(rp.probes[0], t0, c);
    const double e_4 = plane_wave_envelope_error(rp.probes[0], 4.0 * t0, c);
    checks.push_back({"plane_wave_decay", e_4 / e_1 <= 0.7,
                      {{"xi", plane.probe_xi[0]},
                       {"t", t0},
                       {"error_t", e_1},
                       {"error_4t", e_4},
                       {"ratio", e_4 / e_1},
                       {"limit", 0.7},
                       {"earlier_pair", {{"t", t0 / 4.0}, {"error_t", e_q}, {"ratio", e_1 / e_q}}}}});

    const PdeResult rd = integrate_srs(p, disp);
    json env = json::array();
    bool env_ok = true;
    for (double xi : cfg.dispersive_xi) {
        const EnvelopeCheck e = dispersive_envelope_check(rd.snapshots.front(), xi, c);
        const double ratio = e.numeric / e.predicted;
        env_ok = env_ok && std::abs(ratio - 1.0) <= 0.3;
        env.push_back({{"xi", xi}, {"x", e.x}, {"numeric", e.numeric}, {"predicted", e.predicted}, {"ratio", ratio}});
    }
    checks.push_back({"dispersive_envelope", env_ok, {{"t", disp.t_max}, {"limit", 0.3}, {"points", env}}});

    const double ab = identity_residual(c, cfg.seed.value_or(20240531u), 1000);
    checks.push_back({"A2_minus_B2", ab < 1e-12, {{"max_residual", ab}, {"points", 1000}}});

    double eta_min = 1.0;
    for (int i = 1; i <= 400; ++i) {
        const double k = -4.0 + 8.0 * (i - 0.5) / 400.0;
        eta_min = std::min(eta_min, eta_of(k, c));
    }
    checks.push_back({"eta_nonnegative", eta_min >= 0.0, {{"min_eta", eta_min}}});

    const auto [a0, x0] = alpha0_x0(p.beta());
    const double a0_rel = std::abs(a0 / std::pow(2.0 * p.omega * c.xi0, 2) - 1.0);
    checks.push_back({"alpha0_vs_border", a0_rel < 1e-12, {{"alpha0", a0}, {"x0", x0}, {"relative_error", a0_rel}}});

    bool all = true;
    json report = json::array();
    for (const Check& ck : checks) {
        all = all && ck.pass;
        report.push_back({{"check", ck.name}, {"pass", ck.pass}, {"detail", ck.detail}});
        std::printf("%-22s %s\n", ck.name.c_str(), ck.pass ? "pass" : "FAIL");
    }
    json rj = run_json(cfg, "validate");
    rj["scheme"] = kSchemeName;
    rj["checks"] = report;
    rj["all_pass"] = all;
    rj["comparison_rows"] = cmp.size();
    write_json(out / "validation_report.json", rj);
    return all ? kExitOk : kExitNumerical;
}

int run(int argc, char** argv)
{
    CLI::App app{"Whitham parameters, asymptotics and direct integration for the SRS boundary problem", "srs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", SRS_VERSION);

    std::string config_path;
    std::optional<double> l, omega, xi_min, xi_max, tol_quad;
    std::optional<int> xi_steps, threads;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    app.add_option("--l", l, "boundary value of nu, in (-1, 0)");
    app.add_option("--omega", omega, "boundary frequency");
    app.add_option("--xi-min", xi_min);
    app.add_option("--xi-max", xi_max);
    app.add_option("--xi-steps", xi_steps);
    app.add_option("--out", out, "output directory (SRS_OUT_DIR overrides)");
    app.add_option("--tol-quad", tol_quad, "quadrature tolerance");
    app.add_option("--seed", seed, "grid jitter seed");
    app.add_option("--threads", threads, "worker threads, 0 = all cores");

    auto* sweep = app.add_subcommand("params-sweep", "solve the modulation system on a xi grid");
    auto* cert = app.add_subcommand("certify", "positivity certificate per beta");
    auto* field = app.add_subcommand("field-eval", "evaluate the asymptotic fields on an (x, t) grid");
    auto* pde = app.add_subcommand("pde-run", "integrate the boundary problem directly");
    auto* smap = app.add_subcommand("sign-map", "sign of Im phase on a k window");
    auto* val = app.add_subcommand("validate", "integrator + asymptotics + identities report");
    for (auto* s : {sweep, cert, field, pde, smap, val}) s->fallthrough();

    std::vector<double> betas, times, snaps;
    std::optional<double> eps, grid_step, fx_min, fx_max, px_max, t_max, dx, dt, phase_offset, budget, map_xi,
        band_step, plane_t, disp_t;
    std::optional<int> x_steps, map_n;
    std::optional<std::string> phase;
    bool boxes = false;
    cert->add_option("--beta", betas, "beta values");
    cert->add_option("--eps", eps);
    cert->add_option("--grid-step", grid_step);
    cert->add_flag("--boxes", boxes, "write every certified box");
    field->add_option("--x-min", fx_min);
    field->add_option("--x-max", fx_max);
    field->add_option("--x-steps", x_steps);
    field->add_option("--t", times, "evaluation times");
    pde->add_option("--x-max", px_max);
    pde->add_option("--t-max", t_max);
    pde->add_option("--dx", dx);
    pde->add_option("--dt", dt);
    pde->add_option("--snapshot", snaps, "snapshot times");
    pde->add_option("--phase-offset", phase_offset);
    for (auto* s : {pde, val}) s->add_option("--budget", budget, "max node updates");
    smap->add_option("--phase", phase, "theta, g0 or ghat");
    smap->add_option("--xi", map_xi);
    smap->add_option("--n", map_n);
    smap->add_option("--band-step", band_step);
    val->add_option("--plane-t", plane_t);
    val->add_option("--dispersive-t", disp_t);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        RunConfig cfg;
        if (!config_path.empty()) {
            std::ifstream is(config_path);
            json j;
            try {
                j = json::parse(is);
            } catch (const json::exception& e) {
                throw UsageError(std::string("cannot parse config: ") + e.what());
            }
            apply_json(cfg, j);
        }
        auto set = [](auto& dst, const auto& src) {
            if (src) dst = *src;
        };
        set(cfg.l, l);
        set(cfg.omega, omega);
        if (xi_min) cfg.xi_min = xi_min;
        if (xi_max) cfg.xi_max = xi_max;
        set(cfg.xi_steps, xi_steps);
        set(cfg.out_dir, out);
        set(cfg.tol_quad, tol_quad);
        if (seed) cfg.seed = seed;
        set(cfg.threads, threads);
        if (!betas.empty()) cfg.betas = betas;
        set(cfg.eps, eps);
        set(cfg.grid_step, grid_step);
        if (boxes) cfg.write_boxes = true;
        set(cfg.x_min, fx_min);
        set(cfg.x_max, fx_max);
        set(cfg.x_steps, x_steps);
        if (!times.empty()) cfg.times = times;
        set(cfg.pde_x_max, px_max);
        set(cfg.t_max, t_max);
        set(cfg.dx, dx);
        set(cfg.dt, dt);
        if (!snaps.empty()) cfg.snapshot_times = snaps;
        set(cfg.phase_offset, phase_offset);
        set(cfg.max_node_updates, budget);
        set(cfg.phase, phase);
        set(cfg.map_xi, map_xi);
        set(cfg.map_n, map_n);
        set(cfg.band_step, band_step);
        set(cfg.plane_t, plane_t);
        set(cfg.dispersive_t, disp_t);

        validate_config(cfg, command);
        if (command == "params-sweep") return cmd_params_sweep(cfg);
        if (command == "certify") return cmd_certify(cfg);
        if (command == "field-eval") return cmd_field_eval(cfg);
        if (command == "pde-run") return cmd_pde_run(cfg);
        if (command == "sign-map") return cmd_sign_map(cfg);
        return cmd_validate(cfg);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "srs %s: %s\n", command.c_str(), e.what());
        return kExitUsage;
    } catch (const BudgetError& e) {
        std::fprintf(stderr, "srs %s: %s\n", command.c_str(), e.what());
        return kExitUsage;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "srs %s: %s\n", command.c_str(), e.what());
        return kExitUsage;
    } catch (const Error& e) {
        std::fprintf(stderr, "srs %s: numerical failure: %s\n", command.c_str(), e.what());
        return kExitNumerical;
    } catch (const fs::filesystem_error& e) {
        std::fprintf(stderr, "srs %s: %s\n", command.c_str(), e.what());
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "srs %s: %s\n", command.c_str(), e.what());
        return kExitNumerical;
    }
}

}  // namespace srs::cli
