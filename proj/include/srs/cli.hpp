#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "srs/io.hpp"

namespace srs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    double l = -0.5;
    double omega = 0.5;
    // unset ends mean the open elliptic interval
    std::optional<double> xi_min, xi_max;
    int xi_steps = 50;
    std::string out_dir = "srs_out";
    double tol_quad = 1e-12;
    std::optional<std::uint64_t> seed;
    int threads = 0;

    // certify
    std::vector<double> betas = {0.25};
    double eps = 1e-3;
    double grid_step = 1e-3;
    bool write_boxes = false;

    // field-eval
    double x_min = 0.5, x_max = 40.0;
    int x_steps = 80;
    std::vector<double> times = {50.0};

    // pde-run
    double pde_x_max = 20.0, t_max = 50.0, dx = 0.02, dt = 0.02;
    std::vector<double> snapshot_times;
    double phase_offset = 0.0;
    double max_node_updates = 2e9;

    // sign-map
    std::string phase = "theta";
    double map_xi = 3.0;
    double re_min = -4.0, re_max = 4.0, im_min = -2.0, im_max = 2.0;
    int map_n = 101;
    double band_step = 1e-3;

    // validate
    double plane_t = 100.0;
    double dispersive_t = 100.0;
    std::vector<double> dispersive_xi = {0.6, 0.75, 0.9};

    json to_json() const;
};

// keys as in to_json(); unknown keys are a usage error
void apply_json(RunConfig& cfg, const json& j);
void validate_config(const RunConfig& cfg, const std::string& command);

// SRS_OUT_DIR wins over the configured directory
std::filesystem::path resolve_out_dir(const RunConfig& cfg);

// inclusive linspace when both ends are given, otherwise interior points of the elliptic interval
std::vector<double> xi_grid(const RunConfig& cfg);

int cmd_params_sweep(const RunConfig& cfg);
int cmd_certify(const RunConfig& cfg);
int cmd_field_eval(const RunConfig& cfg);
int cmd_pde_run(const RunConfig& cfg);
int cmd_sign_map(const RunConfig& cfg);
int cmd_validate(const RunConfig& cfg);

int run(int argc, char** argv);

}  // namespace srs::cli
