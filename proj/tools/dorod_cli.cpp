#include <iostream>

#include "CLI11.hpp"
#include "dorod/config.hpp"
#include "dorod/errors.hpp"
#include "dorod/run.hpp"

namespace {

constexpr int exit_config = 2;
constexpr int exit_solver = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distributed-order nonlocal rod: continuum and lattice solvers"};

    std::string config_path, preset, dist, bc, out, solver;
    int n = 0, n_alpha = 0;
    bool stiffness = false, print_config = false;
    app.add_option("--config", config_path, "config file (key = value with [sections])");
    app.add_option("--preset", preset, "case1, case2 or lattice2d");
    app.add_option("--dist", dist, "strength function, e.g. \"beta a=2 b=5\"");
    app.add_option("--bc", bc, "right end: dbc:VALUE, tbc:VALUE[:point|cell], or dbc/tbc with a preset");
    app.add_option("--n", n, "number of intervals");
    app.add_option("--nalpha", n_alpha, "number of order intervals");
    app.add_option("--out", out, "output directory");
    app.add_option("--solver", solver, "donet, mslm or both");
    app.add_flag("--stiffness-report", stiffness, "write stiffness.csv and decay fits");
    app.add_flag("--print-config", print_config, "print the resolved config and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    dorod::run_config cfg;
    try {
        if (!config_path.empty()) cfg = dorod::load_config(config_path);
        if (!preset.empty()) cfg.preset = dorod::parse_preset(preset);
        if (!dist.empty()) dorod::set_dist(cfg, dist);
        if (!bc.empty()) dorod::set_bc(cfg, bc);
        if (n != 0) {
            if (n < 2) throw dorod::config_error(0, "--n must be at least 2");
            cfg.n = n;
        }
        if (n_alpha != 0) {
            if (n_alpha < 1) throw dorod::config_error(0, "--nalpha must be positive");
            cfg.n_alpha = n_alpha;
        }
        if (!out.empty()) cfg.out_dir = out;
        if (!solver.empty()) cfg.solver = dorod::parse_solver(solver);
        if (stiffness) cfg.stiffness_report = true;
        if (print_config) {
            std::cout << dorod::serialize(cfg);
            return 0;
        }
        (void)dorod::expand(cfg);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    }

    try {
        for (const auto& dir : dorod::run(cfg)) std::cout << dir.string() << '\n';
    } catch (const dorod::domain_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return exit_solver;
    }
    return 0;
}
