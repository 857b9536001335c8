#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dorod/config.hpp"
#include "dorod/energy.hpp"

namespace dorod {

struct case_result {
    run_case rc;
    std::optional<nodal_field> u_donet, u_mslm;
    nodal_field u_local;
    std::optional<energy_report> energy;  // fields not computed by the selected solver stay zero
    std::optional<discrepancy_report> disc;
};

case_result run_case_solve(const run_case& rc, solver_choice solver);

// Writes displacement.csv, energy.csv, summary.json (and stiffness.csv when asked)
// for every case; returns the directories written.
std::vector<std::filesystem::path> run(const run_config& cfg);

struct stiffness_fit {
    double diagonal_slope;      // log k vs log r along x_i + x_j = L
    double diagonal_f1_slope;   // same fit of f1
    double interior_slope;      // all interior non-adjacent pairs
    double boundary_slope;      // row 0, far half
    double boundary_f2_slope;
};

// Writes the stiffness grid with the decay reference curves and returns the fitted slopes.
stiffness_fit stiffness_report(const lattice_model& model, const order_distribution& dist,
                               const std::filesystem::path& csv);
stiffness_fit fit_stiffness(const lattice_model& model, const order_distribution& dist);

}  // namespace dorod
