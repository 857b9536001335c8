#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dorod/problem.hpp"

namespace dorod {

enum class preset_kind { custom, case1, case2, lattice2d };
enum class solver_choice { donet, mslm, both };

// Sectioned key = value text:
//   [experiment] preset
//   [problem]    length E A n n_alpha
//   [distribution] spec
//   [bc]         right          (dbc:1, tbc:10, tbc:10:cell, or bare dbc/tbc under a preset)
//   [load]       body           (5, table 0:5 1:3, none)
//   [output]     dir solver stiffness_report
struct run_config {
    preset_kind preset = preset_kind::custom;
    double length = 1.0;
    double E = 1.0;
    double A = 1.0;
    int n = 100;
    int n_alpha = 100;
    std::optional<std::string> dist;  // canonical spec
    std::optional<std::string> bc;    // canonical spec
    std::optional<std::string> load;  // canonical spec
    std::string out_dir = "out";
    solver_choice solver = solver_choice::both;
    bool stiffness_report = false;

    friend bool operator==(const run_config&, const run_config&) = default;
};

run_config parse_config(std::string_view text);
run_config load_config(const std::string& path);
std::string serialize(const run_config& cfg);

// canonicalizing setters, throw config_error on bad specs
void set_dist(run_config& cfg, std::string_view spec, int line = 0);
void set_bc(run_config& cfg, std::string_view spec, int line = 0);
void set_load(run_config& cfg, std::string_view spec, int line = 0);
preset_kind parse_preset(std::string_view s, int line = 0);
solver_choice parse_solver(std::string_view s, int line = 0);
std::string to_string(preset_kind p);
std::string to_string(solver_choice s);

// One solve: a named rod problem.
struct run_case {
    std::string name;
    rod_problem problem;
};

// Expand presets into their distribution x boundary-condition grid, narrowed by
// any explicit dist / bc in the config.
std::vector<run_case> expand(const run_config& cfg);

}  // namespace dorod
