#include "dorod/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace dorod {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

double positive_number(const std::string& v, const std::string& key, int line) {
    char* end = nullptr;
    const double d = std::strtod(v.c_str(), &end);
    if (v.empty() || *end != '\0') throw config_error(line, "'" + key + "' expects a number, got '" + v + "'");
    if (!(d > 0)) throw config_error(line, "'" + key + "' must be positive");
    return d;
}

int positive_int(const std::string& v, const std::string& key, int line) {
    char* end = nullptr;
    const long d = std::strtol(v.c_str(), &end, 10);
    if (v.empty() || *end != '\0') throw config_error(line, "'" + key + "' expects an integer, got '" + v + "'");
    if (d < 1 || d > 100000) throw config_error(line, "'" + key + "' is out of range");
    return static_cast<int>(d);
}

bool parse_bool(const std::string& v, const std::string& key, int line) {
    const std::string s = lower(v);
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    throw config_error(line, "'" + key + "' expects true or false");
}

std::string slug(const std::string& spec) {
    std::string s;
    for (char c : spec) {
        if (c == ' ') s += '_';
        else if (c != '=') s += c;
    }
    return s;
}

struct preset_def {
    double f;
    std::vector<std::string> dists;
};

preset_def preset_table(preset_kind p) {
    if (p == preset_kind::case1)
        return {0.0, {"uniform", "linear", "beta a=2 b=5", "truncnormal loc=0.9 scale=0.15"}};
    return {5.0,
            {"uniform", "truncnormal loc=0.7 scale=0.5", "truncnormal loc=0.7 scale=0.25",
             "dirac alpha=0.7"}};
}

// right-end conditions of the presets: u(L) = 1, or traction 10 spread over the last cell
const std::vector<std::string> preset_bcs = {"dbc:1", "tbc:10:cell"};

}  // namespace

std::string to_string(preset_kind p) {
    switch (p) {
    case preset_kind::case1: return "case1";
    case preset_kind::case2: return "case2";
    case preset_kind::lattice2d: return "lattice2d";
    case preset_kind::custom: break;
    }
    return "custom";
}

std::string to_string(solver_choice s) {
    switch (s) {
    case solver_choice::donet: return "donet";
    case solver_choice::mslm: return "mslm";
    case solver_choice::both: break;
    }
    return "both";
}

preset_kind parse_preset(std::string_view s, int line) {
    const std::string v = lower(trim(s));
    if (v == "custom") return preset_kind::custom;
    if (v == "case1") return preset_kind::case1;
    if (v == "case2") return preset_kind::case2;
    if (v == "lattice2d" || v == "lattice2d-demo") return preset_kind::lattice2d;
    throw config_error(line, "unknown preset '" + std::string(s) + "'");
}

solver_choice parse_solver(std::string_view s, int line) {
    const std::string v = lower(trim(s));
    if (v == "donet") return solver_choice::donet;
    if (v == "mslm") return solver_choice::mslm;
    if (v == "both") return solver_choice::both;
    throw config_error(line, "unknown solver '" + std::string(s) + "'");
}

void set_dist(run_config& cfg, std::string_view spec, int line) {
    try {
        cfg.dist = order_distribution::parse(trim(spec), 1).spec();
    } catch (const std::exception& e) {
        throw config_error(line, e.what());
    }
}

void set_bc(run_config& cfg, std::string_view spec, int line) {
    const std::string v = lower(trim(spec));
    if (v == "dbc" || v == "tbc") {
        cfg.bc = v;
        return;
    }
    try {
        cfg.bc = boundary_condition::parse(v).spec();
    } catch (const std::exception& e) {
        throw config_error(line, e.what());
    }
}

void set_load(run_config& cfg, std::string_view spec, int line) {
    try {
        cfg.load = body_load::parse(trim(spec)).spec();
    } catch (const std::exception& e) {
        throw config_error(line, e.what());
    }
}

run_config parse_config(std::string_view text) {
    run_config cfg;
    std::istringstream in{std::string(text)};
    std::string raw, section;
    std::vector<std::string> seen;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        if (const auto c = s.find_first_of("#;"); c != std::string::npos) s.erase(c);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw config_error(line, "unterminated section header");
            section = lower(trim(s.substr(1, s.size() - 2)));
            static const std::vector<std::string> known = {"experiment", "problem", "distribution",
                                                           "bc", "load", "output"};
            if (std::find(known.begin(), known.end(), section) == known.end())
                throw config_error(line, "unknown section [" + section + "]");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw config_error(line, "expected key = value");
        const std::string key = lower(trim(s.substr(0, eq)));
        const std::string val = trim(s.substr(eq + 1));
        if (section.empty()) throw config_error(line, "key '" + key + "' outside any section");
        const std::string full = section + "." + key;
        if (std::find(seen.begin(), seen.end(), full) != seen.end())
            throw config_error(line, "duplicate key '" + full + "'");
        seen.push_back(full);

        if (full == "experiment.preset") cfg.preset = parse_preset(val, line);
        else if (full == "problem.length") cfg.length = positive_number(val, key, line);
        else if (full == "problem.e") cfg.E = positive_number(val, key, line);
        else if (full == "problem.a") cfg.A = positive_number(val, key, line);
        else if (full == "problem.n") {
            cfg.n = positive_int(val, key, line);
            if (cfg.n < 2) throw config_error(line, "'n' must be at least 2");
        } else if (full == "problem.n_alpha") cfg.n_alpha = positive_int(val, key, line);
        else if (full == "distribution.spec") set_dist(cfg, val, line);
        else if (full == "bc.right") set_bc(cfg, val, line);
        else if (full == "load.body") set_load(cfg, val, line);
        else if (full == "output.dir") {
            if (val.empty()) throw config_error(line, "'dir' must not be empty");
            cfg.out_dir = val;
        } else if (full == "output.solver") cfg.solver = parse_solver(val, line);
        else if (full == "output.stiffness_report") cfg.stiffness_report = parse_bool(val, key, line);
        else throw config_error(line, "unknown key '" + key + "' in section [" + section + "]");
    }
    return cfg;
}

run_config load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw config_error(0, "cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

std::string serialize(const run_config& c) {
    std::ostringstream o;
    o << "[experiment]\npreset = " << to_string(c.preset) << "\n\n";
    o << "[problem]\nlength = " << format_number(c.length) << "\nE = " << format_number(c.E)
      << "\nA = " << format_number(c.A) << "\nn = " << c.n << "\nn_alpha = " << c.n_alpha << "\n";
    if (c.dist) o << "\n[distribution]\nspec = " << *c.dist << "\n";
    if (c.bc) o << "\n[bc]\nright = " << *c.bc << "\n";
    if (c.load) o << "\n[load]\nbody = " << *c.load << "\n";
    o << "\n[output]\ndir = " << c.out_dir << "\nsolver = " << to_string(c.solver)
      << "\nstiffness_report = " << (c.stiffness_report ? "true" : "false") << "\n";
    return o.str();
}

std::vector<run_case> expand(const run_config& cfg) {
    std::vector<run_case> out;
    if (cfg.preset == preset_kind::lattice2d) return out;
    const bool preset = cfg.preset != preset_kind::custom;
    const mesh1d mesh(preset ? 1.0 : cfg.length, cfg.n);

    std::vector<std::string> dists, bcs;
    body_load load;
    double E = cfg.E, A = cfg.A;
    if (preset) {
        const preset_def p = preset_table(cfg.preset);
        dists = cfg.dist ? std::vector<std::string>{*cfg.dist} : p.dists;
        load = body_load::constant(p.f);
        E = A = 1.0;
        if (!cfg.bc) bcs = preset_bcs;
        else if (*cfg.bc == "dbc") bcs = {preset_bcs[0]};
        else if (*cfg.bc == "tbc") bcs = {preset_bcs[1]};
        else bcs = {*cfg.bc};
        if (cfg.load) load = body_load::parse(*cfg.load);
    } else {
        dists = {cfg.dist.value_or("uniform")};
        const std::string bc = cfg.bc.value_or("dbc:1");
        if (bc == "dbc" || bc == "tbc")
            throw config_error(0, "a bare '" + bc + "' needs a preset to supply its value");
        bcs = {bc};
        if (cfg.load) load = body_load::parse(*cfg.load);
    }
    const bool single = dists.size() == 1 && bcs.size() == 1;
    for (const auto& d : dists)
        for (const auto& b : bcs) {
            const boundary_condition bc = boundary_condition::parse(b);
            std::string name = single ? "" : slug(d) + "_" + (bc.is_traction() ? "tbc" : "dbc");
            out.push_back({name, rod_problem{mesh, E, A, order_distribution::parse(d, cfg.n_alpha),
                                             bc, load}});
        }
    return out;
}

}  // namespace dorod
