#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dorod/mesh.hpp"
#include "dorod/order_distribution.hpp"

namespace dorod {

enum class rod_end { left, right };

// How a right-end traction enters the discrete system.
//   point: nodal force T0 at node n
//   cell:  nodal force T0 * dx (traction acting over one cell)
enum class traction_mode { point, cell };

// Left end is always clamped; the right end carries either u(L)=u0 or a traction.
struct boundary_condition {
    enum class type { displacement, traction };

    type right = type::displacement;
    double value = 0.0;
    traction_mode mode = traction_mode::point;

    static boundary_condition displacement(double u0) { return {type::displacement, u0}; }
    static boundary_condition traction(double t0, traction_mode m = traction_mode::point) {
        return {type::traction, t0, m};
    }

    bool is_traction() const noexcept { return right == type::traction; }
    // force applied at node n under a traction condition
    double end_force(const mesh1d& mesh) const {
        return mode == traction_mode::cell ? value * mesh.spacing() : value;
    }

    // "dbc:1", "tbc:10", "tbc:10:cell"
    static boundary_condition parse(std::string_view s);
    std::string spec() const;

    friend bool operator==(const boundary_condition& a, const boundary_condition& b) {
        return a.right == b.right && a.value == b.value && a.mode == b.mode;
    }
};

// Axial force density f(x): constant or piecewise linear through (x, f) samples.
class body_load {
public:
    body_load() = default;
    static body_load constant(double f) { return body_load({{0.0, f}}); }
    static body_load tabulated(std::vector<std::pair<double, double>> samples);

    double operator()(double x) const;
    bool is_zero() const;
    const std::vector<std::pair<double, double>>& samples() const noexcept { return pts_; }

    // "5" or "table 0:5 0.5:4 1:3"
    static body_load parse(std::string_view s);
    std::string spec() const;

    friend bool operator==(const body_load& a, const body_load& b) { return a.pts_ == b.pts_; }

private:
    explicit body_load(std::vector<std::pair<double, double>> pts) : pts_(std::move(pts)) {}
    std::vector<std::pair<double, double>> pts_;  // empty: no load
};

struct rod_problem {
    mesh1d mesh;
    double E = 1.0;
    double A = 1.0;
    order_distribution dist;
    boundary_condition bc;
    body_load load;

    double EA() const { return E * A; }
    void validate() const;
};

std::string format_number(double v);

}  // namespace dorod
