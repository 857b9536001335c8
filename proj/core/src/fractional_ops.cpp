#include "dorod/fractional_ops.hpp"

#include <cmath>

namespace dorod {

namespace detail {

double pow0(double t, double p) { return t > 0 ? std::pow(t, p) : 0.0; }

void check_open_order(double alpha) {
    if (!(alpha > 0 && alpha < 1)) throw domain_error("fractional order must lie in (0,1)");
}

void check_closed_order(double alpha) {
    if (!(alpha >= 0 && alpha <= 1)) throw domain_error("fractional order must lie in [0,1]");
}

}  // namespace detail

namespace {

using detail::pow0;

// Snap distances that are round-off away from a node to zero.
double snap(double t, double scale) { return std::abs(t) < 1e-12 * scale ? 0.0 : t; }

// Weight of the slope on cell j in the left operator at x:
// 1/Gamma(1-a) * int_{cell, s<x} (x-s)^{-a} ds.
double left_cell_weight(const mesh1d& m, double a, double x, int j, double g2a) {
    const double L = m.length();
    const double tb = snap(x - m.x(j), L);
    if (tb <= 0) return 0.0;
    const double ta = std::max(0.0, snap(x - m.x(j + 1), L));
    return (pow0(tb, 1 - a) - pow0(ta, 1 - a)) / g2a;
}

double right_cell_weight(const mesh1d& m, double a, double x, int j, double g2a) {
    const double L = m.length();
    const double tb = snap(m.x(j + 1) - x, L);
    if (tb <= 0) return 0.0;
    const double ta = std::max(0.0, snap(m.x(j) - x, L));
    return (pow0(tb, 1 - a) - pow0(ta, 1 - a)) / g2a;
}

enum class side { left, right, riesz };

frac_stencil build(const mesh1d& m, double a, const std::vector<double>& pts, side s) {
    const int n = m.intervals();
    const double dx = m.spacing();
    const double g2a = std::tgamma(2 - a);
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(pts.size()), n + 1);
    for (std::size_t p = 0; p < pts.size(); ++p) {
        const double x = pts[p];
        for (int j = 0; j < n; ++j) {
            double w = 0.0;
            if (s != side::right) w += (s == side::riesz ? 0.5 : 1.0) * left_cell_weight(m, a, x, j, g2a);
            // the right operator carries a minus sign; the Riesz form subtracts it
            if (s != side::left) w += (s == side::riesz ? 0.5 : -1.0) * right_cell_weight(m, a, x, j, g2a);
            if (w == 0.0) continue;
            c(p, j + 1) += w / dx;
            c(p, j) -= w / dx;
        }
    }
    return {a, std::move(c)};
}

}  // namespace

double caputo_left(const mesh1d& mesh, double alpha, const nodal_field& u, int i) {
    detail::check_open_order(alpha);
    if (i < 0 || i > mesh.intervals()) throw domain_error("node index out of range");
    if (u.size() != mesh.node_count()) throw domain_error("field size does not match mesh");
    const double g2a = std::tgamma(2 - alpha);
    const double x = mesh.x(i);
    double s = 0.0;
    for (int j = 0; j < i; ++j)
        s += left_cell_weight(mesh, alpha, x, j, g2a) * (u[j + 1] - u[j]) / mesh.spacing();
    return s;
}

double caputo_right(const mesh1d& mesh, double alpha, const nodal_field& u, int i) {
    detail::check_open_order(alpha);
    if (i < 0 || i > mesh.intervals()) throw domain_error("node index out of range");
    if (u.size() != mesh.node_count()) throw domain_error("field size does not match mesh");
    const double g2a = std::tgamma(2 - alpha);
    const double x = mesh.x(i);
    double s = 0.0;
    for (int j = i; j < mesh.intervals(); ++j)
        s += right_cell_weight(mesh, alpha, x, j, g2a) * (u[j + 1] - u[j]) / mesh.spacing();
    return -s;
}

frac_stencil riesz_stress_stencil(const mesh1d& mesh, double alpha) {
    detail::check_open_order(alpha);
    return build(mesh, alpha, mesh.nodes(), side::riesz);
}

frac_stencil riesz_stress_stencil_at(const mesh1d& mesh, double alpha,
                                     const std::vector<double>& points) {
    detail::check_closed_order(alpha);
    return build(mesh, alpha, points, side::riesz);
}

frac_stencil caputo_left_stencil_at(const mesh1d& mesh, double alpha,
                                    const std::vector<double>& points) {
    detail::check_closed_order(alpha);
    return build(mesh, alpha, points, side::left);
}

frac_stencil caputo_right_stencil_at(const mesh1d& mesh, double alpha,
                                     const std::vector<double>& points) {
    detail::check_closed_order(alpha);
    return build(mesh, alpha, points, side::right);
}

Eigen::VectorXd riesz_of_square_at(const mesh1d& m, double a, const nodal_field& u,
                                   const std::vector<double>& points) {
    detail::check_closed_order(a);
    if (u.size() != m.node_count()) throw domain_error("field size does not match mesh");
    const int n = m.intervals();
    const double dx = m.spacing(), L = m.length();
    const double g2a = std::tgamma(2 - a), g3a = std::tgamma(3 - a);
    Eigen::VectorXd out(static_cast<Eigen::Index>(points.size()));
    for (std::size_t p = 0; p < points.size(); ++p) {
        const double x = points[p];
        double left = 0.0, right = 0.0;
        for (int j = 0; j < n; ++j) {
            // (u^2)'(s) = c0 + c1 (s - x_j) on the cell
            const double g = (u[j + 1] - u[j]) / dx;
            const double c0 = 2 * g * u[j], c1 = 2 * g * g;
            const double base = c0 + c1 * (x - m.x(j));
            double tb = snap(x - m.x(j), L);
            if (tb > 0) {
                const double ta = std::max(0.0, snap(x - m.x(j + 1), L));
                const double i0 = (pow0(tb, 1 - a) - pow0(ta, 1 - a)) / g2a;
                const double i1 = (1 - a) * (pow0(tb, 2 - a) - pow0(ta, 2 - a)) / g3a;
                left += base * i0 - c1 * i1;
            }
            tb = snap(m.x(j + 1) - x, L);
            if (tb > 0) {
                const double ta = std::max(0.0, snap(m.x(j) - x, L));
                const double i0 = (pow0(tb, 1 - a) - pow0(ta, 1 - a)) / g2a;
                const double i1 = (1 - a) * (pow0(tb, 2 - a) - pow0(ta, 2 - a)) / g3a;
                right -= base * i0 + c1 * i1;
            }
        }
        out[static_cast<Eigen::Index>(p)] = 0.5 * (left - right);
    }
    return out;
}

double marchaud_left(const mesh1d& mesh, double alpha, const nodal_field& u, int i) {
    detail::check_open_order(alpha);
    if (i < 0 || i > mesh.intervals()) throw domain_error("node index out of range");
    if (i == 0) return 0.0;
    const double dx = mesh.spacing(), xi = mesh.x(i);
    double s = (u[i] - u[0]) * std::pow(xi, -alpha);
    for (int j = 0; j <= i - 2; ++j)
        s += alpha * (u[i] - u[j]) * std::pow(xi - mesh.x(j), -(1 + alpha)) * dx;
    s += alpha / (1 - alpha) * std::pow(dx, -alpha) * (u[i] - u[i - 1]);
    return s / std::tgamma(1 - alpha);
}

}  // namespace dorod
