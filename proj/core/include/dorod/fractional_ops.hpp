#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dorod/mesh.hpp"

namespace dorod {

// Rows c_ij so that the operator at point i is sum_j c_ij u_j.
struct frac_stencil {
    double alpha;
    Eigen::MatrixXd coeffs;

    Eigen::VectorXd apply(const Eigen::VectorXd& u) const { return coeffs * u; }
};

// L1 Caputo derivatives at node i. The kernel integral over each cell is done
// in closed form. Require 0 < alpha < 1.
double caputo_left(const mesh1d& mesh, double alpha, const nodal_field& u, int i);
double caputo_right(const mesh1d& mesh, double alpha, const nodal_field& u, int i);

// 1/2 (left - right) at every node; 0 < alpha < 1.
frac_stencil riesz_stress_stencil(const mesh1d& mesh, double alpha);

// Same operator at arbitrary points of [0, L]. Accepts the closed range
// 0 <= alpha <= 1 through the analytic limits (alpha = 1: one-sided
// first differences, alpha = 0: plain function differences).
frac_stencil riesz_stress_stencil_at(const mesh1d& mesh, double alpha,
                                     const std::vector<double>& points);
frac_stencil caputo_left_stencil_at(const mesh1d& mesh, double alpha,
                                    const std::vector<double>& points);
frac_stencil caputo_right_stencil_at(const mesh1d& mesh, double alpha,
                                     const std::vector<double>& points);

// 1/2 (left - right) of the square of the piecewise-linear interpolant of u,
// exact on each cell. Closed range 0 <= alpha <= 1.
Eigen::VectorXd riesz_of_square_at(const mesh1d& mesh, double alpha, const nodal_field& u,
                                   const std::vector<double>& points);

// Left derivative written in relative displacements u_i - u_j (Marchaud type),
// using the lattice coefficients of the long-range springs. 0 < alpha < 1.
double marchaud_left(const mesh1d& mesh, double alpha, const nodal_field& u, int i);

namespace detail {
// t^p for t > 0, the one-sided limit 0 at t = 0 (also for p = 0)
double pow0(double t, double p);
void check_open_order(double alpha);
void check_closed_order(double alpha);
}  // namespace detail

}  // namespace dorod
