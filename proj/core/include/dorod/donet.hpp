#pragma once

#include <Eigen/Dense>

#include "dorod/mslm.hpp"
#include "dorod/problem.hpp"

namespace dorod {

// The distributed-order Riesz operator  sum_r w_r kappa(alpha_r) d_alpha
// 1/2 (C_0 D_x^a - C_x D_L^a)  tabulated at the nodes and at the cell midpoints.
// Stress is E times this operator applied to u.
class do_operator {
public:
    do_operator(const mesh1d& mesh, const order_distribution& dist);

    const mesh1d& mesh() const noexcept { return mesh_; }
    const order_distribution& distribution() const noexcept { return dist_; }
    const Eigen::MatrixXd& nodal() const noexcept { return nodal_; }         // (n+1) x (n+1)
    const Eigen::MatrixXd& midpoint() const noexcept { return midpoint_; }   // n x (n+1)

    // operator applied to the square of the interpolant of u, at the nodes
    Eigen::VectorXd of_square(const nodal_field& u) const;
    // the same two quantities evaluated pointwise at arbitrary x
    Eigen::VectorXd at_points(const nodal_field& u, const std::vector<double>& xs) const;
    Eigen::VectorXd of_square_at_points(const nodal_field& u, const std::vector<double>& xs) const;

private:
    mesh1d mesh_;
    order_distribution dist_;
    Eigen::MatrixXd nodal_, midpoint_;
};

struct stress_field {
    Eigen::VectorXd nodes;      // sigma(x_i)
    Eigen::VectorXd midpoints;  // sigma(x_{i+1/2})
};

stress_field stress(const rod_problem& problem, const nodal_field& u);
stress_field stress(const rod_problem& problem, const do_operator& op, const nodal_field& u);

// Equilibrium E A D sigma + f = 0 at interior nodes, with D sigma taken as the
// central difference of the midpoint stresses. Under a traction condition the
// last row is the force balance of the half cell next to x = L.
nodal_field solve_static(const rod_problem& problem);
nodal_field solve_static(const rod_problem& problem, const do_operator& op);

struct discrepancy_report {
    double relative;      // max_i |u_do - u_lattice| / max_i |u|
    double absolute;
    int worst_node;
};

discrepancy_report discrepancy(const nodal_field& u_do, const nodal_field& u_lattice);
discrepancy_report compare_with_mslm(const rod_problem& problem);

}  // namespace dorod
