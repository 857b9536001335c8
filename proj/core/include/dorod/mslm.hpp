#pragma once

#include <Eigen/Dense>

#include "dorod/order_distribution.hpp"
#include "dorod/problem.hpp"

namespace dorod {

// Spring constant between nodes i and j of the constant-order lattice. 0 < alpha < 1.
double spring_stiffness_co(const mesh1d& mesh, double EA, double alpha, int i, int j);

// Same closed forms continued to alpha in {0, 1} by their limits.
double spring_stiffness_limit(const mesh1d& mesh, double EA, double alpha, int i, int j);

// Dense lattice. Off-diagonal K(i,j) = k_ij, K(i,i) = -sum_{j != i} k_ij, so that
// (K u)_i = sum_j k_ij (u_j - u_i).
class lattice_model {
public:
    lattice_model(mesh1d mesh, double EA, Eigen::MatrixXd K)
        : mesh_(mesh), EA_(EA), K_(std::move(K)) {}

    const mesh1d& mesh() const noexcept { return mesh_; }
    double EA() const noexcept { return EA_; }
    const Eigen::MatrixXd& K() const noexcept { return K_; }
    double k(int i, int j) const { return K_(i, j); }

private:
    mesh1d mesh_;
    double EA_;
    Eigen::MatrixXd K_;
};

lattice_model assemble(const mesh1d& mesh, double EA, const order_distribution& dist);

// F_i = f(x_i) dx inside, f dx / 2 at both ends, plus the end force under traction.
Eigen::VectorXd external_forces(const mesh1d& mesh, const boundary_condition& bc,
                                const body_load& load);

nodal_field solve_static(const lattice_model& model, const boundary_condition& bc,
                         const body_load& load);

// Net spring force on the end node: sum_j k_0j (u_j - u_0), mirrored at x_n.
double boundary_force(const lattice_model& model, const nodal_field& u, rod_end end);

}  // namespace dorod
