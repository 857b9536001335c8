#pragma once

#include <Eigen/Dense>

#include "dorod/donet.hpp"
#include "dorod/mslm.hpp"

namespace dorod {

// Second-order finite-difference derivative on the mesh (one-sided at the ends).
Eigen::VectorXd gradient(const mesh1d& mesh, const Eigen::VectorXd& v);

// 1/2 EA Du * Du_frac
Eigen::VectorXd density_c1(const rod_problem& problem, const do_operator& op, const nodal_field& u);

struct c2_density {
    Eigen::VectorXd bulk;   // EA (1/4 D Du2_frac - 1/2 u D Du_frac)
    double boundary_left;   // EA (1/4 Du2_frac - 1/2 u Du_frac) at x = 0
    double boundary_right;  // same at x = L
};
c2_density density_c2(const rod_problem& problem, const do_operator& op, const nodal_field& u);

// 1/4 sum_j k_ij (u_j - u_i)^2
Eigen::VectorXd density_m(const lattice_model& model, const nodal_field& u);

// Each spring's energy spread over the nodes it spans with trapezoid weights.
Eigen::VectorXd density_m1(const lattice_model& model, const nodal_field& u);

struct energy_report {
    Eigen::VectorXd density_c1, density_c2, density_m, density_m1;
    double boundary_left = 0, boundary_right = 0;
    double pi_c1 = 0, pi_c2 = 0, pi_m = 0, pi_m1 = 0;
    // Pi^C2 = Pi^M_1 + Pi^M_2 + Pi^M_3
    double pi_m_1 = 0, pi_m_2 = 0, pi_m_3 = 0;
    double cancellation_residual = 0;   // Pi^M_1 + Pi^M_3
    double decomposition_residual = 0;  // Pi^C2 - (Pi^M_1 + Pi^M_2 + Pi^M_3)
};

energy_report totals(const rod_problem& problem, const do_operator& op, const lattice_model& model,
                     const nodal_field& u_donet, const nodal_field& u_mslm);

double trapezoid(const mesh1d& mesh, const Eigen::VectorXd& v);

}  // namespace dorod
