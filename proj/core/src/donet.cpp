#include "dorod/donet.hpp"

#include <cmath>

#include "dorod/fractional_ops.hpp"

namespace dorod {

do_operator::do_operator(const mesh1d& mesh, const order_distribution& dist)
    : mesh_(mesh), dist_(dist) {
    const int n = mesh.intervals();
    nodal_ = Eigen::MatrixXd::Zero(n + 1, n + 1);
    midpoint_ = Eigen::MatrixXd::Zero(n, n + 1);
    const auto xs = mesh.nodes();
    const auto xm = mesh.midpoints();
    for (const auto& q : dist.quadrature()) {
        nodal_ += q.weight * riesz_stress_stencil_at(mesh, q.alpha, xs).coeffs;
        midpoint_ += q.weight * riesz_stress_stencil_at(mesh, q.alpha, xm).coeffs;
    }
}

Eigen::VectorXd do_operator::of_square(const nodal_field& u) const {
    return of_square_at_points(u, mesh_.nodes());
}

Eigen::VectorXd do_operator::at_points(const nodal_field& u, const std::vector<double>& xs) const {
    Eigen::VectorXd s = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(xs.size()));
    for (const auto& q : dist_.quadrature())
        s += q.weight * riesz_stress_stencil_at(mesh_, q.alpha, xs).apply(u);
    return s;
}

Eigen::VectorXd do_operator::of_square_at_points(const nodal_field& u,
                                                 const std::vector<double>& xs) const {
    Eigen::VectorXd s = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(xs.size()));
    for (const auto& q : dist_.quadrature()) s += q.weight * riesz_of_square_at(mesh_, q.alpha, u, xs);
    return s;
}

stress_field stress(const rod_problem& problem, const nodal_field& u) {
    return stress(problem, do_operator(problem.mesh, problem.dist), u);
}

stress_field stress(const rod_problem& problem, const do_operator& op, const nodal_field& u) {
    if (u.size() != problem.mesh.node_count()) throw domain_error("field size does not match mesh");
    return {problem.E * (op.nodal() * u), problem.E * (op.midpoint() * u)};
}

nodal_field solve_static(const rod_problem& problem) {
    return solve_static(problem, do_operator(problem.mesh, problem.dist));
}

nodal_field solve_static(const rod_problem& problem, const do_operator& op) {
    problem.validate();
    const mesh1d& m = problem.mesh;
    const int n = m.intervals();
    const double dx = m.spacing(), EA = problem.EA();
    const Eigen::MatrixXd& S = op.midpoint();

    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n + 1, n + 1);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
    M(0, 0) = 1.0;
    for (int i = 1; i < n; ++i) {
        M.row(i) = EA * (S.row(i) - S.row(i - 1)) / dx;
        rhs[i] = -problem.load(m.x(i));
    }
    if (problem.bc.is_traction()) {
        // -A sigma(x_{n-1/2}) + f dx/2 + P = 0
        M.row(n) = EA * S.row(n - 1);
        rhs[n] = problem.bc.end_force(m) + 0.5 * dx * problem.load(m.length());
    } else {
        M(n, n) = 1.0;
        rhs[n] = problem.bc.value;
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
    const double rc = lu.rcond();
    if (!(rc > 1e-13))
        throw solver_error("insufficient constraints: continuum system is singular (rcond estimate " +
                               format_number(rc) + ")",
                           rc);
    nodal_field u = lu.solve(rhs);
    if (!u.allFinite()) throw solver_error("continuum solve produced non-finite values", rc);
    return u;
}

discrepancy_report discrepancy(const nodal_field& a, const nodal_field& b) {
    if (a.size() != b.size()) throw domain_error("fields live on different meshes");
    Eigen::Index k = 0;
    const double absd = (a - b).cwiseAbs().maxCoeff(&k);
    const double scale = std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());
    return {scale > 0 ? absd / scale : 0.0, absd, static_cast<int>(k)};
}

discrepancy_report compare_with_mslm(const rod_problem& problem) {
    const nodal_field u_do = solve_static(problem);
    const lattice_model lat = assemble(problem.mesh, problem.EA(), problem.dist);
    const nodal_field u_lat = solve_static(lat, problem.bc, problem.load);
    return discrepancy(u_do, u_lat);
}

}  // namespace dorod
