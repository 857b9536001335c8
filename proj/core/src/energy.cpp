#include "dorod/energy.hpp"

namespace dorod {

Eigen::VectorXd gradient(const mesh1d& mesh, const Eigen::VectorXd& v) {
    const int n = mesh.intervals();
    const double h = mesh.spacing();
    Eigen::VectorXd d(n + 1);
    if (n == 1) {
        d.setConstant((v[1] - v[0]) / h);
        return d;
    }
    for (int i = 1; i < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2 * h);
    d[0] = (-3 * v[0] + 4 * v[1] - v[2]) / (2 * h);
    d[n] = (3 * v[n] - 4 * v[n - 1] + v[n - 2]) / (2 * h);
    return d;
}

double trapezoid(const mesh1d& mesh, const Eigen::VectorXd& v) {
    const int n = mesh.intervals();
    return mesh.spacing() * (v.sum() - 0.5 * (v[0] + v[n]));
}

Eigen::VectorXd density_c1(const rod_problem& p, const do_operator& op, const nodal_field& u) {
    const Eigen::VectorXd du = gradient(p.mesh, u);
    const Eigen::VectorXd dfrac = op.nodal() * u;
    return 0.5 * p.EA() * du.cwiseProduct(dfrac);
}

c2_density density_c2(const rod_problem& p, const do_operator& op, const nodal_field& u) {
    const int n = p.mesh.intervals();
    const double EA = p.EA();
    const Eigen::VectorXd dfrac = op.nodal() * u;
    const Eigen::VectorXd dfrac_sq = op.of_square(u);
    Eigen::VectorXd bulk = EA * (0.25 * gradient(p.mesh, dfrac_sq) -
                                 0.5 * u.cwiseProduct(gradient(p.mesh, dfrac)));
    const auto b = [&](int i) { return EA * (0.25 * dfrac_sq[i] - 0.5 * u[i] * dfrac[i]); };
    return {std::move(bulk), b(0), b(n)};
}

Eigen::VectorXd density_m(const lattice_model& model, const nodal_field& u) {
    const Eigen::MatrixXd& K = model.K();
    const Eigen::Index N = K.rows();
    Eigen::VectorXd e = Eigen::VectorXd::Zero(N);
    for (Eigen::Index i = 0; i < N; ++i)
        for (Eigen::Index j = 0; j < N; ++j)
            if (j != i) e[i] += 0.25 * K(i, j) * (u[j] - u[i]) * (u[j] - u[i]);
    return e;
}

Eigen::VectorXd density_m1(const lattice_model& model, const nodal_field& u) {
    const Eigen::MatrixXd& K = model.K();
    const int N = static_cast<int>(K.rows());
    // spring (p,q) puts weight 1/(q-p) on interior span nodes and 1/(2(q-p)) on p and q;
    // accumulate with a difference array so the sweep stays O(N^2)
    Eigen::VectorXd inner = Eigen::VectorXd::Zero(N + 1);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(N);
    for (int p = 0; p < N; ++p)
        for (int q = p + 1; q < N; ++q) {
            const double du = u[q] - u[p];
            const double w = 0.5 * K(p, q) * du * du / (q - p);
            e[p] += 0.5 * w;
            e[q] += 0.5 * w;
            inner[p + 1] += w;
            inner[q] -= w;
        }
    double run = 0.0;
    for (int i = 0; i < N; ++i) {
        run += inner[i];
        e[i] += run;
    }
    return e;
}

energy_report totals(const rod_problem& p, const do_operator& op, const lattice_model& model,
                     const nodal_field& u_do, const nodal_field& u_lat) {
    energy_report r;
    const mesh1d& m = p.mesh;
    r.density_c1 = density_c1(p, op, u_do);
    c2_density c2 = density_c2(p, op, u_do);
    r.density_c2 = c2.bulk;
    r.boundary_left = c2.boundary_left;
    r.boundary_right = c2.boundary_right;
    r.density_m = density_m(model, u_lat);
    r.density_m1 = density_m1(model, u_lat);

    r.pi_c1 = trapezoid(m, r.density_c1);
    r.pi_c2 = trapezoid(m, r.density_c2) + r.boundary_left - r.boundary_right;
    r.pi_m = r.density_m.sum();
    r.pi_m1 = r.density_m1.sum();

    // Pi^M_1: the integral of a derivative, i.e. its bracket evaluated at the two ends,
    // with the operators evaluated pointwise at x = 0 and x = L
    const std::vector<double> ends{0.0, m.length()};
    const Eigen::VectorXd df = op.at_points(u_do, ends);
    const Eigen::VectorXd dsq = op.of_square_at_points(u_do, ends);
    const double uL = u_do[m.intervals()], u0 = u_do[0];
    const double EA = p.EA();
    r.pi_m_1 = EA * ((0.25 * dsq[1] - 0.5 * uL * df[1]) - (0.25 * dsq[0] - 0.5 * u0 * df[0]));
    r.pi_m_2 = r.pi_c1;
    r.pi_m_3 = r.boundary_left - r.boundary_right;
    r.cancellation_residual = r.pi_m_1 + r.pi_m_3;
    r.decomposition_residual = r.pi_c2 - (r.pi_m_1 + r.pi_m_2 + r.pi_m_3);
    return r;
}

}  // namespace dorod
