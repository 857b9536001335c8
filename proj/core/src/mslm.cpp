#include "dorod/mslm.hpp"

#include <cmath>
#include <string>

namespace dorod {

namespace {

// 1/Gamma(1-a), zero at a = 1
double rgamma1(double a) { return a >= 1 ? 0.0 : 1.0 / std::tgamma(1 - a); }

// the (1-a) denominators always appear as 1/((1-a) Gamma(1-a)) = 1/Gamma(2-a)
double rgamma2(double a) { return 1.0 / std::tgamma(2 - a); }

struct co_table {
    // interior pair at distance d (d >= 2), boundary pair at distance d (d >= 2, not (0,n))
    Eigen::VectorXd interior, boundary;
    double nearest_interior, nearest_boundary, end_to_end;
};

co_table co_stiffness(const mesh1d& m, double EA, double a) {
    const int n = m.intervals();
    const double dx = m.spacing(), L = m.length();
    const double g1 = rgamma1(a), g2 = rgamma2(a);
    const double c = 0.5 * EA * dx * g1;
    co_table t{Eigen::VectorXd::Zero(n + 1), Eigen::VectorXd::Zero(n + 1), 0, 0, 0};
    if (c != 0.0 && a != 0.0) {
        for (int d = 2; d <= n; ++d) {
            const double r = d * dx;
            const double r2 = std::pow(r, -(2 + a));
            t.interior[d] = c * a * (1 + a) * r2 * dx;
            t.boundary[d] = c * (a * std::pow(r, -(1 + a)) + a * (1 + a) * r2 * dx);
        }
    }
    t.nearest_interior = 0.5 * EA * dx * a * (1 + a) * g2 * std::pow(dx, -(1 + a));
    t.nearest_boundary = EA * a * g2 * std::pow(dx, -a);
    t.end_to_end = 0.5 * EA * g1 *
                   (std::pow(L, -a) + a * dx * std::pow(L, -(1 + a)) +
                    a * (1 + a) * dx * dx * std::pow(L, -(2 + a)));
    return t;
}

double pick(const co_table& t, int n, int i, int j) {
    if (i > j) std::swap(i, j);
    const int d = j - i;
    const bool bi = i == 0, bj = j == n;
    if (bi && bj) return t.end_to_end;
    if (d == 1) return (bi || bj) ? t.nearest_boundary : t.nearest_interior;
    return (bi || bj) ? t.boundary[d] : t.interior[d];
}

void check_pair(const mesh1d& m, int i, int j) {
    const int n = m.intervals();
    if (n < 2) throw domain_error("the lattice needs at least two intervals");
    if (i == j) throw domain_error("spring endpoints must differ");
    if (i < 0 || j < 0 || i > n || j > n) throw domain_error("node index out of range");
}

}  // namespace

double spring_stiffness_co(const mesh1d& mesh, double EA, double alpha, int i, int j) {
    if (!(alpha > 0 && alpha < 1)) throw domain_error("fractional order must lie in (0,1)");
    return spring_stiffness_limit(mesh, EA, alpha, i, j);
}

double spring_stiffness_limit(const mesh1d& mesh, double EA, double alpha, int i, int j) {
    if (!(alpha >= 0 && alpha <= 1)) throw domain_error("fractional order must lie in [0,1]");
    check_pair(mesh, i, j);
    return pick(co_stiffness(mesh, EA, alpha), mesh.intervals(), i, j);
}

lattice_model assemble(const mesh1d& mesh, double EA, const order_distribution& dist) {
    const int n = mesh.intervals();
    if (n < 2) throw domain_error("the lattice needs at least two intervals");
    if (!(EA > 0)) throw domain_error("EA must be positive");
    // every k_ij depends on (i, j) only through its case and distance, so the
    // order quadrature runs over the per-case tables
    co_table acc{Eigen::VectorXd::Zero(n + 1), Eigen::VectorXd::Zero(n + 1), 0, 0, 0};
    for (const auto& q : dist.quadrature()) {
        const co_table t = co_stiffness(mesh, EA, q.alpha);
        const auto bad = [&](double v) { return !std::isfinite(v); };
        if (bad(t.end_to_end) || bad(t.nearest_boundary) || bad(t.nearest_interior) ||
            !t.interior.allFinite() || !t.boundary.allFinite())
            throw singular_integrand(q.alpha, "non-finite stiffness at order node alpha=" +
                                                  format_number(q.alpha));
        acc.interior += q.weight * t.interior;
        acc.boundary += q.weight * t.boundary;
        acc.nearest_interior += q.weight * t.nearest_interior;
        acc.nearest_boundary += q.weight * t.nearest_boundary;
        acc.end_to_end += q.weight * t.end_to_end;
    }
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) K(i, j) = K(j, i) = pick(acc, n, i, j);
    for (int i = 0; i <= n; ++i) K(i, i) = -K.row(i).sum();
    return {mesh, EA, std::move(K)};
}

Eigen::VectorXd external_forces(const mesh1d& mesh, const boundary_condition& bc,
                                const body_load& load) {
    const int n = mesh.intervals();
    const double dx = mesh.spacing();
    Eigen::VectorXd F(n + 1);
    for (int i = 0; i <= n; ++i) F[i] = load(mesh.x(i)) * dx;
    F[0] *= 0.5;
    F[n] *= 0.5;
    if (bc.is_traction()) F[n] += bc.end_force(mesh);
    return F;
}

nodal_field solve_static(const lattice_model& model, const boundary_condition& bc,
                         const body_load& load) {
    const int n = model.mesh().intervals();
    const Eigen::MatrixXd& K = model.K();
    const Eigen::VectorXd F = external_forces(model.mesh(), bc, load);
    nodal_field u = nodal_field::Zero(n + 1);

    // free nodes 1..m; node 0 clamped, node n prescribed under a displacement condition
    const int m = bc.is_traction() ? n : n - 1;
    Eigen::MatrixXd A = -K.block(1, 1, m, m);
    Eigen::VectorXd rhs = F.segment(1, m);
    if (!bc.is_traction()) {
        u[n] = bc.value;
        rhs += K.block(1, n, m, 1) * bc.value;
    }
    Eigen::LDLT<Eigen::MatrixXd> ldlt(A);
    const double rc = ldlt.info() == Eigen::Success ? ldlt.rcond() : 0.0;
    if (!(rc > 1e-13) || !ldlt.isPositive())
        throw solver_error("insufficient constraints: reduced lattice stiffness is singular "
                           "(rcond estimate " + format_number(rc) + ")", rc);
    u.segment(1, m) = ldlt.solve(rhs);
    if (!u.allFinite()) throw solver_error("lattice solve produced non-finite values", rc);
    return u;
}

double boundary_force(const lattice_model& model, const nodal_field& u, rod_end end) {
    const int i = end == rod_end::left ? 0 : model.mesh().intervals();
    return model.K().row(i).dot(u);
}

}  // namespace dorod
