#include "dorod/lattice2d.hpp"

#include <array>
#include <cmath>

#include "dorod/errors.hpp"

namespace dorod {

layered_lattice::layered_lattice(double dx, double k0, strength_fn kappa, double alpha_min,
                                 double alpha_max, int n_layers, double horizon)
    : dx_(dx), k0_(k0) {
    if (!(dx > 0)) throw domain_error("lattice spacing must be positive");
    if (!(alpha_min > 0 && alpha_max < 1 && alpha_min < alpha_max))
        throw domain_error("layer orders must satisfy 0 < alpha_min < alpha_max < 1");
    if (n_layers < 1) throw domain_error("at least one layer is required");
    if (!(horizon >= dx)) throw domain_error("horizon must cover at least one spacing");
    dalpha_ = (alpha_max - alpha_min) / n_layers;
    window_ = static_cast<long>(std::ceil(horizon / dx - 1e-9));
    layers_.reserve(n_layers);
    for (int r = 0; r < n_layers; ++r) {
        const double a = alpha_min + (r + 0.5) * dalpha_;
        layers_.push_back({a, k0 * dx * kappa(a) * dalpha_});
    }
}

double layered_lattice::truncation_estimate(double u_max) const {
    const double H = window_ * dx_;
    double s = 0.0;
    for (const auto& l : layers_)
        s += l.f0 / dx_ * std::pow(H, -(1 + l.alpha)) / (1 + l.alpha);
    return 4.0 * u_max * s;
}

double pair_force(const layered_lattice& lat, int layer, long p, long q, const field_fn& u) {
    if (layer < 0 || layer >= static_cast<int>(lat.layers().size()))
        throw domain_error("layer index out of range");
    if (p == q) throw domain_error("coincident particles");
    const auto& l = lat.layers()[layer];
    const double xp = lat.position(p), xq = lat.position(q);
    return l.f0 * (u(xp) - u(xq)) / std::pow(std::abs(xp - xq), 2 + l.alpha);
}

double homogenized_force(const layered_lattice& lat, long p, const field_fn& u) {
    const long W = lat.window();
    const double dx = lat.dx();
    const double up = u(lat.position(p));
    std::vector<double> du(W + 1), logr(W + 1);
    for (long m = 1; m <= W; ++m) {
        du[m] = 2 * up - u(lat.position(p + m)) - u(lat.position(p - m));
        logr[m] = std::log(m * dx);
    }
    double f = 0.0;
    for (const auto& l : lat.layers()) {
        double s = 0.0;
        for (long m = W; m >= 1; --m) s += du[m] * std::exp(-(2 + l.alpha) * logr[m]);
        f += l.f0 * s;
    }
    return f;
}

double do_operator_sine(double k0, const strength_fn& kappa, double alpha_min, double alpha_max,
                        double x, double wavenumber, double amplitude) {
    static constexpr std::array<double, 10> gx = {
        -0.9739065285171717, -0.8650633666889845, -0.6794095682990244, -0.4333953941292472,
        -0.1488743389816312, 0.1488743389816312,  0.4333953941292472,  0.6794095682990244,
        0.8650633666889845,  0.9739065285171717};
    static constexpr std::array<double, 10> gw = {
        0.0666713443086881, 0.1494513491505806, 0.2190863625159820, 0.2692667193099963,
        0.2955242247147529, 0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
        0.1494513491505806, 0.0666713443086881};
    if (amplitude == 0.0 || wavenumber == 0.0) return 0.0;
    const double k = std::abs(wavenumber);
    // int_R (u(x) - u(x')) |x - x'|^{-(2+a)} dx' = 2 u(x) k^{1+a} int_0^inf (1 - cos t) t^{-(2+a)} dt
    auto inner = [&](double a) {
        const double b = 1 + a;
        const double c = -std::tgamma(-b) * std::cos(M_PI * b / 2);
        return 2 * std::pow(k, b) * c;
    };
    constexpr int panels = 32;
    const double h = (alpha_max - alpha_min) / panels;
    double s = 0.0;
    for (int pnl = 0; pnl < panels; ++pnl) {
        const double c = alpha_min + (pnl + 0.5) * h;
        for (int g = 0; g < 10; ++g) {
            const double a = c + 0.5 * h * gx[g];
            s += 0.5 * h * gw[g] * kappa(a) * inner(a);
        }
    }
    return k0 * amplitude * std::sin(wavenumber * x) * s;
}

std::vector<convergence_row> convergence_study(const convergence_setup& s,
                                               const std::vector<refinement>& steps) {
    std::vector<convergence_row> rows;
    const field_fn u = [&](double x) { return s.amplitude * std::sin(s.wavenumber * x); };
    for (const auto& st : steps) {
        const layered_lattice lat(st.dx, s.k0, s.kappa, s.alpha_min, s.alpha_max, st.n_layers,
                                  s.horizon);
        const long p = std::lround(s.x / st.dx);
        const double xp = lat.position(p);
        const double f = homogenized_force(lat, p, u);
        const double ref = do_operator_sine(s.k0, s.kappa, s.alpha_min, s.alpha_max, xp,
                                            s.wavenumber, s.amplitude);
        const double err = ref != 0.0 ? std::abs(f - ref) / std::abs(ref) : std::abs(f - ref);
        rows.push_back({st.dx, lat.d_alpha(), lat.window(), f, ref, err});
    }
    return rows;
}

}  // namespace dorod
