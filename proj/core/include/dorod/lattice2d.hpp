#pragma once

#include <functional>
#include <vector>

namespace dorod {

struct lattice_layer {
    double alpha;
    double f0;  // F0^r = k0 dx kappa(alpha_r) d_alpha
};

using strength_fn = std::function<double(double)>;
using field_fn = std::function<double(double)>;

// Stack of 1D power-law layers sharing one axial displacement per column.
// Layer orders sit at the midpoints of n_layers equal slices of [alpha_min, alpha_max].
// The axial sums run over |p - q| <= window, window = ceil(horizon / dx).
class layered_lattice {
public:
    layered_lattice(double dx, double k0, strength_fn kappa, double alpha_min, double alpha_max,
                    int n_layers, double horizon);

    double dx() const noexcept { return dx_; }
    double k0() const noexcept { return k0_; }
    double d_alpha() const noexcept { return dalpha_; }
    long window() const noexcept { return window_; }
    double position(long p) const noexcept { return p * dx_; }
    const std::vector<lattice_layer>& layers() const noexcept { return layers_; }

    // bound on the dropped tail sum_{|q-p| > W} for a field bounded by u_max
    double truncation_estimate(double u_max) const;

private:
    double dx_, k0_, dalpha_;
    long window_;
    std::vector<lattice_layer> layers_;
};

// F0^r (u_p - u_q) / |x_p - x_q|^(2 + alpha_r)
double pair_force(const layered_lattice& lat, int layer, long p, long q, const field_fn& u);

// sum over layers and neighbors within the window
double homogenized_force(const layered_lattice& lat, long p, const field_fn& u);

// k0 int kappa(a) int (u(x) - u(x')) / |x - x'|^(2+a) dx' da for u = amp * sin(k x),
// using the closed form of the inner integral and Gauss-Legendre in alpha.
double do_operator_sine(double k0, const strength_fn& kappa, double alpha_min, double alpha_max,
                        double x, double wavenumber, double amplitude = 1.0);

struct refinement {
    double dx;
    int n_layers;
};

struct convergence_row {
    double dx;
    double d_alpha;
    long window;
    double lattice;
    double reference;
    double rel_error;
};

struct convergence_setup {
    double k0 = 1.0;
    strength_fn kappa = [](double) { return 1.0; };
    double alpha_min = 0.25;
    double alpha_max = 0.75;
    double horizon = 200.0;
    double x = 0.5;          // evaluation point
    double wavenumber = 3.141592653589793;
    double amplitude = 1.0;  // u = amplitude * sin(wavenumber x)
};

std::vector<convergence_row> convergence_study(const convergence_setup& setup,
                                               const std::vector<refinement>& steps);

}  // namespace dorod
