#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dorod {

enum class distribution_kind { uniform, linear, beta, truncnormal, dirac };

// One node of the order quadrature; weight already folds in w_r * kappa(alpha_r) * d_alpha.
struct order_node {
    double alpha;
    double weight;
};

struct moments_t {
    double mean;
    double median;
    std::optional<double> mode;  // empty for a flat density
    double stddev;
};

// Strength function kappa(alpha) on [0,1] together with its trapezoid grid.
class order_distribution {
public:
    static order_distribution uniform(int n_alpha = 100);
    static order_distribution linear(int n_alpha = 100);
    static order_distribution beta(double a, double b, int n_alpha = 100);
    static order_distribution truncnormal(double loc, double scale, int n_alpha = 100);
    static order_distribution dirac(double alpha0);

    // "uniform", "linear", "beta a=2 b=5", "truncnormal loc=0.9 scale=0.15", "dirac alpha=0.7"
    static order_distribution parse(std::string_view spec, int n_alpha = 100);
    std::string spec() const;

    distribution_kind kind() const noexcept { return kind_; }
    bool is_delta() const noexcept { return kind_ == distribution_kind::dirac; }
    int n_alpha() const noexcept { return n_alpha_; }
    double step() const noexcept { return 1.0 / n_alpha_; }
    double param(int k) const noexcept { return p_[k]; }

    // kappa(alpha); throws for the delta
    double density(double alpha) const;

    // alpha_r = r / n_alpha, r = 0..n_alpha
    std::vector<double> nodes() const;
    // trapezoid weights w_r (1/2 at the ends, 1 inside)
    std::vector<double> trapezoid_weights() const;
    // (alpha_r, w_r kappa(alpha_r) d_alpha); zero-weight nodes dropped. Delta: {(alpha0, 1)}.
    const std::vector<order_node>& quadrature() const noexcept { return quad_; }

    // sum_r w_r kappa(alpha_r) d_alpha
    double discrete_mass() const;

    friend bool operator==(const order_distribution& a, const order_distribution& b) {
        return a.kind_ == b.kind_ && a.n_alpha_ == b.n_alpha_ && a.p_[0] == b.p_[0] &&
               a.p_[1] == b.p_[1];
    }

private:
    order_distribution(distribution_kind k, double p0, double p1, int n_alpha);
    void build();

    distribution_kind kind_;
    double p_[2];
    int n_alpha_;
    double norm_ = 1.0;  // truncnormal renormalization / beta function
    std::vector<order_node> quad_;
};

// Sum_r w_r kappa(alpha_r) f(alpha_r) d_alpha; f(alpha0) for the delta.
double distributed_quadrature(const order_distribution& dist,
                              const std::function<double(double)>& f);

moments_t moments(const order_distribution& dist);

// Strength function of the local reference: a delta just below alpha = 1.
inline constexpr double local_alpha = 1.0 - 1e-3;

}  // namespace dorod
