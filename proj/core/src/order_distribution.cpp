#include "dorod/order_distribution.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dorod/errors.hpp"

namespace dorod {

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// shortest form that round-trips
std::string fmt_g(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

// 5-point Gauss-Legendre on [a,b]
template <class F>
double gauss5(F&& f, double a, double b) {
    static constexpr std::array<double, 5> x = {0.0, -0.5384693101056831, 0.5384693101056831,
                                                -0.9061798459386640, 0.9061798459386640};
    static constexpr std::array<double, 5> w = {0.5688888888888889, 0.4786286704993665,
                                                0.4786286704993665, 0.2369268850561891,
                                                0.2369268850561891};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int k = 0; k < 5; ++k) s += w[k] * f(c + h * x[k]);
    return s * h;
}

}  // namespace

order_distribution::order_distribution(distribution_kind k, double p0, double p1, int n_alpha)
    : kind_(k), p_{p0, p1}, n_alpha_(n_alpha) {
    if (k != distribution_kind::dirac && n_alpha < 1)
        throw domain_error("n_alpha must be positive");
    build();
}

order_distribution order_distribution::uniform(int n_alpha) {
    return {distribution_kind::uniform, 0, 0, n_alpha};
}

order_distribution order_distribution::linear(int n_alpha) {
    return {distribution_kind::linear, 0, 0, n_alpha};
}

order_distribution order_distribution::beta(double a, double b, int n_alpha) {
    if (!(a > 0 && b > 0)) throw domain_error("beta parameters must be positive");
    return {distribution_kind::beta, a, b, n_alpha};
}

order_distribution order_distribution::truncnormal(double loc, double scale, int n_alpha) {
    if (!(scale > 0) || !std::isfinite(loc)) throw domain_error("truncnormal needs scale > 0");
    return {distribution_kind::truncnormal, loc, scale, n_alpha};
}

order_distribution order_distribution::dirac(double alpha0) {
    if (!(alpha0 >= 0 && alpha0 <= 1)) throw domain_error("dirac order must lie in [0,1]");
    return {distribution_kind::dirac, alpha0, 0, 1};
}

void order_distribution::build() {
    switch (kind_) {
    case distribution_kind::beta:
        norm_ = std::beta(p_[0], p_[1]);
        break;
    case distribution_kind::truncnormal:
        norm_ = p_[1] * (normal_cdf((1 - p_[0]) / p_[1]) - normal_cdf(-p_[0] / p_[1]));
        if (!(norm_ > 0)) throw domain_error("truncnormal has no mass on [0,1]");
        break;
    default:
        break;
    }
    quad_.clear();
    if (is_delta()) {
        quad_.push_back({p_[0], 1.0});
        return;
    }
    const double h = step();
    for (int r = 0; r <= n_alpha_; ++r) {
        const double a = r * h;
        const double k = density(a);
        if (!std::isfinite(k))
            throw singular_integrand(a, "strength function is singular at alpha=" + fmt_g(a));
        const double w = (r == 0 || r == n_alpha_) ? 0.5 : 1.0;
        if (k != 0.0) quad_.push_back({a, w * k * h});
    }
}

double order_distribution::density(double a) const {
    if (!(a >= 0 && a <= 1)) throw domain_error("order outside [0,1]");
    switch (kind_) {
    case distribution_kind::uniform:
        return 1.0;
    case distribution_kind::linear:
        return 2.0 * a;
    case distribution_kind::beta:
        return std::pow(a, p_[0] - 1) * std::pow(1 - a, p_[1] - 1) / norm_;
    case distribution_kind::truncnormal: {
        const double z = (a - p_[0]) / p_[1];
        return std::exp(-0.5 * z * z) / (std::sqrt(2 * M_PI) * norm_);
    }
    case distribution_kind::dirac:
        break;
    }
    throw domain_error("dirac distribution has no pointwise density");
}

std::vector<double> order_distribution::nodes() const {
    if (is_delta()) return {p_[0]};
    std::vector<double> v(n_alpha_ + 1);
    for (int r = 0; r <= n_alpha_; ++r) v[r] = r * step();
    return v;
}

std::vector<double> order_distribution::trapezoid_weights() const {
    if (is_delta()) return {1.0};
    std::vector<double> w(n_alpha_ + 1, 1.0);
    w.front() = w.back() = 0.5;
    return w;
}

double order_distribution::discrete_mass() const {
    double s = 0;
    for (const auto& q : quad_) s += q.weight;
    return s;
}

std::string order_distribution::spec() const {
    switch (kind_) {
    case distribution_kind::uniform:
        return "uniform";
    case distribution_kind::linear:
        return "linear";
    case distribution_kind::beta:
        return "beta a=" + fmt_g(p_[0]) + " b=" + fmt_g(p_[1]);
    case distribution_kind::truncnormal:
        return "truncnormal loc=" + fmt_g(p_[0]) + " scale=" + fmt_g(p_[1]);
    case distribution_kind::dirac:
        return "dirac alpha=" + fmt_g(p_[0]);
    }
    return {};
}

order_distribution order_distribution::parse(std::string_view spec, int n_alpha) {
    std::istringstream in{std::string(spec)};
    std::string kind;
    in >> kind;
    std::transform(kind.begin(), kind.end(), kind.begin(), ::tolower);
    std::vector<std::pair<std::string, double>> kv;
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0)
            throw domain_error("malformed distribution parameter '" + tok + "'");
        char* end = nullptr;
        const std::string val = tok.substr(eq + 1);
        const double v = std::strtod(val.c_str(), &end);
        if (val.empty() || *end != '\0')
            throw domain_error("bad number in distribution parameter '" + tok + "'");
        kv.emplace_back(tok.substr(0, eq), v);
    }
    auto take = [&](const char* key, std::optional<double> fallback = {}) {
        for (auto it = kv.begin(); it != kv.end(); ++it)
            if (it->first == key) {
                const double v = it->second;
                kv.erase(it);
                return v;
            }
        if (fallback) return *fallback;
        throw domain_error(std::string("distribution '") + std::string(spec) +
                           "' is missing parameter '" + key + "'");
    };
    auto finish = [&](order_distribution d) {
        if (!kv.empty())
            throw domain_error("unknown distribution parameter '" + kv.front().first + "'");
        return d;
    };
    if (kind == "uniform") return finish(uniform(n_alpha));
    if (kind == "linear") return finish(linear(n_alpha));
    if (kind == "beta") {
        const double a = take("a"), b = take("b");
        return finish(beta(a, b, n_alpha));
    }
    if (kind == "truncnormal" || kind == "truncnorm") {
        const double loc = take("loc"), scale = take("scale");
        return finish(truncnormal(loc, scale, n_alpha));
    }
    if (kind == "dirac" || kind == "delta") return finish(dirac(take("alpha")));
    throw domain_error("unknown distribution kind '" + kind + "'");
}

double distributed_quadrature(const order_distribution& dist,
                              const std::function<double(double)>& f) {
    double s = 0.0;
    for (const auto& q : dist.quadrature()) {
        const double v = f(q.alpha);
        if (!std::isfinite(v))
            throw singular_integrand(q.alpha,
                                     "singular integrand at order node alpha=" + fmt_g(q.alpha));
        s += q.weight * v;
    }
    return s;
}

moments_t moments(const order_distribution& dist) {
    if (dist.is_delta()) {
        const double a = dist.param(0);
        return {a, a, a, 0.0};
    }
    constexpr int cells = 20000;
    const double h = 1.0 / cells;
    auto k = [&](double a) { return dist.density(a); };

    std::vector<double> cdf(cells + 1, 0.0);
    double m0 = 0, m1 = 0, m2 = 0;
    for (int c = 0; c < cells; ++c) {
        const double a = c * h, b = a + h;
        const double p = gauss5(k, a, b);
        cdf[c + 1] = cdf[c] + p;
        m1 += gauss5([&](double x) { return x * k(x); }, a, b);
        m2 += gauss5([&](double x) { return x * x * k(x); }, a, b);
    }
    m0 = cdf.back();
    const double mean = m1 / m0;
    const double var = m2 / m0 - mean * mean;

    // median: locate the cell, then bisect with an exact partial integral
    const double half = 0.5 * m0;
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), half);
    const int c = std::max<int>(1, static_cast<int>(it - cdf.begin())) - 1;
    double lo = c * h, hi = lo + h;
    for (int iter = 0; iter < 80 && hi - lo > 1e-15; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (cdf[c] + gauss5(k, c * h, mid) < half)
            lo = mid;
        else
            hi = mid;
    }
    const double median = 0.5 * (lo + hi);

    // mode: grid argmax refined by golden section on the bracketing cells
    double kmax = -1, kmin = 1e300, amax = 0;
    for (int i = 0; i <= cells; ++i) {
        const double a = i * h, v = k(a);
        if (v > kmax) kmax = v, amax = a;
        kmin = std::min(kmin, v);
    }
    std::optional<double> mode;
    if (kmax - kmin > 1e-12 * kmax) {
        double a = std::max(0.0, amax - h), b = std::min(1.0, amax + h);
        const double g = 0.5 * (std::sqrt(5.0) - 1);
        for (int iter = 0; iter < 100 && b - a > 1e-14; ++iter) {
            const double x1 = b - g * (b - a), x2 = a + g * (b - a);
            if (k(x1) < k(x2))
                a = x1;
            else
                b = x2;
        }
        mode = 0.5 * (a + b);
        if (k(amax) >= k(*mode)) mode = amax;
    }
    return {mean, median, mode, std::sqrt(var)};
}

}  // namespace dorod
