#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dorod/errors.hpp"

namespace dorod {

using nodal_field = Eigen::VectorXd;

// Uniform grid x_i = i * dx on [0, L], i = 0..n.
class mesh1d {
public:
    mesh1d(double length, int intervals) : length_(length), n_(intervals) {
        if (!(length > 0)) throw domain_error("mesh length must be positive");
        if (intervals < 1) throw domain_error("mesh needs at least one interval");
    }

    double length() const noexcept { return length_; }
    int intervals() const noexcept { return n_; }
    int node_count() const noexcept { return n_ + 1; }
    double spacing() const noexcept { return length_ / n_; }
    double x(int i) const noexcept { return i == n_ ? length_ : i * spacing(); }

    Eigen::VectorXd coordinates() const {
        Eigen::VectorXd v(n_ + 1);
        for (int i = 0; i <= n_; ++i) v[i] = x(i);
        return v;
    }
    std::vector<double> nodes() const {
        std::vector<double> v(n_ + 1);
        for (int i = 0; i <= n_; ++i) v[i] = x(i);
        return v;
    }
    std::vector<double> midpoints() const {
        std::vector<double> v(n_);
        for (int i = 0; i < n_; ++i) v[i] = (i + 0.5) * spacing();
        return v;
    }

    friend bool operator==(const mesh1d& a, const mesh1d& b) {
        return a.length_ == b.length_ && a.n_ == b.n_;
    }

private:
    double length_;
    int n_;
};

}  // namespace dorod
