#pragma once

#include <stdexcept>
#include <string>

namespace dorod {

// Bad argument outside an operator's admissible range (order, node index, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Non-finite integrand at an order-quadrature node.
class singular_integrand : public std::runtime_error {
public:
    singular_integrand(double alpha, const std::string& what)
        : std::runtime_error(what), alpha_(alpha) {}
    double alpha() const noexcept { return alpha_; }

private:
    double alpha_;
};

class solver_error : public std::runtime_error {
public:
    solver_error(const std::string& what, double rcond)
        : std::runtime_error(what), rcond_(rcond) {}
    // reciprocal condition estimate of the reduced system, 0 if singular
    double rcond() const noexcept { return rcond_; }

private:
    double rcond_;
};

class config_error : public std::runtime_error {
public:
    config_error(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace dorod
